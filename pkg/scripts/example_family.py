"""The family [[1, 1, 2], [0, k, k]] with m(E) overwritten by 1.

For each k, report whether the modified multiplicity is still arithmetic,
whether it has the GCD and strong GCD properties, and how many orientations
it has.

    python3 scripts/example_family.py --k-max 8
"""
import argparse

from oam.arithmetic import ArithmeticMatroid, check_arithmetic, gcd_property, strong_gcd_property
from oam.corpus import example_matrix
from oam.realization import matrix_to_oam
from oam.search import enumerate_orientations, find_orientation


def row(k: int) -> tuple:
    oam = matrix_to_oam(example_matrix(k))
    full = oam.matroid.ground
    am = ArithmeticMatroid(oam.matroid, oam.m.replace(full, 1))
    return (k, oam.m(full), not check_arithmetic(am), gcd_property(am), strong_gcd_property(am),
            find_orientation(am) is not None, len(list(enumerate_orientations(am))))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k-max", type=int, default=8)
    a = p.parse_args()
    print("k  m(E)  arithmetic  gcd    strong_gcd  orientable  #orientations")
    for k, me, arith, g, sg, ori, cnt in map(row, range(1, a.k_max + 1)):
        print(f"{k:<2} {me:>4}  {arith!s:<10}  {g!s:<5}  {sg!s:<10}  {ori!s:<10}  {cnt}")


if __name__ == "__main__":
    main()
