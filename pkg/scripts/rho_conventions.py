"""Count corpus matrices whose multiplicity fails the positivity axiom under
each sign convention for rho(A, B).

Matrix multiplicities are always arithmetic, so any failure is a failure of
the convention rather than of the data.

    python3 scripts/rho_conventions.py
"""
import argparse

from oam.arithmetic import Axiom, RhoSign, check_molecule_axioms
from oam.corpus import CorpusConfig, matrix_corpus
from oam.realization import matrix_to_oam


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=200)
    p.add_argument("--seed", type=int, default=CorpusConfig.seed)
    a = p.parse_args()
    ams = [matrix_to_oam(mx).arithmetic for mx in matrix_corpus(CorpusConfig(size=a.size, seed=a.seed))]
    for sign in RhoSign:
        bad = sum(any(v.axiom is Axiom.POSITIVITY for v in check_molecule_axioms(am, sign)) for am in ams)
        print(f"{sign.value:<11} {bad:>4} / {len(ams)} fail rho >= 0")


if __name__ == "__main__":
    main()
