"""Enumerate every orientation of each corpus arithmetic matroid and check
they form a single re-orientation class (up to global sign).

    python3 scripts/uniqueness_sweep.py --max-n 6
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from oam.corpus import CorpusConfig, matrix_corpus
from oam.realization import matrix_to_oam
from oam.search import brute_force_witness, enumerate_orientations, equivalent_orientations


@dataclass
class SweepConfig:
    max_n: int = 6
    corpus: CorpusConfig = CorpusConfig()


def sweep(cfg: SweepConfig) -> dict:
    counts = Counter()
    mismatched = []
    for idx, mx in enumerate(matrix_corpus(cfg.corpus)):
        if mx.n > cfg.max_n:
            continue
        oam = matrix_to_oam(mx)
        found = list(enumerate_orientations(oam.arithmetic))
        counts[len(found)] += 1
        for chi in found:
            w = equivalent_orientations(oam.chi, chi, oam.arithmetic)
            if w is None or w != brute_force_witness(oam.chi, chi):
                mismatched.append(idx)
                break
    return {"histogram": dict(sorted(counts.items())), "mismatched": mismatched}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--size", type=int, default=200)
    p.add_argument("--seed", type=int, default=CorpusConfig.seed)
    a = p.parse_args()
    cfg = SweepConfig(a.max_n, CorpusConfig(size=a.size, seed=a.seed))
    t = time.perf_counter()
    res = sweep(cfg)
    print("orientations per matroid -> number of matroids")
    for k, v in res["histogram"].items():
        print(f"  {k:>5} -> {v}")
    print(f"witness mismatches: {res['mismatched'] or 'none'}")
    print(f"{time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
