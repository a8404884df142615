"""Seeded random integer matrices and the fixtures used across tests and scripts."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .linalg import rank
from .realization import IntegerMatrix


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 200
    max_rank: int = 4
    max_n: int = 7
    entry_bound: int = 5
    seed: int = 20190124


def random_matrix(rng: random.Random, r: int, n: int, bound: int) -> IntegerMatrix:
    """Uniform entries in [-bound, bound], resampled until of full row rank."""
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(r)]
        if rank(rows) == r:
            return IntegerMatrix.of(rows, n)


def matrix_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[IntegerMatrix]:
    rng = random.Random(cfg.seed)
    out = []
    for _ in range(cfg.size):
        r = rng.randint(1, cfg.max_rank)
        n = rng.randint(max(r, 1), cfg.max_n)
        out.append(random_matrix(rng, r, n, cfg.entry_bound))
    return out


def example_matrix(k: int = 3) -> IntegerMatrix:
    """[[1, 1, 2], [0, k, k]]. Setting m(E) = 1 in its arithmetic matroid gives
    an orientable arithmetic matroid without the GCD property."""
    return IntegerMatrix.of([[1, 1, 2], [0, k, k]])
