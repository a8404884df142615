"""Exact integer linear algebra: Bareiss determinants and Smith normal form.

Matrices are lists of rows of Python ints (or Fractions for ``det``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

Matrix = list[list[int]]


def identity(k: int) -> Matrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def columns(m: Sequence[Sequence], idx: Sequence[int]) -> list[list]:
    """Submatrix on 0-based column indices ``idx``."""
    return [[row[j] for j in idx] for row in m]


def det(m: Sequence[Sequence]) -> int | Fraction:
    """Determinant by fraction-free Bareiss elimination.

    Integer input gives an exact int; Fraction entries are handled exactly too.
    """
    k = len(m)
    if k == 0:
        return 1
    if any(len(row) != k for row in m):
        raise ValueError("det of a non-square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for p in range(k - 1):
        if a[p][p] == 0:
            for i in range(p + 1, k):
                if a[i][p] != 0:
                    a[p], a[i] = a[i], a[p]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[p][p]
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                num = a[i][j] * piv - a[i][p] * a[p][j]
                a[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            a[i][p] = 0
        prev = piv
    return sign * a[k - 1][k - 1]


def rank(m: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free elimination."""
    if not m or not m[0]:
        return 0
    a = [list(row) for row in m]
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            if a[i][c]:
                f, g = a[r][c], a[i][c]
                a[i] = [f * x - g * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


@dataclass(frozen=True)
class SmithForm:
    """``left @ matrix @ right == diagonal`` with unimodular ``left``/``right``.

    ``left_inv`` and ``right_inv`` are the exact inverses, so
    ``matrix == left_inv @ diagonal @ right_inv``.
    """

    divisors: tuple[int, ...]
    left: Matrix
    right: Matrix
    left_inv: Matrix
    right_inv: Matrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d)

    def diagonal(self, rows: int, cols: int) -> Matrix:
        d = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(self.divisors):
            d[i][i] = v
        return d


def smith_normal_form(m: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    """Smith normal form with transforms.

    Pivot on the smallest nonzero absolute value of the active block, ties to
    the lowest row then lowest column. ``ncols`` is needed only for 0-row input.
    """
    rows = len(m)
    cols = len(m[0]) if rows else (ncols or 0)
    a = [list(map(int, row)) for row in m]
    L, Linv = identity(rows), identity(rows)
    R, Rinv = identity(cols), identity(cols)

    # Each elementary op is applied to ``a`` and mirrored on the transforms.
    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        L[i], L[j] = L[j], L[i]
        for row in Linv:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        L[dst] = [x + q * y for x, y in zip(L[dst], L[src])]
        for row in Linv:
            row[src] -= q * row[dst]

    def neg_row(i):
        a[i] = [-x for x in a[i]]
        L[i] = [-x for x in L[i]]
        for row in Linv:
            row[i] = -row[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]
        Rinv[i], Rinv[j] = Rinv[j], Rinv[i]

    def add_col(dst, src, q):  # col[dst] += q * col[src]
        for row in a:
            row[dst] += q * row[src]
        for row in R:
            row[dst] += q * row[src]
        Rinv[src] = [x - q * y for x, y in zip(Rinv[src], Rinv[dst])]

    divisors = []
    for k in range(min(rows, cols)):
        while True:
            best = None
            for i in range(k, rows):
                for j in range(k, cols):
                    v = abs(a[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, i, j = best
            if i != k:
                swap_rows(i, k)
            if j != k:
                swap_cols(j, k)
            piv = a[k][k]
            done = True
            for i in range(k + 1, rows):
                if a[i][k]:
                    add_row(i, k, -(a[i][k] // piv))
                    if a[i][k]:
                        done = False
            for j in range(k + 1, cols):
                if a[k][j]:
                    add_col(j, k, -(a[k][j] // piv))
                    if a[k][j]:
                        done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(k + 1, rows) for j in range(k + 1, cols)
                        if a[i][j] % piv), None)
            if bad is None:
                break
            add_row(k, bad[0], 1)
        if a[k][k] < 0:
            neg_row(k)
        divisors.append(a[k][k])
    return SmithForm(tuple(divisors), L, R, Linv, Rinv)


def elementary_divisors(m: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[int, ...]:
    return smith_normal_form(m, ncols).divisors


def torsion_order(m: Sequence[Sequence[int]]) -> int:
    """Order of the torsion subgroup of Z^rows / (column span of ``m``)."""
    if not m or not m[0]:
        return 1
    return prod(d for d in elementary_divisors(m) if d)


def determinantal_divisor(m: Sequence[Sequence[int]], k: int) -> int:
    """gcd of all k x k minors (brute force)."""
    from itertools import combinations

    if k == 0:
        return 1
    g = 0
    for ri in combinations(range(len(m)), k):
        for ci in combinations(range(len(m[0])), k):
            g = gcd(g, det([[m[i][j] for j in ci] for i in ri]))
    return abs(g)
