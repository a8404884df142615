"""Integer matrices <-> oriented arithmetic matroids."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

from . import bits
from .arithmetic import ArithmeticMatroid, Multiplicity, strong_gcd_witness
from .bundle import OrientedArithmeticMatroid
from .chirotope import Chirotope
from .gpfunction import chi_m
from .linalg import Matrix, columns, det, matmul, rank, smith_normal_form, torsion_order
from .matroid import Matroid


class RealizationError(ValueError):
    pass


class StrongGCDError(RealizationError):
    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"strong GCD property fails at A = {bits.fmt(witness)}")


@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple[tuple[int, ...], ...]
    n: int

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], n: int | None = None) -> "IntegerMatrix":
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if n is None:
            if not rows:
                raise ValueError("a 0-row matrix needs an explicit column count")
            n = len(rows[0])
        if n < 1:
            raise ValueError("matrix needs at least one column")
        if any(len(row) != n for row in rows):
            raise ValueError("ragged matrix")
        return cls(rows, n)

    @property
    def r(self) -> int:
        return len(self.rows)

    def as_lists(self) -> Matrix:
        return [list(row) for row in self.rows]

    def column_block(self, s: int) -> Matrix:
        return columns(self.rows, [e - 1 for e in bits.elements(s)])


def row_reduce(mat: IntegerMatrix) -> IntegerMatrix:
    """Drop the kernel of the row space: same multiplicities and matroid,
    chirotope up to a global sign."""
    snf = smith_normal_form(mat.as_lists(), mat.n)
    k = snf.rank
    reduced = matmul(snf.left, mat.as_lists())[:k]
    return IntegerMatrix.of(reduced, mat.n)


def matrix_multiplicity(mat: IntegerMatrix) -> Multiplicity:
    return Multiplicity.from_function(mat.n, lambda s: torsion_order(mat.column_block(s)) if s else 1)


def matrix_matroid(mat: IntegerMatrix) -> Matroid:
    rk = rank(mat.as_lists())
    bases = frozenset(s for s in bits.k_subsets(mat.n, rk) if rank(mat.column_block(s)) == rk)
    return Matroid(mat.n, bases)


def matrix_chirotope(mat: IntegerMatrix) -> Chirotope:
    r = mat.r
    signs = {}
    for s in bits.k_subsets(mat.n, r):
        d = det(mat.column_block(s))
        if d:
            signs[s] = 1 if d > 0 else -1
    if not signs:
        raise RealizationError("matrix has rank below its row count; row-reduce it first")
    return Chirotope(mat.n, r, signs)


def matrix_to_oam(mat: IntegerMatrix) -> OrientedArithmeticMatroid:
    chi = matrix_chirotope(mat)
    matroid = Matroid(mat.n, frozenset(chi.signs))
    return OrientedArithmeticMatroid(matroid, matrix_multiplicity(mat), chi)


@dataclass(frozen=True)
class RationalRealization:
    vectors: tuple[tuple[Fraction, ...], ...]  # v_e for e = 1..n
    anchor: int

    @property
    def r(self) -> int:
        return bits.size(self.anchor)

    def matrix(self) -> list[list[Fraction]]:
        """r x n matrix with v_e as column e."""
        return [[v[i] for v in self.vectors] for i in range(self.r)]

    def minor(self, s: int) -> Fraction:
        return det([[self.vectors[e - 1][i] for e in bits.elements(s)] for i in range(self.r)])


def rational_realization(oam: OrientedArithmeticMatroid) -> RationalRealization:
    """v_e = (chi m(b_1, ..., e, ..., b_r))_i for the anchor basis B0.

    Asserts det N[A] = chi m(B0)^(r-1) chi m(A) for every r-subset A, first on
    B0 and its neighbours, then everywhere.
    """
    f = chi_m(oam.chi, oam.m)
    mat = oam.matroid
    b0 = mat.anchor
    bt = bits.elements(b0)
    r = len(bt)
    vectors = tuple(
        tuple(Fraction(f.value(bt[:i] + (e,) + bt[i + 1:])) for i in range(r))
        for e in range(1, mat.n + 1))
    real = RationalRealization(vectors, b0)
    scale = Fraction(f(b0)) ** (r - 1)
    near = [s for s in bits.k_subsets(mat.n, r) if (s ^ b0).bit_count() <= 2]
    far = [s for s in bits.k_subsets(mat.n, r) if (s ^ b0).bit_count() > 2]
    for s in near + far:
        if real.minor(s) != scale * f(s):
            raise RealizationError(
                f"det N[{bits.fmt(s)}] = {real.minor(s)} but chi m(B0)^(r-1) chi m = {scale * f(s)}")
    return real


@dataclass(frozen=True)
class IntegerRepresentation:
    lattice_basis: tuple[tuple[int, ...], ...]  # r x r, columns span Lambda
    coordinates: tuple[tuple[int, ...], ...]  # r x n, column e = v_e in that basis
    torsion: int  # |G|
    elementary_divisors: tuple[int, ...]  # of G
    index: int  # [Z^r : Lambda]
    anchor: int
    n: int

    def multiplicity(self, s: int) -> int:
        block = columns(self.coordinates, [e - 1 for e in bits.elements(s)])
        return self.torsion * torsion_order(block)


def integer_representation(oam: OrientedArithmeticMatroid) -> IntegerRepresentation:
    am = ArithmeticMatroid(oam.matroid, oam.m)
    w = strong_gcd_witness(am)
    if w is not None:
        raise StrongGCDError(w)
    m = oam.m.table
    full = bits.full(oam.n)
    if m[0] != m[full]:
        raise RealizationError(f"m(empty) = {m[0]} differs from m(E) = {m[full]}")
    real = rational_realization(oam)
    r = real.r
    n = oam.n
    if r == 0:
        return IntegerRepresentation((), (), m[0], (m[0],) if m[0] > 1 else (), 1, 0, n)
    nmat = [[int(x) for x in row] for row in real.matrix()]
    snf = smith_normal_form(nmat)
    d = snf.divisors
    if any(v == 0 for v in d):
        raise RealizationError("realization vectors do not span Q^r")
    basis = [[snf.left_inv[i][k] * d[k] for k in range(r)] for i in range(r)]
    coords = [row[:] for row in snf.right_inv[:r]]
    index = prod(d)
    expected = oam.m(oam.matroid.anchor) ** (r - 1) * m[full]
    if index != expected:
        raise RealizationError(f"[Z^r : Lambda] = {index}, expected m(B0)^(r-1) m(E) = {expected}")
    return IntegerRepresentation(tuple(map(tuple, basis)), tuple(map(tuple, coords)),
                                 m[0], (m[0],) if m[0] > 1 else (), index, oam.matroid.anchor, n)


def representation_mismatches(rep: IntegerRepresentation, am: ArithmeticMatroid) -> list[int]:
    """Subsets where the represented multiplicity differs from ``am``."""
    if rep.n != am.n:
        return [bits.full(am.n)]
    return [s for s in range(1 << am.n) if rep.multiplicity(s) != am.m(s)]


def verify_representation(rep: IntegerRepresentation, am: ArithmeticMatroid) -> bool:
    return not representation_mismatches(rep, am)


def lattice_index(vectors: Sequence[Sequence[int]]) -> int:
    """[Z^r : lattice spanned by the columns], 0 if not full rank (via minors gcd)."""
    r = len(vectors)
    if r == 0:
        return 1
    g = 0
    for s in bits.k_subsets(len(vectors[0]), r):
        g = gcd(g, det(columns(vectors, [e - 1 for e in bits.elements(s)])))
    return abs(g)
