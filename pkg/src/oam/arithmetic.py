"""Multiplicity functions and the arithmetic matroid axioms."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Callable, Iterable, NamedTuple

from . import bits
from .matroid import Matroid, MatroidError, contract, delete, dual


@dataclass(frozen=True)
class Multiplicity:
    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if len(self.table) != 1 << self.n:
            raise ValueError(f"multiplicity table needs {1 << self.n} entries, got {len(self.table)}")
        bad = next((s for s, v in enumerate(self.table) if v < 1), None)
        if bad is not None:
            raise ValueError(f"m({bits.fmt(bad)}) = {self.table[bad]} is not a positive integer")

    @classmethod
    def constant(cls, n: int, value: int = 1) -> "Multiplicity":
        return cls(n, (value,) * (1 << n))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], int]) -> "Multiplicity":
        return cls(n, tuple(fn(s) for s in range(1 << n)))

    def __call__(self, s: int) -> int:
        return self.table[s]

    def replace(self, s: int, value: int) -> "Multiplicity":
        t = list(self.table)
        t[s] = value
        return Multiplicity(self.n, tuple(t))


@dataclass(frozen=True)
class ArithmeticMatroid:
    matroid: Matroid
    m: Multiplicity

    def __post_init__(self):
        if self.matroid.n != self.m.n:
            raise MatroidError("matroid and multiplicity disagree on n")

    @property
    def n(self) -> int:
        return self.matroid.n

    @property
    def r(self) -> int:
        return self.matroid.r


class Axiom(str, Enum):
    DEPENDENT = "divisibility-dependent"
    INDEPENDENT = "divisibility-independent"
    PRODUCT = "molecule-product"
    POSITIVITY = "molecule-positivity"


class Violation(NamedTuple):
    axiom: Axiom
    a: int
    b: int  # A + x for axioms 1-2, B for molecule axioms

    def describe(self) -> dict:
        return {"axiom": self.axiom.value, "A": list(bits.elements(self.a)),
                "B": list(bits.elements(self.b))}


def check_divisibility(am: ArithmeticMatroid) -> list[Violation]:
    """Axioms 1 and 2: m(A+x) | m(A) when x depends on A, m(A) | m(A+x) otherwise."""
    mat, m = am.matroid, am.m.table
    out = []
    for a in range(1 << am.n):
        ra = mat.rank(a)
        for e in range(am.n):
            x = 1 << e
            if a & x:
                continue
            ax = a | x
            if mat.rank(ax) == ra:
                if m[a] % m[ax]:
                    out.append(Violation(Axiom.DEPENDENT, a, ax))
            elif m[ax] % m[a]:
                out.append(Violation(Axiom.INDEPENDENT, a, ax))
    return out


class RhoSign(str, Enum):
    """Sign conventions for the alternating sum defining rho(A, B).

    MOLECULE uses (-1)^(|A| + |B \\ cl(A)| - |S|), the convention under which
    matrix multiplicities are nonnegative. LITERAL uses (-1)^(|cl(A) & B| - |S|),
    COMPLEMENT uses (-1)^(|B| - |S|).
    """

    MOLECULE = "molecule"
    LITERAL = "literal"
    COMPLEMENT = "complement"


def _rho_exponent(mat: Matroid, a: int, b: int, sign: RhoSign) -> int:
    cl = mat.closure(a)
    if sign is RhoSign.MOLECULE:
        return (a | (b & ~cl)).bit_count()
    if sign is RhoSign.LITERAL:
        return (cl & b).bit_count()
    return b.bit_count()


def rho(am: ArithmeticMatroid, a: int, b: int, sign: RhoSign = RhoSign.MOLECULE) -> int:
    if not am.matroid.is_molecule(a, b):
        raise MatroidError(f"({bits.fmt(a)}, {bits.fmt(b)}) is not a molecule")
    return _rho(am, a, b, _rho_exponent(am.matroid, a, b, sign))


def _rho(am: ArithmeticMatroid, a: int, b: int, top: int) -> int:
    m = am.m.table
    total = 0
    for t in bits.subsets_of(b & ~a):
        s = a | t
        total += -m[s] if (top - s.bit_count()) & 1 else m[s]
    return total


def molecules(mat: Matroid) -> Iterable[tuple[int, int]]:
    g = mat.ground
    for a in range(1 << mat.n):
        cl = mat.closure(a)
        ra = mat.rank(a)
        for t in bits.subsets_of(g & ~a):
            b = a | t
            if mat.rank(b) - ra == (b & ~cl).bit_count():
                yield a, b


def check_molecule_axioms(am: ArithmeticMatroid, sign: RhoSign = RhoSign.MOLECULE) -> list[Violation]:
    """Axioms 3 and 4 over every molecule."""
    mat, m = am.matroid, am.m.table
    out = []
    for a, b in molecules(mat):
        if a == b:
            continue
        cl = mat.closure(a)
        if m[a] * m[b] != m[b & cl] * m[(b & ~cl) | a]:
            out.append(Violation(Axiom.PRODUCT, a, b))
        if _rho(am, a, b, _rho_exponent(mat, a, b, sign)) < 0:
            out.append(Violation(Axiom.POSITIVITY, a, b))
    return out


def check_arithmetic(am: ArithmeticMatroid, sign: RhoSign = RhoSign.MOLECULE) -> list[Violation]:
    return check_divisibility(am) + check_molecule_axioms(am, sign)


def gcd_witness(am: ArithmeticMatroid) -> int | None:
    """First A (by bitmask) where m(A) differs from the gcd over its maximal
    independent subsets, or None."""
    mat, m = am.matroid, am.m.table
    for a in range(1 << am.n):
        ra = mat.rank(a)
        g = 0
        for s in bits.subsets_of(a):
            if s.bit_count() == ra and mat.rank(s) == ra:
                g = gcd(g, m[s])
        if g != m[a]:
            return a
    return None


def gcd_property(am: ArithmeticMatroid) -> bool:
    return gcd_witness(am) is None


def strong_gcd_value(mat: Matroid, basis_value: Callable[[int], int], a: int) -> int:
    ra = mat.rank(a)
    g = 0
    for b in mat.bases:
        if (b & a).bit_count() == ra:
            g = gcd(g, basis_value(b))
    return g


def strong_gcd_witness(am: ArithmeticMatroid) -> int | None:
    m = am.m.table
    for a in range(1 << am.n):
        if strong_gcd_value(am.matroid, m.__getitem__, a) != m[a]:
            return a
    return None


def strong_gcd_property(am: ArithmeticMatroid) -> bool:
    return strong_gcd_witness(am) is None


def strong_gcd_extension(mat: Matroid, basis_value: Callable[[int], int]) -> Multiplicity:
    """The unique strong-GCD multiplicity with the given values on bases."""
    return Multiplicity.from_function(mat.n, lambda a: strong_gcd_value(mat, basis_value, a))


def m_delete(m: Multiplicity, a: int) -> Multiplicity:
    keep = bits.full(m.n) & ~a
    k = bits.size(keep)
    return Multiplicity(k, tuple(m.table[bits.expand(s, keep)] for s in range(1 << k)))


def m_contract(m: Multiplicity, a: int) -> Multiplicity:
    keep = bits.full(m.n) & ~a
    k = bits.size(keep)
    return Multiplicity(k, tuple(m.table[a | bits.expand(s, keep)] for s in range(1 << k)))


def m_dual(m: Multiplicity) -> Multiplicity:
    g = bits.full(m.n)
    return Multiplicity(m.n, tuple(m.table[g & ~s] for s in range(1 << m.n)))


def am_delete(am: ArithmeticMatroid, a: int) -> ArithmeticMatroid:
    return ArithmeticMatroid(delete(am.matroid, a), m_delete(am.m, a))


def am_contract(am: ArithmeticMatroid, a: int) -> ArithmeticMatroid:
    return ArithmeticMatroid(contract(am.matroid, a), m_contract(am.m, a))


def am_dual(am: ArithmeticMatroid) -> ArithmeticMatroid:
    return ArithmeticMatroid(dual(am.matroid), m_dual(am.m))
