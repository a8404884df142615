"""GP-functions, the generalised Leibniz formula and propagation from BG<=1."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from . import bits
from .arithmetic import Multiplicity
from .chirotope import Chirotope
from .linalg import det

Number = int | Fraction


@dataclass(frozen=True, eq=False)
class GPFunction:
    """Alternating function on r-tuples, stored on sorted r-subsets.

    Missing keys are zero. Integral values are kept as ``int``.
    """

    n: int
    r: int
    values: Mapping[int, Number] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for s, v in self.values.items():
            if bits.size(s) != self.r:
                raise ValueError(f"key {bits.fmt(s)} is not an {self.r}-subset")
            if v:
                clean[s] = _normalise(v)
        object.__setattr__(self, "values", clean)

    def __eq__(self, other):
        if not isinstance(other, GPFunction):
            return NotImplemented
        return (self.n, self.r, self.values) == (other.n, other.r, other.values)

    def __call__(self, s: int) -> Number:
        return self.values.get(s, 0)

    def value(self, tup: Iterable[int]) -> Number:
        sign, s = bits.tuple_to_mask(tup)
        return sign * self.values.get(s, 0) if sign else 0

    def scale(self, c: Number) -> "GPFunction":
        return GPFunction(self.n, self.r, {s: c * v for s, v in self.values.items()})


def _normalise(v: Number) -> Number:
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def chi_m(chi: Chirotope, m: Multiplicity) -> GPFunction:
    """Pointwise product chi * m."""
    return GPFunction(chi.n, chi.r, {s: v * m.table[s] for s, v in chi.signs.items()})


def gp_violations(f: GPFunction, limit: int | None = None) -> list[tuple[tuple, tuple]]:
    """Sorted (x, y) pairs where the Pluecker-type sum of ``f`` is nonzero."""
    out = []
    if f.r == 0:
        return out
    for x in bits.k_subsets(f.n, f.r - 1):
        xs = bits.elements(x)
        for y in bits.k_subsets(f.n, f.r + 1):
            ys = bits.elements(y)
            total = 0
            for i, yi in enumerate(ys):
                term = f.value((yi,) + xs) * f(y & ~(1 << (yi - 1)))
                total += -term if i & 1 else term
            if total:
                out.append((xs, ys))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def is_gp_function(f: GPFunction) -> bool:
    return not gp_violations(f, limit=1)


def _substitute(a: Sequence[int], i: int, e: int) -> tuple[int, ...]:
    return tuple(a[:i]) + (e,) + tuple(a[i + 1:])


def leibniz_rhs(f: GPFunction, a: Sequence[int], b: Sequence[int]) -> Number:
    """Signed sum over permutations s of prod_i f(a with a_i replaced by b_s(i)).

    For a GP-function this equals f(a)^(r-1) * f(b).
    """
    r = len(a)
    if len(b) != r or r != f.r:
        raise ValueError("tuples must have length r")
    total: Number = 0
    for perm in permutations(range(r)):
        term: Number = bits.perm_sign(perm)
        for i in range(r):
            term *= f.value(_substitute(a, i, b[perm[i]]))
            if not term:
                break
        total += term
    return _normalise(total)


def leibniz_lhs(f: GPFunction, a: Sequence[int], b: Sequence[int]) -> Number:
    """f(a)^(r-1) * f(b)."""
    fa = f.value(a)
    if len(a) == 0:
        return f.value(b)
    return _normalise(Fraction(fa) ** (len(a) - 1) * f.value(b))


class PropagationError(ValueError):
    """Propagated values disagree with the matroid or multiplicity at ``subset``."""

    def __init__(self, subset: int, value: Number, reason: str):
        self.subset = subset
        self.value = value
        super().__init__(f"{bits.fmt(subset)}: propagated value {value} {reason}")


def substitution_matrix(f_local: Mapping[int, Number], b0: Sequence[int], x: Sequence[int]) -> list[list[Number]]:
    """Entries f(b0 with position i replaced by x_k); only sets within
    distance one of b0 are read."""
    out = []
    for i in range(len(b0)):
        row = []
        for e in x:
            sign, s = bits.tuple_to_mask(_substitute(b0, i, e))
            row.append(sign * f_local.get(s, 0) if sign else 0)
        out.append(row)
    return out


def propagate_from_bg1(m: Multiplicity, chi_local: Chirotope | Mapping[int, int], b0: int,
                       bases: Iterable[int], r: int | None = None) -> GPFunction:
    """Extend chi*m from B0 and its basis-graph neighbours to every r-subset.

    Uses f(B0)^(r-1) f(X) = det[f(B0 with b_i -> x_k)], i.e. the Leibniz
    expansion with a = B0, b = X. Raises PropagationError at the first subset
    (lex order) where the result is not +-m on a basis or 0 off the bases.
    """
    signs = chi_local.signs if isinstance(chi_local, Chirotope) else chi_local
    bases = frozenset(bases)
    n = m.n
    r = bits.size(b0) if r is None else r
    if b0 not in bases or not signs.get(b0):
        raise PropagationError(b0, signs.get(b0, 0), "anchor must be a basis with nonzero sign")
    local = {}
    for s in bases:
        if s == b0 or (s ^ b0).bit_count() == 2:
            if not signs.get(s):
                raise PropagationError(s, 0, "missing sign on a neighbour of the anchor")
            local[s] = signs[s] * m.table[s]
    bt = bits.elements(b0)
    denom = Fraction(local[b0]) ** (r - 1) if r else Fraction(1)
    values = {}
    for x in bits.k_subsets(n, r):
        if x in local:
            values[x] = local[x]
            continue
        v = _normalise(Fraction(det(substitution_matrix(local, bt, bits.elements(x)))) / denom)
        if x in bases:
            if not isinstance(v, int) or abs(v) != m.table[x]:
                raise PropagationError(x, v, f"does not have absolute value m = {m.table[x]}")
        elif v:
            raise PropagationError(x, v, "is nonzero on a non-basis")
        if v:
            values[x] = v
    return GPFunction(n, r, values)


def to_chirotope(f: GPFunction) -> Chirotope:
    return Chirotope(f.n, f.r, {s: (1 if v > 0 else -1) for s, v in f.values.items()})
