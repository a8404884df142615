"""Chirotopes stored on sorted r-subsets, and the GP compatibility condition."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from . import bits
from .arithmetic import Multiplicity
from .matroid import Matroid, MatroidError, check_basis_exchange


@dataclass(frozen=True, eq=False)
class Chirotope:
    """Alternating sign map on r-tuples; ``signs`` holds the nonzero values on
    sorted r-subsets (bitmask -> +1/-1)."""

    n: int
    r: int
    signs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for s, v in self.signs.items():
            if bits.size(s) != self.r or s >> self.n:
                raise ValueError(f"key {bits.fmt(s)} is not an {self.r}-subset of [{self.n}]")
            if v not in (-1, 0, 1):
                raise ValueError(f"sign {v} not in -1, 0, 1")
            if v:
                clean[s] = v
        object.__setattr__(self, "signs", clean)

    def __eq__(self, other):
        if not isinstance(other, Chirotope):
            return NotImplemented
        return (self.n, self.r, self.signs) == (other.n, other.r, other.signs)

    def __hash__(self):
        return hash((self.n, self.r, frozenset(self.signs.items())))

    def __call__(self, s: int) -> int:
        """Sign on a sorted subset given as a bitmask."""
        return self.signs.get(s, 0)

    def value(self, tup: Iterable[int]) -> int:
        """Sign on an arbitrary element tuple (alternating rule)."""
        sign, s = bits.tuple_to_mask(tup)
        return sign * self.signs.get(s, 0) if sign else 0

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.signs)

    def __neg__(self) -> "Chirotope":
        return Chirotope(self.n, self.r, {s: -v for s, v in self.signs.items()})

    def __repr__(self) -> str:
        body = ", ".join(f"{','.join(map(str, bits.elements(s)))}:{'+' if v > 0 else '-'}"
                         for s, v in sorted(self.signs.items(), key=lambda kv: bits.lex_key(kv[0])))
        return f"Chirotope(n={self.n}, r={self.r}, {{{body}}})"


def from_signs(n: int, r: int, signs: Mapping[tuple[int, ...], int]) -> Chirotope:
    """Build from tuple keys; unsorted tuples are normalised by the alternating rule."""
    out = {}
    for tup, v in signs.items():
        sgn, s = bits.tuple_to_mask(tup)
        if not sgn:
            if v:
                raise ValueError(f"nonzero sign on repeated tuple {tup}")
            continue
        out[s] = sgn * v
    return Chirotope(n, r, out)


def _insert_sign(x: int, e: int) -> int:
    """Sign of the permutation sorting (e, x_sorted...); e not in x."""
    return -1 if (x & ((1 << (e - 1)) - 1)).bit_count() & 1 else 1


def _b2_violations(chi: Chirotope, limit: int | None = None) -> list[tuple[tuple, tuple]]:
    n, r = chi.n, chi.r
    out = []
    if r == 0:
        return out
    sg = chi.signs
    for x in bits.k_subsets(n, r - 1):
        xs = bits.elements(x)
        for ymask in bits.k_subsets(n, r + 1):
            ys = bits.elements(ymask)
            for y0 in ys:
                rest = tuple(e for e in ys if e != y0)
                # t_0 = chi(y0, x) chi(rest); t_i = chi(y_i, x) chi(rest with y_i -> y0)
                b0 = 1 << (y0 - 1)
                t0 = 0
                if not x & b0:
                    t0 = _insert_sign(x, y0) * sg.get(x | b0, 0) * sg.get(ymask & ~b0, 0)
                ts = []
                for i, yi in enumerate(rest):
                    bi = 1 << (yi - 1)
                    if x & bi:
                        continue
                    left = _insert_sign(x, yi) * sg.get(x | bi, 0)
                    if not left:
                        continue
                    sub = rest[:i] + (y0,) + rest[i + 1:]
                    ts.append(left * chi.value(sub))
                if t0 > 0 and all(t <= 0 for t in ts) or t0 < 0 and all(t >= 0 for t in ts):
                    out.append(((y0,) + xs, rest))
                    if limit is not None and len(out) >= limit:
                        return out
    return out


def b2_violations(chi: Chirotope, limit: int | None = None) -> list[tuple[tuple, tuple]]:
    """Witnesses ``((x1, ..., xr), (y1, ..., yr))`` of the three-term exchange axiom
    in the form: if chi(y_i, x2..xr) chi(y1..x1..yr) >= 0 for all i, then
    chi(x) chi(y) >= 0 (with the dual statement for <= 0)."""
    return _b2_violations(chi, limit)


def check_chirotope(chi: Chirotope) -> bool:
    if not chi.signs:
        return False
    return not _b2_violations(chi, limit=1)


def reorient(chi: Chirotope, a: int, sign: int = 1) -> Chirotope:
    return Chirotope(chi.n, chi.r, {s: sign * (-v if (s & a).bit_count() & 1 else v)
                                    for s, v in chi.signs.items()})


def chirotope_matroid(chi: Chirotope) -> Matroid:
    if not chi.signs:
        raise MatroidError("chirotope is identically zero")
    if not check_basis_exchange(chi.signs.keys(), chi.n):
        raise MatroidError("support of the chirotope violates basis exchange")
    return Matroid(chi.n, frozenset(chi.signs))


def gp_terms(chi: Chirotope, m: Multiplicity, x: int, ymask: int) -> list[int]:
    """Summands (-1)^i chi m(y_i, x) chi m(y^i) for sorted x and y."""
    sg, mt = chi.signs, m.table
    ys = bits.elements(ymask)
    out = []
    for i, yi in enumerate(ys):
        bi = 1 << (yi - 1)
        if x & bi:
            out.append(0)
            continue
        xi = x | bi
        yrest = ymask & ~bi
        s1, s2 = sg.get(xi, 0), sg.get(yrest, 0)
        if not (s1 and s2):
            out.append(0)
            continue
        v = _insert_sign(x, yi) * s1 * s2 * mt[xi] * mt[yrest]
        out.append(-v if i & 1 else v)
    return out


def check_gp(chi: Chirotope, m: Multiplicity, limit: int | None = None) -> list[tuple[tuple, tuple]]:
    """Pairs (x, y) of sorted tuples where the GP sum is nonzero.

    Restricting to strictly increasing tuples is enough: the sum is alternating
    in x and in y, and vanishes when either has a repeated entry.
    """
    if chi.n != m.n:
        raise ValueError("chirotope and multiplicity disagree on n")
    n, r = chi.n, chi.r
    out = []
    if r == 0:
        return out
    for x in bits.k_subsets(n, r - 1):
        for y in bits.k_subsets(n, r + 1):
            if sum(gp_terms(chi, m, x, y)):
                out.append((bits.elements(x), bits.elements(y)))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def gp_sum_tuples(chi: Chirotope, m: Multiplicity, x: tuple, y: tuple) -> int:
    """GP sum for arbitrary tuples, evaluated term by term (reference path)."""
    total = 0
    for i in range(len(y)):
        xi = (y[i],) + tuple(x)
        yi = y[:i] + y[i + 1:]
        s1, k1 = bits.tuple_to_mask(xi)
        s2, k2 = bits.tuple_to_mask(yi)
        v = chi.value(xi) * chi.value(yi)
        if v:
            v *= m.table[k1] * m.table[k2]
        total += -v if i & 1 else v
    return total


def _completion(mat: Matroid, a: int, for_deletion: bool) -> int:
    if for_deletion:
        return mat.greedy_basis(a, over=mat.ground & ~a)
    return mat.greedy_basis(a)


def _minor(chi: Chirotope, mat: Matroid, a: int, f: int) -> Chirotope:
    keep = mat.ground & ~a
    s = chi.r - bits.size(f)
    ft = bits.elements(f)
    out = {}
    for z in bits.k_subsets(bits.size(keep), s):
        zt = bits.elements(bits.expand(z, keep))
        v = chi.value(zt + ft)
        if v:
            out[z] = v
    return Chirotope(bits.size(keep), s, out)


def chi_delete(chi: Chirotope, a: int, mat: Matroid | None = None) -> Chirotope:
    """chi(z, f) with f the lex-least subset of ``a`` completing E - a to full rank."""
    mat = mat or chirotope_matroid(chi)
    return _minor(chi, mat, a, _completion(mat, a, True))


def chi_contract(chi: Chirotope, a: int, mat: Matroid | None = None) -> Chirotope:
    """chi(z, f) with f the lex-least maximal independent subset of ``a``."""
    mat = mat or chirotope_matroid(chi)
    return _minor(chi, mat, a, _completion(mat, a, False))


def complement_sign(z: int, n: int) -> int:
    """Sign of the permutation putting (z, complement of z), both increasing, in order."""
    inv = 0
    for e in bits.elements(z):
        inv += (~z & ((1 << (e - 1)) - 1)).bit_count()
    return -1 if inv & 1 else 1


def chi_dual(chi: Chirotope) -> Chirotope:
    n = chi.n
    g = bits.full(n)
    out = {}
    for s, v in chi.signs.items():
        z = g & ~s
        out[z] = v * complement_sign(z, n)
    return Chirotope(n, n - chi.r, out)


def all_tuples(n: int, k: int):
    """Every tuple in [n]^k (reference enumeration for tiny sizes)."""
    from itertools import product

    return product(range(1, n + 1), repeat=k)


def r_subsets(n: int, r: int) -> list[int]:
    return [bits.mask(c) for c in combinations(range(1, n + 1), r)]
