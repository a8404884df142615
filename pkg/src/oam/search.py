"""Orientation search, canonical re-orientation and equivalence of orientations.

Two chirotopes are treated as equivalent when one is a re-orientation of the
other or of its negative: chi and -chi always orient the same arithmetic
matroid, yet -chi need not be a re-orientation of chi (e.g. for U(2,3)).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from . import bits
from .arithmetic import ArithmeticMatroid
from .chirotope import Chirotope, check_chirotope, check_gp, gp_terms, reorient
from .gpfunction import PropagationError, propagate_from_bg1, to_chirotope
from .matroid import Matroid, coordinatizing_forest, fundamental_circuit_graph, swap


@dataclass(frozen=True)
class Reorientation:
    """Flip the elements of ``flip``; ``sign`` = -1 also negates globally."""

    flip: int = 0
    sign: int = 1

    def apply(self, chi: Chirotope) -> Chirotope:
        return reorient(chi, self.flip, self.sign)

    @property
    def elements(self) -> tuple[int, ...]:
        return bits.elements(self.flip)


class SearchCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Skeleton:
    """Anchor basis, fundamental circuit graph and its coordinatizing forest."""

    anchor: int
    graph: tuple[tuple[int, int], ...]
    forest: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, mat: Matroid) -> "Skeleton":
        b0 = mat.anchor
        g = fundamental_circuit_graph(mat, b0)
        return cls(b0, g, coordinatizing_forest(g))

    @property
    def forest_bases(self) -> tuple[int, ...]:
        """Vertices of L(P) as bases of the matroid."""
        return tuple(swap(self.anchor, i, j) for i, j in self.forest)

    @property
    def free_bases(self) -> tuple[int, ...]:
        fs = set(self.forest)
        return tuple(swap(self.anchor, i, j) for i, j in self.graph if (i, j) not in fs)


def is_orientation(am: ArithmeticMatroid, chi: Chirotope) -> bool:
    """All three compatibility conditions: support, arithmetic axioms assumed
    checked separately, GP (which implies the chirotope axioms)."""
    if chi.n != am.n or chi.r != am.r or chi.support != am.matroid.bases:
        return False
    return not check_gp(chi, am.m, limit=1)


def find_orientation(am: ArithmeticMatroid, cap: int = 1 << 20) -> Chirotope | None:
    """An orientation with +1 on the anchor and on L(P), or None."""
    mat, m = am.matroid, am.m
    if mat.r == 0:
        return Chirotope(mat.n, 0, {0: 1})
    sk = Skeleton.of(mat)
    free = sk.free_bases
    if 1 << len(free) > cap:
        raise SearchCapExceeded(f"{1 << len(free)} candidate sign patterns exceed the cap {cap}")
    fixed = {sk.anchor: 1, **{b: 1 for b in sk.forest_bases}}
    for pattern in product((1, -1), repeat=len(free)):
        signs = dict(fixed)
        signs.update(zip(free, pattern))
        try:
            f = propagate_from_bg1(m, signs, sk.anchor, mat.bases)
        except PropagationError:
            continue
        chi = to_chirotope(f)
        if chi.support == mat.bases and not check_gp(chi, m, limit=1) and check_chirotope(chi):
            return chi
    return None


def _gp_relations(am: ArithmeticMatroid, order: dict[int, int]):
    """Nonzero GP relations as lists of (coefficient, basis1, basis2)."""
    n, r = am.n, am.r
    rels = []
    full = {b: 1 for b in am.matroid.bases}
    probe = Chirotope(n, r, full)
    for x in bits.k_subsets(n, r - 1):
        for y in bits.k_subsets(n, r + 1):
            terms = gp_terms(probe, am.m, x, y)
            if not any(terms):
                continue
            ys = bits.elements(y)
            rel = []
            for i, t in enumerate(terms):
                if t:
                    yi = 1 << (ys[i] - 1)
                    rel.append((t, x | yi, y & ~yi))
            last = max(max(order[b1], order[b2]) for _, b1, b2 in rel)
            rels.append((last, rel))
    return rels


def enumerate_orientations(am: ArithmeticMatroid) -> Iterator[Chirotope]:
    """Every chirotope with support the bases satisfying GP.

    Exhaustive backtracking over the sign of each basis in lex order; each GP
    relation is tested as soon as all its bases carry a sign. Independent of
    the Leibniz/propagation machinery.
    """
    mat = am.matroid
    if mat.r == 0:
        yield Chirotope(mat.n, 0, {0: 1})
        return
    order_list = mat.sorted_bases()
    order = {b: k for k, b in enumerate(order_list)}
    by_last: dict[int, list] = {}
    for last, rel in _gp_relations(am, order):
        by_last.setdefault(last, []).append(rel)
    signs: dict[int, int] = {}

    def rec(k):
        if k == len(order_list):
            yield Chirotope(mat.n, mat.r, dict(signs))
            return
        b = order_list[k]
        for s in (1, -1):
            signs[b] = s
            if all(sum(c * signs[b1] * signs[b2] for c, b1, b2 in rel) == 0
                   for rel in by_last.get(k, ())):
                yield from rec(k + 1)
        del signs[b]

    yield from rec(0)


def reorientation_kernel(mat: Matroid) -> list[int]:
    """GF(2) basis (reduced, distinct leading bits) of the sets K with
    |K & B| of constant parity over all bases B: flipping K maps chi to +-chi."""
    n = mat.n
    # unknowns: bits 0..n-1 are k_e, bit n is the parity constant c
    rows = []
    for b in mat.bases:
        rows.append(b | (1 << n))
    pivots = _row_reduce(rows)
    pivot_cols = {p for p, _ in pivots}
    basis = []
    for free in range(n + 1):
        if free in pivot_cols:
            continue
        v = 1 << free
        for col, row in pivots:
            if (row >> free) & 1:
                v |= 1 << col
        basis.append(v & bits.full(n))
    return _reduce_basis([v for v in basis if v])


def _row_reduce(rows: list[int]) -> list[tuple[int, int]]:
    """Reduced row echelon form over GF(2); returns (pivot column, row)."""
    pivots: list[tuple[int, int]] = []
    for row in rows:
        for col, prow in pivots:
            if (row >> col) & 1:
                row ^= prow
        if not row:
            continue
        col = (row & -row).bit_length() - 1
        pivots = [(c, p ^ row if (p >> col) & 1 else p) for c, p in pivots]
        pivots.append((col, row))
    return pivots


def _reduce_basis(vectors: list[int]) -> list[int]:
    """Echelon basis keyed by the highest bit, fully reduced."""
    basis: dict[int, int] = {}
    for v in vectors:
        for hb in sorted(basis, reverse=True):
            if (v >> hb) & 1:
                v ^= basis[hb]
        if v:
            hb = v.bit_length() - 1
            for k in list(basis):
                if (basis[k] >> hb) & 1:
                    basis[k] ^= v
            basis[hb] = v
    return [basis[k] for k in sorted(basis, reverse=True)]


def min_in_coset(a: int, kernel: list[int]) -> int:
    """Smallest bitmask in a + span(kernel)."""
    for v in kernel:
        hb = v.bit_length() - 1
        if (a >> hb) & 1:
            a ^= v
    return a


def canonicalize(chi: Chirotope, am_or_mat: ArithmeticMatroid | Matroid | None = None
                 ) -> tuple[Chirotope, Reorientation]:
    """Equivalent chirotope with +1 on the anchor basis and on L(P).

    Returns the canonical form and a witness with ``witness.apply(chi) == canonical``;
    the witness flip set is the smallest bitmask among all valid ones.
    """
    mat = _matroid_of(chi, am_or_mat)
    if mat.r == 0:
        sign = chi(0)
        return reorient(chi, 0, sign), Reorientation(0, sign)
    sk = Skeleton.of(mat)
    b0 = sk.anchor
    # relative label of an edge: +1 if chi(B0 - i + j) == chi(B0)
    adj: dict[int, list[tuple[int, int]]] = {}
    for i, j in sk.forest:
        lab = chi(swap(b0, i, j)) * chi(b0)
        adj.setdefault(i, []).append((j, lab))
        adj.setdefault(j, []).append((i, lab))
    flip = 0
    seen = set()
    for root in sorted(adj):
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, 0)]
        while stack:
            v, fv = stack.pop()
            if fv:
                flip |= 1 << (v - 1)
            for w, lab in adj[v]:
                if w not in seen:
                    seen.add(w)
                    # want (-1)^(fv + fw) * lab == +1
                    stack.append((w, fv ^ (lab < 0)))
    flip = min_in_coset(flip, reorientation_kernel(mat))
    sign = reorient(chi, flip)(b0)
    out = reorient(chi, flip, sign)
    return out, Reorientation(flip, sign)


def _matroid_of(chi: Chirotope, am_or_mat) -> Matroid:
    if isinstance(am_or_mat, ArithmeticMatroid):
        return am_or_mat.matroid
    if isinstance(am_or_mat, Matroid):
        return am_or_mat
    return Matroid(chi.n, frozenset(chi.signs))


def equivalent_orientations(chi1: Chirotope, chi2: Chirotope,
                            am_or_mat: ArithmeticMatroid | Matroid | None = None) -> Reorientation | None:
    """Witness R with R.apply(chi1) == chi2, or None if the canonical forms
    differ (one input is then not an orientation of the same matroid)."""
    if chi1.support != chi2.support or chi1.r != chi2.r:
        return None
    mat = _matroid_of(chi1, am_or_mat)
    c1, w1 = canonicalize(chi1, mat)
    c2, w2 = canonicalize(chi2, mat)
    if c1 != c2:
        return None
    flip = w1.flip ^ w2.flip
    if mat.r == 0:
        return Reorientation(0, chi1(0) * chi2(0))
    flip = min_in_coset(flip, reorientation_kernel(mat))
    sign = chi2(mat.anchor) * reorient(chi1, flip)(mat.anchor)
    return Reorientation(flip, sign)


def brute_force_witness(chi1: Chirotope, chi2: Chirotope) -> Reorientation | None:
    """Smallest flip set (then sign +1 before -1) mapping chi1 to chi2."""
    for a in range(1 << chi1.n):
        for sign in (1, -1):
            if reorient(chi1, a, sign) == chi2:
                return Reorientation(a, sign)
    return None
