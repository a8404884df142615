"""Matroids given by their bases, over the ground set 1..n."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from . import bits


class MatroidError(ValueError):
    """Structurally invalid input (empty basis set, mixed sizes, bad anchor...)."""


def check_basis_exchange(bases: Iterable[int], n: int) -> bool:
    """True iff the family satisfies the basis exchange axiom."""
    bases = frozenset(bases)
    _validate_family(bases, n)
    for b1 in bases:
        for b2 in bases:
            diff1 = b1 & ~b2
            if not diff1:
                continue
            diff2 = b2 & ~b1
            for x in bits.elements(diff1):
                xb = 1 << (x - 1)
                if not any((b1 & ~xb) | (1 << (y - 1)) in bases for y in bits.elements(diff2)):
                    return False
    return True


def _validate_family(bases: frozenset, n: int) -> None:
    if n < 0 or n > bits.MAX_N:
        raise MatroidError(f"n={n} outside 0..{bits.MAX_N}")
    if not bases:
        raise MatroidError("empty basis set")
    sizes = {bits.size(b) for b in bases}
    if len(sizes) != 1:
        raise MatroidError(f"bases of mixed cardinalities {sorted(sizes)}")
    if any(b >> n for b in bases):
        raise MatroidError("basis outside the ground set")


@dataclass(frozen=True)
class Matroid:
    n: int
    bases: frozenset[int]
    # original element names after relabeling by minors; None means 1..n
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "bases", frozenset(self.bases))
        _validate_family(self.bases, self.n)
        if self.labels is not None and len(self.labels) != self.n:
            raise MatroidError("labels do not match n")

    @classmethod
    def from_lists(cls, n: int, bases: Iterable[Iterable[int]], check: bool = True) -> "Matroid":
        fam = frozenset(bits.mask(b) for b in bases)
        if check and not check_basis_exchange(fam, n):
            raise MatroidError("family violates basis exchange")
        return cls(n, fam)

    @classmethod
    def uniform(cls, r: int, n: int) -> "Matroid":
        return cls(n, frozenset(bits.k_subsets(n, r)))

    @property
    def r(self) -> int:
        return bits.size(next(iter(self.bases)))

    @property
    def ground(self) -> int:
        return bits.full(self.n)

    @property
    def element_labels(self) -> tuple[int, ...]:
        return self.labels if self.labels is not None else tuple(range(1, self.n + 1))

    def sorted_bases(self) -> list[int]:
        return sorted(self.bases, key=bits.lex_key)

    @cached_property
    def anchor(self) -> int:
        """Lexicographically least basis."""
        return min(self.bases, key=bits.lex_key)

    @cached_property
    def _rank_table(self) -> list[int]:
        bases = list(self.bases)
        return [max((a & b).bit_count() for b in bases) for a in range(1 << self.n)]

    def rank(self, a: int) -> int:
        return self._rank_table[a]

    def is_independent(self, a: int) -> bool:
        return self._rank_table[a] == a.bit_count()

    def closure(self, a: int) -> int:
        rk = self._rank_table
        ra = rk[a]
        out = a
        for e in range(self.n):
            b = 1 << e
            if not a & b and rk[a | b] == ra:
                out |= b
        return out

    def greedy_basis(self, a: int, over: int = 0) -> int:
        """Lex-least subset f of ``a`` independent in the contraction by ``over``
        and spanning ``a`` there, scanning elements in increasing order."""
        rk = self._rank_table
        f = 0
        for e in bits.elements(a):
            b = 1 << (e - 1)
            if rk[over | f | b] > rk[over | f]:
                f |= b
        return f

    def is_molecule(self, a: int, b: int) -> bool:
        """(M/a) restricted to b has a unique basis."""
        if a & ~b:
            raise MatroidError("molecule requires A to be a subset of B")
        return self._rank_table[b] - self._rank_table[a] == (b & ~self.closure(a)).bit_count()

    def __repr__(self) -> str:
        bs = ",".join(bits.fmt(b) for b in self.sorted_bases())
        return f"Matroid(n={self.n}, bases=[{bs}])"


def rank(m: Matroid, a: int) -> int:
    return m.rank(a)


def closure(m: Matroid, a: int) -> int:
    return m.closure(a)


def is_molecule(m: Matroid, a: int, b: int) -> bool:
    return m.is_molecule(a, b)


def _relabeled_labels(m: Matroid, keep: int) -> tuple[int, ...]:
    labels = m.element_labels
    return tuple(labels[e - 1] for e in bits.elements(keep))


def restrict_bases(m: Matroid, keep: int) -> frozenset[int]:
    """Bases of M restricted to ``keep``, still in M's labels."""
    s = m.rank(keep)
    return frozenset(b & keep for b in m.bases if (b & keep).bit_count() == s)


def delete(m: Matroid, a: int) -> Matroid:
    """Deletion of ``a``; the result lives on 1..n-|a| in the original order."""
    keep = m.ground & ~a
    fam = restrict_bases(m, keep)
    return Matroid(bits.size(keep), frozenset(bits.compress(b, keep) for b in fam),
                   _relabeled_labels(m, keep))


def contract(m: Matroid, a: int) -> Matroid:
    """Contraction of ``a`` via its lex-least maximal independent subset."""
    keep = m.ground & ~a
    f = m.greedy_basis(a)
    fam = frozenset(b & ~f for b in m.bases if b & f == f and not (b & ~f) & a)
    return Matroid(bits.size(keep), frozenset(bits.compress(b, keep) for b in fam),
                   _relabeled_labels(m, keep))


def dual(m: Matroid) -> Matroid:
    g = m.ground
    return Matroid(m.n, frozenset(g & ~b for b in m.bases), m.labels)


@dataclass(frozen=True)
class BasisGraphView:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    anchor: int | None = None

    @property
    def bg1(self) -> tuple[int, ...]:
        """Neighbours of the anchor."""
        if self.anchor is None:
            return ()
        return tuple(v for v in self.vertices if (v ^ self.anchor).bit_count() == 2)

    @property
    def bg_le1(self) -> tuple[int, ...]:
        if self.anchor is None:
            return ()
        return tuple(v for v in self.vertices if v == self.anchor or (v ^ self.anchor).bit_count() == 2)


def basis_graph(m: Matroid, b0: int | None = None) -> BasisGraphView:
    if b0 is not None and b0 not in m.bases:
        raise MatroidError(f"anchor {bits.fmt(b0)} is not a basis")
    vs = tuple(m.sorted_bases())
    edges = tuple((u, v) for i, u in enumerate(vs) for v in vs[i + 1:]
                  if (u ^ v).bit_count() == 2)
    return BasisGraphView(vs, edges, b0)


def fundamental_circuit_graph(m: Matroid, b0: int) -> tuple[tuple[int, int], ...]:
    """Edges (i, j), i in b0, j outside, with b0 - i + j a basis; lex sorted."""
    if b0 not in m.bases:
        raise MatroidError(f"anchor {bits.fmt(b0)} is not a basis")
    out = []
    for i in bits.elements(b0):
        for j in bits.elements(m.ground & ~b0):
            if (b0 & ~(1 << (i - 1))) | (1 << (j - 1)) in m.bases:
                out.append((i, j))
    return tuple(out)


def coordinatizing_forest(edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Spanning forest grown from edges in lexicographic order (Kruskal, unit weights)."""
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest = []
    for i, j in sorted(edges):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            forest.append((i, j))
    return tuple(forest)


def swap(b0: int, i: int, j: int) -> int:
    """b0 - {i} + {j}."""
    return (b0 & ~(1 << (i - 1))) | (1 << (j - 1))
