"""Subset bitmask helpers.

Elements of the ground set are 1..n; element ``e`` lives in bit ``e - 1``.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_N = 20


def mask(elements: Iterable[int]) -> int:
    out = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"element {e} is not a positive integer")
        out |= 1 << (e - 1)
    return out


def elements(s: int) -> tuple[int, ...]:
    """Increasing tuple of the elements of ``s``."""
    out = []
    e = 1
    while s:
        if s & 1:
            out.append(e)
        s >>= 1
        e += 1
    return tuple(out)


def size(s: int) -> int:
    return s.bit_count()


def full(n: int) -> int:
    return (1 << n) - 1


def subsets_of(s: int) -> Iterator[int]:
    """All subsets of ``s``, starting with ``s`` itself and ending with 0."""
    t = s
    while True:
        yield t
        if t == 0:
            return
        t = (t - 1) & s


def k_subsets(n: int, k: int) -> Iterator[int]:
    """``k``-subsets of [n] in lexicographic order of their sorted tuples."""
    for combo in combinations(range(1, n + 1), k):
        yield mask(combo)


def lex_key(s: int) -> tuple[int, ...]:
    return elements(s)


def fmt(s: int) -> str:
    return "{" + ",".join(map(str, elements(s))) + "}"


def parse_elements(text: str) -> int:
    """Parse ``"1,3"`` (optionally braced) into a mask."""
    text = text.strip().strip("{}[]() ")
    if not text:
        return 0
    return mask(int(tok) for tok in text.replace(" ", "").split(","))


def perm_sign(seq: Iterable[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if it has repeated entries."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    seen = [False] * len(seq)
    order = sorted(range(len(seq)), key=seq.__getitem__)
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def tuple_to_mask(tup: Iterable[int]) -> tuple[int, int]:
    """Return ``(sign, mask)`` for an element tuple under the alternating rule."""
    tup = tuple(tup)
    sign = perm_sign(tup)
    if sign == 0:
        return 0, 0
    return sign, mask(tup)


def compress(s: int, keep: int) -> int:
    """Relabel ``s`` (a subset of ``keep``) onto 1..|keep| preserving order."""
    out = 0
    pos = 0
    bit = 0
    while keep >> bit:
        if (keep >> bit) & 1:
            if (s >> bit) & 1:
                out |= 1 << pos
            pos += 1
        bit += 1
    return out


def expand(s: int, keep: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    pos = 0
    bit = 0
    while keep >> bit:
        if (keep >> bit) & 1:
            if (s >> pos) & 1:
                out |= 1 << bit
            pos += 1
        bit += 1
    return out
