"""Ordered streams over A_n, L_n and D_n, produced by chained adjacency steps.

All streams are lazy generators (a stream over A_30 has about 5 * 10**8
elements, so callers must be able to take prefixes). A generator is the
cursor: single-owner, constant state, not safe to advance concurrently,
while independent generators over the same n never interact. Arguments are
validated eagerly, before the generator is handed out.
"""

from __future__ import annotations

import os
from collections.abc import Iterator

from .adjacency import predecessor_ln, successor_dn, successor_ln
from .cells import predecessor_an, successor_an
from .core import AlphaSeq, SetContext, ZERO, harmonic, least_element, max_element, two_adic_split
from .errors import CapExceeded, InvalidN, InvalidSeed

DEFAULT_ENUM_CAP = 30


def enum_cap() -> int:
    return int(os.environ.get("ALPHASEQ_ENUM_CAP", DEFAULT_ENUM_CAP))


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    cap = enum_cap()
    if n > cap:
        raise CapExceeded(f"n={n} above enumeration cap {cap}")


def _min_an(n: int) -> AlphaSeq:
    return (1, n - 1) if n >= 2 else (1,)


def enumerate_an(n: int, seed: AlphaSeq | None = None) -> Iterator[AlphaSeq]:
    """All 2**(n-1) elements of A_n in ascending order.

    With an explicit seed the walk first descends to the minimum (1, n-1),
    buffering what it passes; the default seed is the minimum itself, which
    keeps memory bounded by the current sequence.
    """
    _check_n(n)
    if seed is None:
        seed = _min_an(n)
    elif not SetContext("A", n).contains(seed):
        raise InvalidSeed(f"{seed} is not a member of A_{n}")
    return _walk_an(n, seed)


def _walk_an(n: int, seed: AlphaSeq) -> Iterator[AlphaSeq]:
    minimum = _min_an(n)
    below = []
    cur = seed
    while cur != minimum:
        cur = predecessor_an(cur)
        below.append(cur)
    yield from reversed(below)
    yield seed
    cur = seed
    while len(cur) >= 2:
        cur = successor_an(cur)
        yield cur


def enumerate_an_descending(n: int) -> Iterator[AlphaSeq]:
    """A_n in descending order, from (n) down to (1, n-1)."""
    _check_n(n)
    return _walk_an_descending(n)


def _walk_an_descending(n: int) -> Iterator[AlphaSeq]:
    cur: AlphaSeq = (n,)
    minimum = _min_an(n)
    yield cur
    while cur != minimum:
        cur = predecessor_an(cur)
        yield cur


def enumerate_ln(n: int) -> Iterator[AlphaSeq]:
    """L_n in ascending order, from the least element to (n-1)."""
    _check_n(n)
    return _walk_ln(n)


def _walk_ln(n: int) -> Iterator[AlphaSeq]:
    cur = least_element(n)
    top = max_element(SetContext("L", n))
    yield cur
    while cur != top:
        cur = successor_ln(cur, n)
        yield cur


def enumerate_ln_descending(n: int) -> Iterator[AlphaSeq]:
    """L_n in descending order via reverse steps, from (n-1) down."""
    _check_n(n)
    return _walk_ln_descending(n)


def _walk_ln_descending(n: int) -> Iterator[AlphaSeq]:
    cur = max_element(SetContext("L", n))
    bottom = least_element(n)
    yield cur
    while cur != bottom:
        cur = predecessor_ln(cur, n)
        yield cur


def enumerate_dn(n: int) -> Iterator[AlphaSeq]:
    """D_n in ascending order.

    Starts with the harmonics of the zero sequence up to the least element's
    doubling depth, then the least element of L_n when distinct, then walks
    L_n successor bursts, which insert the lower-class elements exactly where
    they belong.
    """
    _check_n(n)
    return _walk_dn(n)


def _walk_dn(n: int) -> Iterator[AlphaSeq]:
    l, s = two_adic_split(n)
    for j in range(l + 1):
        yield harmonic(j, ZERO)
    cur = least_element(n)
    if s > 0:
        yield cur
    top = max_element(SetContext("D", n))
    while cur != top:
        burst = successor_dn(cur, n)
        yield from burst
        cur = burst[-1]
