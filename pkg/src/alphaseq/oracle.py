"""Brute-force ground truth: exhaustive generation, definitional filtering, sorting.

Nothing here knows about the adjacency machinery. The only shared logic is the
comparator and the definitional lexicality test (restated locally against
plain suffixes), so the oracle stays an independent route to the same sets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cmp_to_key

from .core import GREATER, AlphaSeq, ZERO, compare
from .errors import CapExceeded, InvalidN, NotInSet

DEFAULT_ORACLE_CAP = 20


def oracle_cap() -> int:
    return int(os.environ.get("ALPHASEQ_ORACLE_CAP", DEFAULT_ORACLE_CAP))


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    cap = oracle_cap()
    if n > cap:
        raise CapExceeded(f"n={n} above oracle cap {cap}")


def _lexical(a: AlphaSeq) -> bool:
    # definitional: strictly above every proper suffix
    return all(compare(a, a[i:]) == GREATER for i in range(1, len(a)))


def all_compositions(n: int) -> list[AlphaSeq]:
    """All 2**(n-1) ordered compositions of n into parts >= 1 (generation order)."""
    _check_n(n)
    out: list[AlphaSeq] = []

    def rec(remaining: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for first in range(1, remaining + 1):
            prefix.append(first)
            rec(remaining - first, prefix)
            prefix.pop()

    rec(n, [])
    return out


def oracle_an(n: int) -> list[AlphaSeq]:
    """A_n fully sorted by the comparator."""
    return sorted(all_compositions(n), key=cmp_to_key(compare))


def oracle_ln(n: int) -> list[AlphaSeq]:
    """L_n by filtering compositions of n-1 with the definitional lexicality test."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    if n == 1:
        return [ZERO]
    members = [a for a in all_compositions(n - 1) if _lexical(a)]
    return sorted(members, key=cmp_to_key(compare))


def oracle_dn(n: int) -> list[AlphaSeq]:
    """D_n as the sorted union of L_d over the divisors d of n."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    members: list[AlphaSeq] = []
    for d in range(1, n + 1):
        if n % d == 0:
            members.extend(oracle_ln(d))
    return sorted(members, key=cmp_to_key(compare))


def oracle_adjacent(
    items: list[AlphaSeq], a: AlphaSeq
) -> tuple[AlphaSeq | None, AlphaSeq | None]:
    """Neighbours of ``a`` inside an already-sorted member list."""
    try:
        i = items.index(a)
    except ValueError:
        raise NotInSet(f"{a} is not a member of the given set") from None
    pred = items[i - 1] if i > 0 else None
    succ = items[i + 1] if i + 1 < len(items) else None
    return pred, succ


@dataclass
class OracleReport:
    """Element-by-element comparison of one enumerated set against the oracle."""

    n: int
    set_kind: str  # "A", "L" or "D"
    expected: list[AlphaSeq]
    mismatches: list[tuple[int, AlphaSeq | None, AlphaSeq | None]]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def diff_ordered(
    expected: list[AlphaSeq], actual: list[AlphaSeq]
) -> list[tuple[int, AlphaSeq | None, AlphaSeq | None]]:
    """(position, expected, actual) triples wherever the two lists disagree."""
    out = []
    for i in range(max(len(expected), len(actual))):
        e = expected[i] if i < len(expected) else None
        g = actual[i] if i < len(actual) else None
        if e != g:
            out.append((i, e, g))
    return out


def verify_range(n_min: int, n_max: int) -> list[OracleReport]:
    """Check the adjacency-driven enumerations of A_n, L_n, D_n against the
    brute-force lists for every n in [n_min, n_max]."""
    from . import enumeration  # local import: oracle must not be a dependency of enumeration

    if n_min < 1 or n_min > n_max:
        raise InvalidN(f"bad range [{n_min}, {n_max}]")
    _check_n(n_max)
    reports = []
    for n in range(n_min, n_max + 1):
        for kind, oracle_fn, enum_fn in (
            ("A", oracle_an, enumeration.enumerate_an),
            ("L", oracle_ln, enumeration.enumerate_ln),
            ("D", oracle_dn, enumeration.enumerate_dn),
        ):
            expected = oracle_fn(n)
            actual = list(enum_fn(n))
            reports.append(OracleReport(n, kind, expected, diff_ordered(expected, actual)))
    return reports
