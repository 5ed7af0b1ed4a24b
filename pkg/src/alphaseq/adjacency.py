"""Adjacency steps inside L_n and D_n, and the star-product reverse step.

The forward step rewrites the last negative cell that keeps the result
lexical, then corrects for resonance: with f the meet of the pair and
m = 1 + degree(f), the rewrite itself is adjacent unless m divides n, in
which case the adjacent successor is star(f, least_element(n // m)). The
reverse step inverts this: a sequence of the form star(g, least_element(d))
with g fundamental steps down to extend_even(g)^(d-1) followed by a
companion tail built from the structure of g; anything else steps down by a
positive-cell rewrite.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .cells import lexical_predecessor_candidate, lexical_successor_candidate
from .core import (
    AlphaSeq,
    SetContext,
    ZERO,
    degree,
    extend_even,
    extend_odd,
    format_sequence,
    harmonic,
    is_fundamental,
    is_lexical,
    least_element,
    max_element,
    meet,
    power,
    star,
    two_adic_split,
)
from .errors import Maximal, Minimal, NoCandidate, NoDecomposition, NotInSet

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StarFactorization:
    """Witness that a sequence equals star(g, lam) with g fundamental in L_m.

    lam is the least element of L_d and n = m * d. The trivial factorization
    (the sequence is the least element of L_n itself) has g = () and m = 1.
    """

    g: AlphaSeq
    m: int
    lam: AlphaSeq
    d: int

    @property
    def trivial(self) -> bool:
        return self.g == ZERO


def _require_ln(a: AlphaSeq, n: int) -> None:
    if not SetContext("L", n).contains(a):
        raise NotInSet(f"{format_sequence(a)} is not a member of L_{n}")


def _successor_parts(a: AlphaSeq, n: int) -> tuple[AlphaSeq, AlphaSeq, int, int, int]:
    """Candidate rewrite, meet f, m = 1 + degree(f), and divmod(n, m)."""
    _require_ln(a, n)
    if a == max_element(SetContext("L", n)):
        raise Maximal(f"{format_sequence(a)} is the maximal element of L_{n}")
    cand, _ = lexical_successor_candidate(a)
    f = meet(a, cand)
    m = 1 + degree(f)
    d, r = divmod(n, m)
    return cand, f, m, d, r


def successor_ln(a: AlphaSeq, n: int) -> AlphaSeq:
    """Adjacent successor of ``a`` in L_n."""
    cand, f, _, d, r = _successor_parts(a, n)
    if r > 0:
        return cand
    return star(f, least_element(d))


def successor_is_direct(a: AlphaSeq, n: int) -> bool:
    """True when the rewrite candidate is itself the adjacent successor.

    Equivalently, the degree class of the meet does not divide n; for prime
    n this holds everywhere below the maximum.
    """
    *_, r = _successor_parts(a, n)
    return r > 0


def successor_dn(a: AlphaSeq, n: int) -> list[AlphaSeq]:
    """All elements of D_n between ``a`` (exclusive) and the next L_n element
    (inclusive), in ascending order.

    A direct step contributes one element. A resonant step (m divides n)
    inserts f and its harmonics h_1(f), ..., h_k(f), with d = n // m =
    2**k (2t+1), before star(f, least); for t = 0 the last harmonic *is*
    that star product and is emitted once.
    """
    cand, f, _, d, r = _successor_parts(a, n)
    if r > 0:
        return [cand]
    k, _ = two_adic_split(d)
    chain = [harmonic(j, f) for j in range(k + 1)]
    top = star(f, least_element(d))
    if chain[-1] != top:
        chain.append(top)
    return chain


def _invert_extend_odd(p: AlphaSeq) -> AlphaSeq | None:
    """Preimage of ``p`` under extend_odd, or None (images have odd length)."""
    if not p or len(p) % 2 == 0:
        return None
    if p[-1] == 1:
        return p[:-1]
    return p[:-1] + (p[-1] - 1,)


def star_factorize(a: AlphaSeq, n: int) -> StarFactorization | None:
    """Find g fundamental in L_m with m * d = n and a = star(g, least_element(d)).

    Candidates for g are read off the odd-length prefixes of ``a`` (the first
    block of a star product is extend_odd(g)). When several verify, the one
    with the largest m wins. The trivial g = () factorization is reported
    only for the least element of L_n, and only when nothing else matches.
    """
    _require_ln(a, n)
    best: StarFactorization | None = None
    for plen in range(1, len(a) + 1, 2):
        g = _invert_extend_odd(a[:plen])
        if not g:
            continue
        if not is_lexical(g) or not is_fundamental(g):
            continue
        m = 1 + degree(g)
        if m >= n or n % m != 0:
            continue
        d = n // m
        lam = least_element(d)
        if star(g, lam) == a:
            log.debug("star factorization of %s: g=%s m=%d d=%d", a, g, m, d)
            if best is None or (m, len(g)) > (best.m, len(best.g)):
                best = StarFactorization(g, m, lam, d)
    if best is not None:
        return best
    if n >= 2 and a == least_element(n):
        return StarFactorization(ZERO, 1, a, n)
    return None


def predecessor_tail(g: AlphaSeq, m: int) -> AlphaSeq:
    """Companion tail of the reverse step for a star product with left factor g.

    Two structural forms cover every fundamental g in L_m. Either
    g = star(tau, least_element(r)) for a lexical tau and an odd r >= 3, and
    the tail is star(tau, (1,)*(r-1)) = extend_odd(tau)^(r-1) + tau; or the
    tail is the adjacent predecessor of g inside L_m, reached by a single
    positive-cell rewrite (equivalently: g = extend_odd(tau) + zeta and the
    tail is extend_even(tau) + zeta, for the longest lexical-preserving
    decomposition point). The star form wins when both match.
    """
    candidates = [ZERO]
    for plen in range(1, len(g) + 1, 2):
        tau = _invert_extend_odd(g[:plen])
        if tau is not None:
            candidates.append(tau)
    for tau in candidates:
        if not is_lexical(tau):
            continue
        m1 = 1 + degree(tau)
        if m % m1 != 0:
            continue
        r = m // m1
        if r < 3 or r % 2 == 0:
            continue
        if star(tau, least_element(r)) == g:
            return power(extend_odd(tau), r - 1) + tau
    try:
        cand, _ = lexical_predecessor_candidate(g)
    except NoCandidate:
        raise NoDecomposition(
            f"{format_sequence(g)} admits neither structural form in class {m}"
        ) from None
    return cand


def predecessor_ln(a: AlphaSeq, n: int) -> AlphaSeq:
    """Adjacent predecessor of ``a`` in L_n."""
    _require_ln(a, n)
    if a == least_element(n):
        raise Minimal(f"{format_sequence(a)} is the minimal element of L_{n}")
    fac = star_factorize(a, n)
    if fac is not None and not fac.trivial:
        return power(extend_even(fac.g), fac.d - 1) + predecessor_tail(fac.g, fac.m)
    cand, _ = lexical_predecessor_candidate(a)
    return cand
