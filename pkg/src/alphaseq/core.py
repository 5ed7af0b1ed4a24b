"""Alpha-sequences: total order, lexicality and the algebraic constructions.

An alpha-sequence is a finite tuple of positive integers. The zero sequence
is the empty tuple; it is rendered ``"0"`` in text form and behaves as the
identity for concatenation and for the star product. Sequences are ordered
through their alternating-sign view (first element positive, second negated,
and so on, padded with zeros), compared at the first differing position.
Everything here is a pure function over immutable tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidN, PrefixAmbiguity, UndefinedOperation

AlphaSeq = tuple[int, ...]

#: The zero sequence, sole member of L_1.
ZERO: AlphaSeq = ()

LESS, EQUAL, GREATER = -1, 0, 1


def degree(a: AlphaSeq) -> int:
    """Sum of the elements; 0 for the zero sequence."""
    return sum(a)


def order_key(a: AlphaSeq) -> tuple[int, ...]:
    """Sortable form of the alternating-sign view: (a1, -a2, a3, ..., 0).

    The single trailing 0 makes plain tuple comparison agree with comparing
    the zero-padded infinite views, so ``sorted(xs, key=order_key)`` sorts
    exactly as :func:`compare` orders.
    """
    key = [v if i % 2 == 0 else -v for i, v in enumerate(a)]
    key.append(0)
    return tuple(key)


def _signed(a: AlphaSeq, i: int) -> int:
    if i >= len(a):
        return 0
    return a[i] if i % 2 == 0 else -a[i]


def compare(a: AlphaSeq, b: AlphaSeq) -> int:
    """Three-way comparison: -1, 0 or 1 as ``a`` is below, equal to or above ``b``.

    The alternating-sign views are scanned position by position (zero past
    the end of a sequence); the sign of the first difference decides.
    """
    for i in range(max(len(a), len(b))):
        sa, sb = _signed(a, i), _signed(b, i)
        if sa != sb:
            return LESS if sa < sb else GREATER
    return EQUAL


def right_sequence(a: AlphaSeq, i: int) -> AlphaSeq:
    """Suffix (a_i, ..., a_k) for a 1-based position i."""
    if not 1 <= i <= len(a):
        raise IndexError(f"position {i} out of range for length {len(a)}")
    return a[i - 1:]


def is_lexical(a: AlphaSeq) -> bool:
    """True if ``a`` is strictly above each of its proper suffixes.

    Sequences of length at most one are lexical, the zero sequence included.
    """
    return all(compare(a, a[i:]) == GREATER for i in range(1, len(a)))


def meet(a: AlphaSeq, b: AlphaSeq) -> AlphaSeq:
    """Longest common left factor, closed with the smaller first differing element.

    Defined only when the sequences are equal or genuinely differ at some
    shared position; a proper left factor of the other raises
    :class:`PrefixAmbiguity`.
    """
    if a == b:
        return a
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return a[:i] + (min(x, y),)
    raise PrefixAmbiguity(f"{a} is a left factor of {b}; meet undefined")


def concat(a: AlphaSeq, b: AlphaSeq) -> AlphaSeq:
    """Concatenation; the zero sequence is the identity."""
    return a + b


def power(a: AlphaSeq, q: int) -> AlphaSeq:
    """q-fold concatenation of ``a`` with itself; q = 0 gives the zero sequence."""
    if q < 0:
        raise ValueError(f"exponent must be >= 0, got {q}")
    return a * q


def extend_even(a: AlphaSeq) -> AlphaSeq:
    """Even-length closure: append 1 (odd length) or increment the last element.

    Undefined for the zero sequence, which has no last element to increment.
    """
    if len(a) % 2 == 1:
        return a + (1,)
    if not a:
        raise UndefinedOperation("extend_even of the zero sequence")
    return a[:-1] + (a[-1] + 1,)


def extend_odd(a: AlphaSeq) -> AlphaSeq:
    """Odd-length closure: append 1 (even length) or increment the last element."""
    if len(a) % 2 == 0:
        return a + (1,)
    return a[:-1] + (a[-1] + 1,)


def harmonic(j: int, a: AlphaSeq) -> AlphaSeq:
    """j-th harmonic: repeated doubling h(x) = extend_odd(x) + x, j times.

    Raises 1 + degree by a factor of 2**j.
    """
    if j < 0:
        raise ValueError(f"harmonic index must be >= 0, got {j}")
    out = a
    for _ in range(j):
        out = extend_odd(out) + out
    return out


def star(a: AlphaSeq, b: AlphaSeq) -> AlphaSeq:
    """Star product: a_o (a_e)^(b1-1) a_o (a_e)^(b2-1) ... a_o (a_e)^(bk-1) a.

    The zero sequence is the identity on either side. Multiplicative on the
    1 + degree index: 1 + D(a*b) = (1 + D(a)) * (1 + D(b)).
    """
    if not a:
        return b
    if not b:
        return a
    ao, ae = extend_odd(a), extend_even(a)
    out: list[int] = []
    for v in b:
        out += ao
        out += ae * (v - 1)
    out += a
    return tuple(out)


def is_fundamental(a: AlphaSeq) -> bool:
    """True if ``a`` is not the first harmonic of any sequence.

    Checking one doubling suffices: every higher harmonic is itself a first
    harmonic. The only possible halving point is after ceil(len/2) elements;
    rebuilding from the candidate tail settles both length parities at once.
    """
    b = a[(len(a) + 1) // 2:]
    return extend_odd(b) + b != a


def two_adic_split(n: int) -> tuple[int, int]:
    """Write n = 2**l * (2s + 1) and return (l, s)."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    l = (n & -n).bit_length() - 1
    return l, (n >> l) // 2


def least_element(n: int) -> AlphaSeq:
    """Minimum of L_n: with n = 2**l (2s+1), h_l of the zero sequence,
    star-multiplied by (2, 1^(2(s-1))) when s > 0."""
    l, s = two_adic_split(n)
    base = harmonic(l, ZERO)
    if s == 0:
        return base
    return star(base, (2,) + (1,) * (2 * (s - 1)))


@dataclass(frozen=True)
class SetContext:
    """A target universe: A_n (compositions of n), L_n (lexical, 1 + degree = n)
    or D_n (lexical with degree class dividing n)."""

    kind: str  # "A", "L" or "D"
    n: int

    def __post_init__(self) -> None:
        if self.kind not in ("A", "L", "D"):
            raise ValueError(f"kind must be A, L or D, got {self.kind!r}")
        if self.n < 1:
            raise InvalidN(f"n must be >= 1, got {self.n}")

    def contains(self, a: AlphaSeq) -> bool:
        if any(v < 1 for v in a):
            return False
        if self.kind == "A":
            return len(a) >= 1 and degree(a) == self.n
        if self.kind == "L":
            return is_lexical(a) and 1 + degree(a) == self.n
        return is_lexical(a) and self.n % (1 + degree(a)) == 0


def max_element(ctx: SetContext) -> AlphaSeq:
    """Maximum of the context set: (n) for A_n, (n-1) for L_n and D_n,
    the zero sequence for L_1 and D_1."""
    if ctx.kind == "A":
        return (ctx.n,)
    return (ctx.n - 1,) if ctx.n >= 2 else ZERO


def parse_sequence(text: str) -> AlphaSeq:
    """Parse the canonical text form: comma-separated positive integers, or "0"."""
    t = text.strip()
    if t == "0":
        return ZERO
    try:
        vals = tuple(int(p) for p in t.split(","))
    except ValueError:
        raise ValueError(f"not a sequence: {text!r}") from None
    if not vals or any(v < 1 for v in vals):
        raise ValueError(f"sequence elements must be positive integers: {text!r}")
    return vals


def format_sequence(a: AlphaSeq) -> str:
    """Canonical text form; the zero sequence renders as "0"."""
    return ",".join(map(str, a)) if a else "0"
