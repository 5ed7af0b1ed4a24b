import pytest
from hypothesis import given

from alphaseq.core import (
    EQUAL,
    GREATER,
    LESS,
    ZERO,
    SetContext,
    compare,
    concat,
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
    order_key,
    parse_sequence,
    power,
    right_sequence,
    star,
    two_adic_split,
)
from alphaseq.errors import InvalidN, PrefixAmbiguity, UndefinedOperation
from alphaseq.oracle import all_compositions, oracle_ln

from conftest import nonempty_sequences, sequences, sequences_up_to_degree


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((2, 1), (3,), LESS),
        ((4, 3), (4, 2, 1), LESS),
        (ZERO, (1,), LESS),
        ((3, 1, 2, 1), (3, 1, 2, 1), EQUAL),
        ((3,), (2, 1), GREATER),
        (ZERO, ZERO, EQUAL),
    ],
)
def test_compare_examples(a, b, expected):
    assert compare(a, b) == expected


def test_compare_is_the_position_order_exhaustively():
    # a consistent strict total order: compare agrees with rank in the sorted list
    for n in range(1, 9):
        ordered = sorted(all_compositions(n), key=order_key)
        for i, a in enumerate(ordered):
            for j, b in enumerate(ordered):
                want = LESS if i < j else GREATER if i > j else EQUAL
                assert compare(a, b) == want


@given(sequences, sequences)
def test_compare_matches_order_key(a, b):
    ka, kb = order_key(a), order_key(b)
    want = LESS if ka < kb else GREATER if ka > kb else EQUAL
    assert compare(a, b) == want


@given(sequences, sequences)
def test_compare_antisymmetric(a, b):
    assert compare(a, b) == -compare(b, a)
    assert (compare(a, b) == EQUAL) == (a == b)


@given(sequences, sequences, sequences)
def test_compare_transitive(a, b, c):
    if compare(a, b) == LESS and compare(b, c) == LESS:
        assert compare(a, c) == LESS


def test_right_sequence():
    assert right_sequence((3, 1, 2, 1), 1) == (3, 1, 2, 1)
    assert right_sequence((3, 1, 2, 1), 3) == (2, 1)
    with pytest.raises(IndexError):
        right_sequence((3, 1, 2, 1), 5)
    with pytest.raises(IndexError):
        right_sequence((3, 1, 2, 1), 0)


@pytest.mark.parametrize(
    "a, expected",
    [
        ((2, 1, 2, 1), True),
        ((5,), True),
        ((1, 1), False),
        ((3, 1, 3), False),
        (ZERO, True),
        ((1,), True),
    ],
)
def test_is_lexical_examples(a, expected):
    assert is_lexical(a) is expected


def test_meet_examples():
    assert meet((3, 2, 3, 2), (3, 1, 1, 3, 2)) == (3, 1)
    assert meet((3, 1, 2, 1), (4, 2, 1)) == (3,)
    assert meet((2, 1), (2, 1)) == (2, 1)


def test_meet_prefix_is_an_error():
    with pytest.raises(PrefixAmbiguity):
        meet((3, 1), (3, 1, 2))
    with pytest.raises(PrefixAmbiguity):
        meet((3, 1, 2), (3, 1))
    with pytest.raises(PrefixAmbiguity):
        meet(ZERO, (1,))


@given(nonempty_sequences, nonempty_sequences)
def test_meet_symmetric_and_prefixed(a, b):
    try:
        m = meet(a, b)
    except PrefixAmbiguity:
        assert a[: len(b)] == b or b[: len(a)] == a
        return
    assert meet(b, a) == m
    assert m[:-1] == a[: len(m) - 1] == b[: len(m) - 1]
    assert m[-1] == min(a[len(m) - 1], b[len(m) - 1]) if a != b else True


def test_concat_and_power():
    assert concat((3, 1), (2, 1)) == (3, 1, 2, 1)
    assert concat((2, 2), ZERO) == (2, 2)
    assert concat(ZERO, (2, 2)) == (2, 2)
    assert power((1,), 3) == (1, 1, 1)
    assert power((2, 1), 0) == ZERO
    with pytest.raises(ValueError):
        power((1,), -1)


def test_extend_even_odd_examples():
    assert extend_even((3,)) == (3, 1)
    assert extend_odd((3,)) == (4,)
    assert extend_odd(ZERO) == (1,)
    assert extend_even((3, 1)) == (3, 2)
    assert extend_odd((3, 1)) == (3, 1, 1)
    with pytest.raises(UndefinedOperation):
        extend_even(ZERO)


def test_extend_parity_and_degree_exhaustive():
    for a in sequences_up_to_degree(10):
        o = extend_odd(a)
        assert len(o) % 2 == 1 and degree(o) == degree(a) + 1
        if a:
            e = extend_even(a)
            assert len(e) % 2 == 0 and degree(e) == degree(a) + 1


def test_harmonic_examples():
    a = (3, 1, 2)
    assert harmonic(0, a) == a
    assert harmonic(3, ZERO) == (2, 1, 1, 2, 1)
    assert harmonic(1, (3,)) == (4, 3)
    with pytest.raises(ValueError):
        harmonic(-1, a)


def test_star_examples():
    assert star((3,), (1,)) == (4, 3)
    assert star(ZERO, (2, 1)) == (2, 1)
    assert star((2, 1), ZERO) == (2, 1)
    assert star((1,), (2,)) == (2, 1, 1, 1)


def test_degree_laws_exhaustive():
    # concat adds degrees; star and harmonic are multiplicative on 1 + degree
    pool = sequences_up_to_degree(8)
    for a in pool:
        for j in range(5):
            assert 1 + degree(harmonic(j, a)) == 2**j * (1 + degree(a))
        for b in pool:
            assert degree(concat(a, b)) == degree(a) + degree(b)
            assert 1 + degree(star(a, b)) == (1 + degree(a)) * (1 + degree(b))


def test_star_of_lexicals_is_lexical():
    lexicals = [a for a in sequences_up_to_degree(7) if is_lexical(a)]
    for a in lexicals:
        for b in lexicals:
            assert is_lexical(star(a, b)), (a, b)


@pytest.mark.parametrize(
    "a, expected",
    [
        ((1,), False),
        ((2, 1), False),
        ((3,), True),
        (ZERO, True),
        ((4, 3), False),
        ((2, 1, 1, 2, 1), False),
    ],
)
def test_is_fundamental_examples(a, expected):
    assert is_fundamental(a) is expected


def test_fundamental_means_not_a_first_harmonic():
    pool = sequences_up_to_degree(10)
    harmonics = {harmonic(1, b) for b in pool if degree(b) < 10}
    for a in pool:
        assert is_fundamental(a) == (a not in harmonics)


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, ZERO),
        (2, (1,)),
        (6, (2, 1, 1, 1)),
        (7, (2, 1, 1, 1, 1)),
        (8, (2, 1, 1, 2, 1)),
    ],
)
def test_least_element_examples(n, expected):
    assert least_element(n) == expected


def test_least_element_is_the_oracle_minimum():
    for n in range(1, 17):
        assert least_element(n) == oracle_ln(n)[0]


def test_least_element_invalid():
    with pytest.raises(InvalidN):
        least_element(0)


def test_two_adic_split():
    assert two_adic_split(8) == (3, 0)
    assert two_adic_split(7) == (0, 3)
    assert two_adic_split(12) == (2, 1)
    with pytest.raises(InvalidN):
        two_adic_split(0)


def test_max_element():
    assert max_element(SetContext("A", 4)) == (4,)
    assert max_element(SetContext("L", 7)) == (6,)
    assert max_element(SetContext("D", 8)) == (7,)
    assert max_element(SetContext("L", 1)) == ZERO
    with pytest.raises(InvalidN):
        SetContext("L", 0)


def test_set_membership():
    assert SetContext("A", 4).contains((1, 1, 2))
    assert not SetContext("A", 4).contains((4, 1))
    assert not SetContext("A", 4).contains(ZERO)
    assert SetContext("L", 8).contains((4, 3))
    assert not SetContext("L", 8).contains((2, 3, 2))  # right degree, not lexical
    assert SetContext("D", 8).contains((2, 1))
    assert SetContext("D", 8).contains(ZERO)
    assert not SetContext("D", 8).contains((2,))  # class 3 does not divide 8


def test_parse_and_format():
    assert parse_sequence("3,1,2,1") == (3, 1, 2, 1)
    assert parse_sequence("0") == ZERO
    assert format_sequence((3, 1, 2, 1)) == "3,1,2,1"
    assert format_sequence(ZERO) == "0"
    for bad in ("", "3,x", "3,0,1", "-2", "1,"):
        with pytest.raises(ValueError):
            parse_sequence(bad)


@given(sequences)
def test_format_parse_round_trip(a):
    assert parse_sequence(format_sequence(a)) == a
