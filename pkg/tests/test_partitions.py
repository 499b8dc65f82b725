import pytest

from redtypes.partitions import (
    GEQ,
    INCOMPARABLE,
    LEQ,
    conjugate,
    dominance_leq,
    ensure_partition,
    format_exponent,
    format_partition,
    from_incseq,
    n_weight,
    parse_partition,
    partitions_of,
    sort_parts,
    to_incseq,
)


def test_ensure_partition_rejects_bad_tuples():
    for bad in [(0,), (-1,), (1, 2), (3, 1, 2)]:
        with pytest.raises(ValueError):
            ensure_partition(bad)
    ensure_partition(())
    ensure_partition((4, 2, 2, 1))


def test_conjugate_known_cases():
    examples = {
        (): (),
        (1,): (1,),
        (4, 2): (2, 2, 1, 1),
        (3, 3): (2, 2, 2),
        (5, 2, 2, 1): (4, 3, 1, 1, 1),
        (2, 1, 1, 1, 1): (5, 1),
    }
    for p, expected in examples.items():
        assert conjugate(p) == expected


def test_conjugate_is_an_involution():
    for n in range(9):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p


def test_n_weight_matches_binomial_form():
    'n(p) also equals the sum of C(p*_i, 2) over the conjugate parts'
    for n in range(9):
        for p in partitions_of(n):
            binom = sum(c * (c - 1) // 2 for c in conjugate(p))
            assert n_weight(p) == binom
    assert n_weight((4, 2)) == 2
    assert n_weight((1, 1, 1, 1)) == 6


def test_dominance_known_triples():
    assert dominance_leq((2, 2), (4,)) == LEQ
    assert dominance_leq((4,), (2, 2)) == GEQ
    assert dominance_leq((3, 3), (4, 1, 1)) == INCOMPARABLE
    assert dominance_leq((2, 1), (2, 1)) == LEQ
    with pytest.raises(ValueError):
        dominance_leq((2,), (3,))


def test_dominance_is_reflexive_and_antisymmetric():
    pairs = [(p, q) for p in partitions_of(6) for q in partitions_of(6)]
    for p, q in pairs:
        if p == q:
            assert dominance_leq(p, q) == LEQ
        elif dominance_leq(p, q) == LEQ:
            assert dominance_leq(q, p) == GEQ


def test_incseq_round_trip():
    for n in range(8):
        for p in partitions_of(n):
            for extra in range(3):
                length = len(p) + extra
                assert from_incseq(to_incseq(p, length)) == p


def test_incseq_shift_identity():
    'Lengthening by one prepends a zero and shifts everything up'
    s = to_incseq((4, 2, 1), 3)
    assert to_incseq((4, 2, 1), 4) == (0,) + tuple(x + 1 for x in s)
    with pytest.raises(ValueError):
        to_incseq((4, 2, 1), 2)
    with pytest.raises(ValueError):
        from_incseq((1, 1, 2))


def test_partitions_of_counts():
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, expected in enumerate(counts):
        assert sum(1 for _ in partitions_of(n)) == expected


def test_partitions_of_respects_max_part():
    got = set(partitions_of(5, max_part=2))
    assert got == {(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)}
    for p in partitions_of(7, max_part=3):
        assert not p or p[0] <= 3


def test_parse_partition_both_notations():
    assert parse_partition("9,2,2,1,1,1") == (9, 2, 2, 1, 1, 1)
    assert parse_partition("1^3 2^2 9^1") == (9, 2, 2, 1, 1, 1)
    assert parse_partition("2^2 1^5") == (2, 2, 1, 1, 1, 1, 1)
    assert parse_partition("11") == (11,)
    assert parse_partition("1^1 2^2 11") == (11, 2, 2, 1)
    assert parse_partition("") == ()
    assert parse_partition("0") == ()
    for bad in ["a", "1^x", "2,x"]:
        with pytest.raises(ValueError):
            parse_partition(bad)


def test_format_round_trips():
    for n in range(8):
        for p in partitions_of(n):
            assert parse_partition(format_partition(p)) == p
            assert parse_partition(format_exponent(p)) == p
    assert format_exponent((9, 2, 2, 1, 1, 1)) == "1^3 2^2 9^1"


def test_sort_parts_drops_nothing():
    assert sort_parts([1, 3, 2, 3]) == (3, 3, 2, 1)
    assert sort_parts(()) == ()
