import pytest

from redtypes.jinduction import LeviIndex, interior_splits, j_induce, ls_induce_orbit
from redtypes.orbits import GroupType, list_orbits, parse_orbit
from redtypes.springer import WChar, b_invariant, springer_char


def test_levi_index_validation():
    with pytest.raises(ValueError):
        LeviIndex("B", 4, 2)
    with pytest.raises(ValueError):
        LeviIndex("C", 3, 4)
    assert LeviIndex("C", 6, 3).interior
    assert LeviIndex("C", 6, 0).hyperspecial
    assert LeviIndex("D", 6, 1).hyperspecial
    assert LeviIndex("D", 6, 2).interior


def test_interior_splits():
    assert interior_splits("C", 6) == [1, 2, 3, 4, 5]
    assert interior_splits("D", 6) == [2, 3, 4]
    assert interior_splits("C", 1) == []
    assert interior_splits("D", 3) == []


def test_split_characters_agree_on_the_example_pair():
    'Two different splittings of the same class induce the same character'
    levi = LeviIndex("C", 6, 3)
    a = j_induce(
        levi,
        springer_char(parse_orbit("C3:4,2")),
        springer_char(parse_orbit("C3:4,2")),
    )
    b = j_induce(
        levi,
        springer_char(parse_orbit("C3:3,3")),
        springer_char(parse_orbit("C3:6")),
    )
    assert a == b == WChar("C", (4,), (2,))


def test_rank_bookkeeping():
    levi = LeviIndex("C", 5, 2)
    value = j_induce(
        levi,
        springer_char(parse_orbit("C2:2,2")),
        springer_char(parse_orbit("C3:4,2")),
    )
    assert value.rank == 5
    with pytest.raises(ValueError):
        j_induce(
            levi,
            springer_char(parse_orbit("C3:4,2")),
            springer_char(parse_orbit("C3:4,2")),
        )


def test_b_additivity_small():
    for family in "CD":
        for n in range(2, 6):
            for k in interior_splits(family, n):
                for left in list_orbits(GroupType(family, k)):
                    for right in list_orbits(GroupType(family, n - k)):
                        cl, cr = springer_char(left), springer_char(right)
                        value = j_induce(LeviIndex(family, n, k), cl, cr)
                        assert b_invariant(value) == b_invariant(cl) + b_invariant(cr)


def test_associativity_small():
    'Inducing in two stages lands on the same character either way'
    family = "C"
    for n in range(3, 6):
        for a in range(1, n - 1):
            for b in range(1, n - a):
                c = n - a - b
                for oa in list_orbits(GroupType(family, a)):
                    for ob in list_orbits(GroupType(family, b)):
                        for oc in list_orbits(GroupType(family, c)):
                            ca, cb, cc = map(springer_char, (oa, ob, oc))
                            left_first = j_induce(
                                LeviIndex(family, n, a + b),
                                j_induce(LeviIndex(family, a + b, a), ca, cb),
                                cc,
                            )
                            right_first = j_induce(
                                LeviIndex(family, n, a),
                                ca,
                                j_induce(LeviIndex(family, n - a, b), cb, cc),
                            )
                            assert left_first == right_first


def test_orbit_induction_round_trip():
    'Where the induced character is Springer, the preimage induces it back'
    levi = LeviIndex("C", 4, 2)
    for left in list_orbits(GroupType("C", 2)):
        for right in list_orbits(GroupType("C", 2)):
            o = ls_induce_orbit(levi, left, right)
            if o is None:
                continue
            assert springer_char(o).unlabelled() == j_induce(
                levi, springer_char(left), springer_char(right)
            ).unlabelled()
