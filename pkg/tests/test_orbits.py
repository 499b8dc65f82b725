import pytest

from redtypes.orbits import (
    GroupType,
    Orbit,
    centralizer_dim,
    closure_leq,
    is_special,
    iter_groups,
    list_orbits,
    orbit_dim,
    parse_group,
    parse_orbit,
    springer_dim,
    validate_orbit,
)
from redtypes.partitions import INCOMPARABLE, LEQ, n_weight


def test_partition_sizes_per_family():
    assert GroupType("A", 5).partition_size == 6
    assert GroupType("B", 4).partition_size == 9
    assert GroupType("C", 3).partition_size == 6
    assert GroupType("D", 8).partition_size == 16


def test_group_validation():
    with pytest.raises(ValueError):
        GroupType("E", 6)
    with pytest.raises(ValueError):
        GroupType("C", 0)
    assert parse_group("D8") == GroupType("D", 8)
    with pytest.raises(ValueError):
        parse_group("8D")


def test_multiplicity_rules():
    'B and D need even parts in even multiplicity, C the odd parts'
    with pytest.raises(ValueError):
        validate_orbit(GroupType("C", 3), (3, 2, 1))
    with pytest.raises(ValueError):
        validate_orbit(GroupType("D", 4), (6, 2))
    with pytest.raises(ValueError):
        validate_orbit(GroupType("B", 2), (4, 1))
    validate_orbit(GroupType("C", 3), (4, 2))
    validate_orbit(GroupType("D", 4), (3, 2, 2, 1))
    validate_orbit(GroupType("B", 2), (2, 2, 1))


def test_orbit_counts():
    assert len(list_orbits(GroupType("C", 3))) == 8
    assert len(list_orbits(GroupType("D", 4))) == 12
    assert len(list_orbits(GroupType("A", 4))) == 7


def test_very_even_labels():
    g = GroupType("D", 4)
    with pytest.raises(ValueError):
        Orbit(g, (4, 4))
    with pytest.raises(ValueError):
        Orbit(g, (3, 3, 1, 1), "I")
    both = [o for o in list_orbits(g) if o.partition == (4, 4)]
    assert [o.label for o in both] == ["I", "II"]


def test_springer_dim_type_a_is_the_weight():
    for o in list_orbits(GroupType("A", 5)):
        assert springer_dim(o) == n_weight(o.partition)


def test_springer_dim_known_values():
    examples = {
        ("C3", "6"): 0,
        ("C3", "4,2"): 1,
        ("C3", "4,1,1"): 2,
        ("C3", "2,1,1,1,1"): 6,
        ("D5", "5,2,2,1"): 4,
        ("D5", "3,2,2,1,1,1"): 8,
        ("D8", "11,2,2,1"): 4,
        ("D8", "3,2,2,2,2,1,1,1,1,1"): 26,
        ("B4", "2,2,1,1,1,1,1"): 10,
        ("B4", "4,4,1"): 3,
    }
    for (group, parts), expected in examples.items():
        assert springer_dim(parse_orbit(f"{group}:{parts}")) == expected


def test_fiber_dimension_agrees_with_centralizer_route():
    'Two independent routes: the quarter-sum formula and (dim Z - rank) / 2'
    for family in "CD":
        for group in iter_groups(family, 6):
            for o in list_orbits(group):
                via_centralizer = (centralizer_dim(o) - group.cartan_rank) // 2
                assert springer_dim(o) == via_centralizer, o


def test_orbit_dim_complements_centralizer():
    for group in [GroupType("C", 4), GroupType("D", 5), GroupType("B", 3)]:
        for o in list_orbits(group):
            assert orbit_dim(o) + centralizer_dim(o) == group.dim


def test_non_special_sets():
    expected = {
        ("C", 3): {(4, 1, 1), (2, 1, 1, 1, 1)},
        ("D", 5): {(5, 2, 2, 1), (3, 2, 2, 1, 1, 1)},
        ("B", 4): {(4, 4, 1), (2, 2, 2, 2, 1), (2, 2, 1, 1, 1, 1, 1)},
    }
    for (family, n), parts in expected.items():
        group = GroupType(family, n)
        got = {o.partition for o in list_orbits(group) if not is_special(o)}
        assert got == parts


def test_closure_order_follows_dominance():
    g = GroupType("C", 3)
    assert closure_leq(parse_orbit("C3:2,2,2"), parse_orbit("C3:4,2")) == LEQ
    assert (
        closure_leq(parse_orbit("C3:4,1,1"), parse_orbit("C3:3,3")) == INCOMPARABLE
    )
    d4 = {o.label: o for o in list_orbits(GroupType("D", 4)) if o.partition == (4, 4)}
    assert closure_leq(d4["I"], d4["II"]) == INCOMPARABLE
    with pytest.raises(ValueError):
        closure_leq(parse_orbit("C3:6"), parse_orbit("C2:4"))
    assert closure_leq(parse_orbit("C3:6"), parse_orbit("C3:6")) == LEQ
    assert g == GroupType("C", 3)


def test_parse_orbit_round_trip():
    for text in ["C3:4,2", "D8:5,4,4,3", "D4:4,4+", "D4:4,4-", "B4:2,2,1,1,1,1,1"]:
        o = parse_orbit(text)
        assert parse_orbit(str(o)) == o
    with pytest.raises(ValueError):
        parse_orbit("C3")
    with pytest.raises(ValueError):
        parse_orbit("C3:5,1")
