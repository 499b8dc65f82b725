import json

from redtypes.tables import (
    ALL_TABLES,
    character_aliases,
    check_tables,
    load_all,
    load_table,
)


def test_every_table_loads_and_row_counts():
    counts = {1: 9, 2: 3, 3: 2, 4: 12, 5: 8, 6: 30, 7: 10, 8: 10, 9: 12, 10: 20, 11: 4}
    loaded = load_all()
    assert set(loaded) == set(ALL_TABLES)
    for number, rows in loaded.items():
        assert len(rows) == counts[number]


def test_basic_tables_carry_expected_dimensions():
    f4 = {rec.key: rec.d for rec in load_table(1)}
    assert f4["F_4"] == 0
    assert f4["A_1 + ~A_1"] == 10
    e7 = {rec.key: rec.d for rec in load_table(4)}
    assert e7["D_6(a_2)"] == 8
    e8 = {rec.key: rec.d for rec in load_table(6)}
    assert e8["4A_1"] == 56
    assert len({rec.key for rec in load_table(6)}) == 30


def test_rows_without_characters_are_flagged():
    for number, expected in [(5, 2), (8, 1), (10, 2)]:
        rows = [rec for rec in load_table(number) if "no-char" in rec.flags]
        assert len(rows) == expected
        for rec in rows:
            assert rec.character is None and rec.jchi is None


def test_full_check_outcome():
    report = check_tables()
    assert len(report.cells) == 66
    assert report.ok
    assert len(report.mismatches) == 4
    rows = {(c.table, c.row) for c in report.mismatches}
    assert rows == {(8, "1^3 2^2 3^1 x 4"), (8, "1^1 2^2 5^1 x 4")}
    for cell in report.mismatches:
        assert cell.expected_mismatch


def test_swapped_rows_recompute_to_each_other():
    by_row = {(c.row, c.column): c for c in check_tables().mismatches}
    assert by_row[("1^3 2^2 3^1 x 4", "d")].recomputed == "8"
    assert by_row[("1^1 2^2 5^1 x 4", "d")].recomputed == "4"
    swapped = by_row[("1^3 2^2 3^1 x 4", "character")]
    other = by_row[("1^1 2^2 5^1 x 4", "character")]
    assert swapped.printed == other.recomputed
    assert other.printed == swapped.recomputed


def test_matching_tables_are_fully_green():
    report = check_tables()
    for number in (2, 3, 5, 7, 9, 11):
        cells = [c for c in report.cells if c.table == number]
        assert cells
        assert all(c.match for c in cells), number


def test_cells_are_unique_and_deterministic():
    first = check_tables()
    second = check_tables()
    keys = [(c.table, c.row, c.column) for c in first.cells]
    assert len(keys) == len(set(keys))
    assert first == second


def test_not_a_value_rows_check_dimension_only():
    report = check_tables()
    flagged = [rec.key for rec in load_table(5) if "no-char" in rec.flags]
    for key in flagged:
        columns = {c.column for c in report.cells if c.table == 5 and c.row == key}
        assert columns == {"d"}


def test_alias_groups():
    groups = {frozenset(g) for g in character_aliases()}
    assert frozenset({"35_4", "35_b", "phi_{35,4}"}) in groups
    assert frozenset({"216_9", "216_a'", "phi_{216,9}"}) in groups
    assert frozenset({"1050_10", "1050_x"}) in groups
    assert frozenset({"840_26", "840_x * sign"}) in groups


def test_report_serialization_round_trips():
    report = check_tables()
    text = report.to_json()
    parsed = json.loads(text)
    assert json.dumps(parsed, indent=2) == text
    assert parsed["checked"] == 66
    assert parsed["ok"] is True
