"""Bundled low-rank induction tables and their recomputation.

The ``data`` directory ships one tab-separated file per printed table.
Three of them list basic orbits of an exceptional group with expected
dimensions; the rest list orbits of a reductive quotient together with a
dimension, a Weyl-group character, and the name of the induced character.
``check_tables`` re-derives every cell that lives in a classical factor,
dimensions through ``springer_dim`` and characters through
``springer_char``, and reports agreement cell by cell.  Exceptional-group
names and induced-character names are echoed, never checked.

Two rows of the A3 x D5 table carry an ``expect-mismatch`` flag: the
printed d and character data of its two D5 factor orbits are swapped
relative to recomputation, while the prose and the summary table of
non-Springer characters agree with the recomputed values.  The flagged
rows are reported as discrepancies without failing the overall check.
Since that table repeats each D5 factor across several rows, its factors
are checked once each, at the row where they first appear.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .orbits import GroupType, Orbit, springer_dim, validate_orbit
from .partitions import parse_partition
from .springer import WChar, springer_char

BASIC_TABLES = (1, 4, 6)
ORBIT_TABLES = (2, 3, 5, 7, 8, 9, 10, 11)
ALL_TABLES = tuple(sorted(BASIC_TABLES + ORBIT_TABLES))

_KNOWN_FLAGS = frozenset({"exception", "expect-mismatch", "no-char"})

# Factor layout of each orbit table, in the order the row keys print the
# components.  None marks an exceptional factor that stays opaque.
_FACTORS: dict[int, tuple[GroupType | None, ...]] = {
    2: (GroupType("C", 3), GroupType("A", 1)),
    3: (GroupType("B", 4),),
    5: (GroupType("D", 6), GroupType("A", 1)),
    7: (GroupType("D", 8),),
    8: (GroupType("D", 5), GroupType("A", 3)),
    9: (None, GroupType("A", 2)),
    10: (None, GroupType("A", 1)),
}

# The summary table names its case per row; keys print the A factor last.
_CASES: dict[str, tuple[GroupType | None, ...]] = {
    "D_8": (GroupType("D", 8),),
    "A_3 x D_5": (GroupType("D", 5), GroupType("A", 3)),
    "E_7 x A_1": (None, GroupType("A", 1)),
    "A_2 x E_6": (None, GroupType("A", 2)),
}

# Tables whose factors repeat row to row get one check per distinct factor.
_SAMPLED_TABLES = frozenset({8})


@dataclass(frozen=True)
class TableRecord:
    """One parsed row: a key, the printed cells, and bookkeeping flags."""

    table: int
    key: str
    d: int
    character: str | None = None
    jchi: str | None = None
    flags: frozenset[str] = frozenset()
    case: str | None = None

    @property
    def row_id(self) -> str:
        return self.key if self.case is None else f"{self.case}: {self.key}"


def _data_lines(number: int) -> list[list[str]]:
    name = f"table{number:02d}.txt"
    text = resources.files(__package__).joinpath("data", name).read_text("utf-8")
    rows = []
    for line in text.splitlines():
        if line and not line.startswith("#"):
            rows.append(line.split("\t"))
    return rows


def _slots_for(rec: TableRecord) -> tuple[GroupType | None, ...]:
    if rec.case is not None:
        return _CASES[rec.case]
    return _FACTORS[rec.table]


def _split_product(text: str, count: int) -> list[str]:
    pieces = text.rsplit(" x ", count - 1) if count > 1 else [text]
    if len(pieces) != count or not all(p.strip() for p in pieces):
        raise ValueError(f"expected {count} factors in {text!r}")
    return [p.strip() for p in pieces]


def _parts(text: str) -> tuple[int, ...]:
    cleaned = text.strip()
    if cleaned.startswith("(") and cleaned.endswith(")"):
        cleaned = cleaned[1:-1]
    return parse_partition(cleaned.replace(",", " "))


def _split_top(text: str) -> list[str]:
    pieces, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append(text[start:i])
            start = i + 1
    pieces.append(text[start:])
    return pieces


def _bipartition(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    cleaned = text.strip()
    if not (cleaned.startswith("(") and cleaned.endswith(")")):
        raise ValueError(f"bad bipartition {text!r}")
    halves = _split_top(cleaned[1:-1])
    if len(halves) != 2:
        raise ValueError(f"bad bipartition {text!r}")
    return _parts(halves[0]), _parts(halves[1])


def _key_orbits(rec: TableRecord) -> tuple[Orbit | str, ...]:
    """Key components as orbits, opaque exceptional names left as strings."""
    slots = _slots_for(rec)
    pieces = _split_product(rec.key, len(slots))
    out: list[Orbit | str] = []
    for group, piece in zip(slots, pieces):
        out.append(piece if group is None else validate_orbit(group, _parts(piece)))
    return tuple(out)


def _char_slots(rec: TableRecord) -> tuple[GroupType | None, ...]:
    # The A1 x E7 table keeps the A factor in the key only; its character
    # cells print just the exceptional name.
    if rec.table == 10:
        return (None,)
    return _slots_for(rec)


def _char_components(
    rec: TableRecord,
) -> tuple[tuple[tuple[int, ...], tuple[int, ...]] | tuple[int, ...] | str, ...]:
    """Character cell split by factor: bipartition, partition, or opaque."""
    assert rec.character is not None
    slots = _char_slots(rec)
    pieces = _split_product(rec.character, len(slots))
    out: list = []
    for group, piece in zip(slots, pieces):
        if group is None:
            out.append(piece)
        elif group.family == "A":
            out.append(_parts(piece))
        else:
            out.append(_bipartition(piece))
    return tuple(out)


def load_table(number: int) -> tuple[TableRecord, ...]:
    """Parse one bundled table, failing loudly on any malformed row."""
    if number not in ALL_TABLES:
        raise ValueError(f"no table {number}, have 1..11")
    records: list[TableRecord] = []
    for cols in _data_lines(number):
        if number in BASIC_TABLES:
            name, delta = cols
            records.append(TableRecord(number, name, int(delta)))
            continue
        if number == 11:
            case, key, d, char, jchi = cols
            records.append(TableRecord(number, key, int(d), char, jchi, case=case))
            continue
        key, d, char, jchi = cols[:4]
        flags = frozenset(t for t in cols[4].split(",") if t) if len(cols) > 4 else frozenset()
        if char == "-":
            char = jchi = None
        records.append(TableRecord(number, key, int(d), char, jchi, flags))
    for rec in records:
        _validate(rec)
    return tuple(records)


def _validate(rec: TableRecord) -> None:
    if rec.d < 0:
        raise ValueError(f"negative dimension in table {rec.table}: {rec.row_id}")
    bad = rec.flags - _KNOWN_FLAGS
    if bad:
        raise ValueError(f"unknown flags {sorted(bad)} in table {rec.table}")
    if rec.table in BASIC_TABLES:
        if not rec.key:
            raise ValueError(f"empty orbit name in table {rec.table}")
        return
    _key_orbits(rec)
    if rec.character is None:
        if "no-char" not in rec.flags:
            raise ValueError(f"missing character without flag: {rec.row_id}")
        return
    if "no-char" in rec.flags:
        raise ValueError(f"no-char row with a character: {rec.row_id}")
    if not rec.jchi:
        raise ValueError(f"missing induced character: {rec.row_id}")
    _char_components(rec)


def load_all() -> dict[int, tuple[TableRecord, ...]]:
    return {number: load_table(number) for number in ALL_TABLES}


@dataclass(frozen=True)
class CellCheck:
    """One recomputed cell, with the printed value alongside."""

    table: int
    row: str
    column: str
    printed: str
    recomputed: str
    match: bool
    expected_mismatch: bool = False

    def to_dict(self) -> dict[str, object]:
        return {
            "table": self.table,
            "row": self.row,
            "column": self.column,
            "printed": self.printed,
            "recomputed": self.recomputed,
            "match": self.match,
            "expected_mismatch": self.expected_mismatch,
        }


@dataclass(frozen=True)
class DiscrepancyReport:
    cells: tuple[CellCheck, ...] = field(default_factory=tuple)

    @property
    def mismatches(self) -> tuple[CellCheck, ...]:
        return tuple(c for c in self.cells if not c.match)

    @property
    def surprises(self) -> tuple[CellCheck, ...]:
        """Cells whose outcome disagrees with their annotation."""
        return tuple(c for c in self.cells if c.match == c.expected_mismatch)

    @property
    def ok(self) -> bool:
        return not self.surprises

    def to_dict(self) -> dict[str, object]:
        return {
            "checked": len(self.cells),
            "mismatched": len(self.mismatches),
            "ok": self.ok,
            "cells": [c.to_dict() for c in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _row_cells(rec: TableRecord) -> list[CellCheck]:
    components = _key_orbits(rec)
    expected = "expect-mismatch" in rec.flags
    cells: list[CellCheck] = []
    if all(isinstance(c, Orbit) for c in components):
        total = sum(springer_dim(c) for c in components if isinstance(c, Orbit))
        cells.append(
            CellCheck(
                rec.table, rec.row_id, "d", str(rec.d), str(total),
                total == rec.d, expected,
            )
        )
    if rec.character is None:
        return cells
    slots = _char_slots(rec)
    printed = _char_components(rec)
    if all(group is None for group in slots):
        return cells
    printed_text: list[str] = []
    recomputed_text: list[str] = []
    agree = True
    for group, cell, part in zip(slots, printed, components):
        if group is None:
            printed_text.append(str(cell))
            recomputed_text.append(str(cell))
            continue
        assert isinstance(part, Orbit)
        if group.family == "A":
            have = WChar("A", part.partition)
            want = WChar("A", cell)  # type: ignore[arg-type]
        else:
            have = springer_char(part).unlabelled()
            want = WChar(group.family, *cell)  # type: ignore[misc]
        printed_text.append(str(want))
        recomputed_text.append(str(have))
        agree = agree and have == want
    cells.append(
        CellCheck(
            rec.table, rec.row_id, "character",
            " x ".join(printed_text), " x ".join(recomputed_text),
            agree, expected,
        )
    )
    return cells


def check_tables() -> DiscrepancyReport:
    """Recompute every classical-factor cell of the bundled tables.

    Each checkable cell appears exactly once in the report.  Rows of the
    basic-orbit tables contribute no cells, and neither do rows whose every
    factor is exceptional.
    """
    cells: list[CellCheck] = []
    for number in ORBIT_TABLES:
        seen: set[tuple[int, ...]] = set()
        for rec in load_table(number):
            if number in _SAMPLED_TABLES:
                principal = _key_orbits(rec)[0]
                assert isinstance(principal, Orbit)
                if principal.partition in seen:
                    continue
                seen.add(principal.partition)
            cells.extend(_row_cells(rec))
    keys = {(c.table, c.row, c.column) for c in cells}
    assert len(keys) == len(cells), "duplicate checkable cell"
    return DiscrepancyReport(tuple(cells))


def character_aliases() -> tuple[frozenset[str], ...]:
    """Groups of character names the tables themselves declare equal.

    Cells like ``35_4 = 35_b`` reconcile two naming schemes; chains sharing
    a name are merged, so the groups are transitive closures.
    """
    parent: dict[str, str] = {}

    def find(name: str) -> str:
        parent.setdefault(name, name)
        while parent[name] != name:
            parent[name] = parent[parent[name]]
            name = parent[name]
        return name

    for number in ORBIT_TABLES:
        for rec in load_table(number):
            for cell in (rec.character, rec.jchi):
                if not cell:
                    continue
                for component in cell.split(" x "):
                    if " = " not in component:
                        continue
                    names = [n.strip() for n in component.split(" = ")]
                    for a, b in zip(names, names[1:]):
                        parent[find(a)] = find(b)
    groups: dict[str, set[str]] = {}
    for name in parent:
        groups.setdefault(find(name), set()).add(name)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))
