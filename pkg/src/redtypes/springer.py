"""The Springer correspondence for classical types, and b-invariants.

Characters of the relevant Weyl groups are encoded as follows: for family A a
single partition, for B and C an ordered pair of partitions, for D an
unordered pair stored with the lexicographically larger half first.  A type D
pair with equal halves stands for two characters; when known, the same I/II
label as on very even orbits records which one is meant.

The orbit-to-character map writes the Jordan partition in increasing order,
pads it to the family's parity convention, adds the staircase, and splits the
resulting strictly increasing sequence into its odd and even terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .orbits import (
    FAMILIES,
    VERY_EVEN_LABELS,
    GroupType,
    Orbit,
    is_very_even,
    list_orbits,
)
from .partitions import ensure_partition, n_weight, parse_partition, sort_parts

_LABEL_SUFFIX = {"I": "+", "II": "-"}
_SUFFIX_LABEL = {"+": "I", "-": "II"}


@dataclass(frozen=True)
class WChar:
    """An irreducible character, encoded by one or two partitions.

    For family A the character is the partition ``zeta`` and ``eta`` stays
    empty.  For D the two halves are interchangeable and are canonicalized on
    construction, so equality is structural.
    """

    family: str
    zeta: tuple[int, ...]
    eta: tuple[int, ...] = ()
    label: str | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        ensure_partition(self.zeta)
        ensure_partition(self.eta)
        if self.family == "A" and self.eta:
            raise ValueError("family A characters carry a single partition")
        if self.family == "D" and self.eta > self.zeta:
            z, e = self.zeta, self.eta
            object.__setattr__(self, "zeta", e)
            object.__setattr__(self, "eta", z)
        if self.label is not None:
            if self.label not in VERY_EVEN_LABELS:
                raise ValueError(f"bad label {self.label!r}")
            if self.family != "D" or self.zeta != self.eta:
                raise ValueError("labels only apply to equal-half D characters")

    @property
    def rank(self) -> int:
        return sum(self.zeta) + sum(self.eta)

    def unlabelled(self) -> "WChar":
        return WChar(self.family, self.zeta, self.eta) if self.label else self

    def __str__(self) -> str:
        if self.family == "A":
            return "(" + ",".join(map(str, self.zeta)) + ")"
        halves = "((%s),(%s))" % (
            ",".join(map(str, self.zeta)),
            ",".join(map(str, self.eta)),
        )
        return halves + (_LABEL_SUFFIX[self.label] if self.label else "")


def parse_wchar(family: str, text: str) -> WChar:
    """Parse ``((4),(2))``, with an optional +/- suffix in family D."""
    text = text.strip()
    if family == "A":
        return WChar("A", parse_partition(text.strip("()")))
    label = None
    if text and text[-1] in _SUFFIX_LABEL:
        label = _SUFFIX_LABEL[text[-1]]
        text = text[:-1]
    if not (text.startswith("((") and text.endswith("))")):
        raise ValueError(f"bad character {text!r}, expected '((zeta),(eta))'")
    left, sep, right = text[2:-2].partition("),(")
    if not sep:
        raise ValueError(f"bad character {text!r}, expected two halves")
    return WChar(family, parse_partition(left), parse_partition(right), label)


def springer_char(o: Orbit) -> WChar:
    """Character attached to an orbit under the Springer correspondence."""
    family = o.group.family
    if family == "A":
        return WChar("A", o.partition)
    parts = sorted(o.partition)
    # B partitions have odd length and D even; C pads to even length.
    if family == "C" and len(parts) % 2 == 1:
        parts = [0] + parts
    assert len(parts) % 2 == (1 if family == "B" else 0)
    staircased = [part + i for i, part in enumerate(parts)]
    odd = [x for x in staircased if x % 2 == 1]
    even = [x for x in staircased if x % 2 == 0]
    assert len(odd) - len(even) == (1 if family == "B" else 0)
    zeta_seq = [(x - 1) // 2 for x in odd]
    eta_seq = [x // 2 for x in even]
    zeta = sort_parts(x - i for i, x in enumerate(zeta_seq))
    eta = sort_parts(x - i for i, x in enumerate(eta_seq))
    label = None
    if is_very_even(o.group, o.partition):
        # paired equal parts force equal halves, so the label survives
        assert zeta == eta
        label = o.label
    return WChar(family, zeta, eta, label)


def b_invariant(c: WChar) -> int:
    """Lowest symmetric-power degree containing the character.

    Families B and C weight the second half by its size; D uses the smaller
    half instead, which makes the value independent of the ordering.
    """
    if c.family == "A":
        return n_weight(c.zeta)
    base = 2 * n_weight(c.zeta) + 2 * n_weight(c.eta)
    if c.family == "D":
        return base + min(sum(c.zeta), sum(c.eta))
    return base + sum(c.eta)


@lru_cache(maxsize=None)
def _char_table(group: GroupType) -> dict[WChar, Orbit]:
    return {springer_char(o): o for o in list_orbits(group)}


def springer_char_inverse(group: GroupType, c: WChar) -> Orbit | None:
    """The orbit with the given Springer character, or None if there is none.

    An equal-half D character without a label is never produced by
    springer_char and so has no preimage here.
    """
    expected = group.partition_size if group.family == "A" else group.rank
    if c.family != group.family or c.rank != expected:
        return None
    return _char_table(group).get(c)


def is_springer_value(group: GroupType, c: WChar) -> bool:
    return springer_char_inverse(group, c) is not None
