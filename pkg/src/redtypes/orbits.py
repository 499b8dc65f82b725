"""Nilpotent orbits of the classical groups as Jordan-type partitions.

Families are named by their Dynkin letter: A is the general linear case,
B and D the odd and even orthogonal groups, C the symplectic group.  An
orbit is a partition of the natural matrix size with a parity restriction
on multiplicities, except that in type D a partition with all parts even
corresponds to two orbits, told apart by a label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partitions import (
    INCOMPARABLE,
    LEQ,
    conjugate,
    dominance_leq,
    ensure_partition,
    format_partition,
    n_weight,
    parse_partition,
    partitions_of,
)

FAMILIES = ("A", "B", "C", "D")

VERY_EVEN_LABELS = ("I", "II")
_LABEL_SUFFIX = {"I": "+", "II": "-"}
_SUFFIX_LABEL = {"+": "I", "-": "II"}


@dataclass(frozen=True)
class GroupType:
    """A classical family letter together with its rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")

    @property
    def partition_size(self) -> int:
        """Size of the Jordan-type partitions: n+1, 2n+1, 2n, 2n."""
        if self.family == "A":
            return self.rank + 1
        if self.family == "B":
            return 2 * self.rank + 1
        return 2 * self.rank

    @property
    def dim(self) -> int:
        n = self.rank
        if self.family == "A":
            return (n + 1) ** 2
        if self.family in ("B", "C"):
            return n * (2 * n + 1)
        return n * (2 * n - 1)

    @property
    def cartan_rank(self) -> int:
        """Rank of the group itself (n+1 for the general linear family)."""
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def positive_roots(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family in ("B", "C"):
            return n * n
        return n * n - n

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_group(text: str) -> GroupType:
    text = text.strip()
    if len(text) < 2 or text[0] not in FAMILIES or not text[1:].isdigit():
        raise ValueError(f"bad group {text!r}, expected e.g. 'C3' or 'D8'")
    return GroupType(text[0], int(text[1:]))


def is_very_even(group: GroupType, partition: tuple[int, ...]) -> bool:
    """True for the type D partitions that split into a labelled pair."""
    return (
        group.family == "D"
        and len(partition) > 0
        and all(part % 2 == 0 for part in partition)
    )


def partition_fits(group: GroupType, partition: tuple[int, ...]) -> bool:
    """Check the multiplicity parity rule, ignoring size and labels."""
    if group.family == "A":
        return True
    check = 0 if group.family in ("B", "D") else 1
    for part in set(partition):
        if part % 2 == check and partition.count(part) % 2 != 0:
            return False
    return True


@dataclass(frozen=True)
class Orbit:
    group: GroupType
    partition: tuple[int, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        ensure_partition(self.partition)
        if sum(self.partition) != self.group.partition_size:
            raise ValueError(
                f"partition {self.partition} has size {sum(self.partition)}, "
                f"need {self.group.partition_size} for {self.group}"
            )
        if not partition_fits(self.group, self.partition):
            raise ValueError(
                f"{self.partition} violates the multiplicity rule for {self.group}"
            )
        if is_very_even(self.group, self.partition):
            if self.label not in VERY_EVEN_LABELS:
                raise ValueError(
                    f"very even orbit {self.partition} of {self.group} needs a label I or II"
                )
        elif self.label is not None:
            raise ValueError(f"orbit {self.partition} of {self.group} takes no label")

    def __str__(self) -> str:
        suffix = _LABEL_SUFFIX.get(self.label, "") if self.label else ""
        return f"{self.group}:{format_partition(self.partition)}{suffix}"


def validate_orbit(
    group: GroupType, partition: tuple[int, ...], label: str | None = None
) -> Orbit:
    """Build an orbit, rejecting bad sizes, parities, and label misuse."""
    return Orbit(group, tuple(partition), label)


def parse_orbit(text: str) -> Orbit:
    """Parse the textual form ``D8:4,4,4,4+`` or ``C3:4,2``."""
    head, sep, tail = text.strip().partition(":")
    if not sep:
        raise ValueError(f"bad orbit {text!r}, expected '<group>:<partition>'")
    label = None
    if tail and tail[-1] in _SUFFIX_LABEL:
        label = _SUFFIX_LABEL[tail[-1]]
        tail = tail[:-1]
    return validate_orbit(parse_group(head), parse_partition(tail), label)


format_orbit = str


def list_orbits(group: GroupType) -> list[Orbit]:
    """All orbits of a group, largest first.

    The order is decreasing lexicographic on partitions, which refines the
    dominance (closure) order; a very even partition contributes the label I
    orbit immediately followed by label II.
    """
    out: list[Orbit] = []
    for p in partitions_of(group.partition_size):
        if not partition_fits(group, p):
            continue
        if is_very_even(group, p):
            out.append(Orbit(group, p, "I"))
            out.append(Orbit(group, p, "II"))
        else:
            out.append(Orbit(group, p))
    return out


def centralizer_dim(o: Orbit) -> int:
    """Dimension of the centralizer of an orbit representative.

    This is the independent route to the fiber dimension: each family has a
    closed formula in the conjugate partition and the count of odd parts.
    """
    star = conjugate(o.partition)
    square_sum = sum(c * c for c in star)
    odd = sum(1 for part in o.partition if part % 2 == 1)
    if o.group.family == "A":
        return square_sum
    if o.group.family == "C":
        total = square_sum + odd
    else:
        total = square_sum - odd
    assert total % 2 == 0
    return total // 2


def orbit_dim(o: Orbit) -> int:
    return o.group.dim - centralizer_dim(o)


def springer_dim(o: Orbit) -> int:
    """Dimension of the Springer fiber over a point of the orbit.

    Types C and D use the quarter-sum formulas in the conjugate partition;
    type A is the weight n(lambda); type B goes through the centralizer,
    since the nilpotent cone has dimension 2n^2 there.
    """
    family = o.group.family
    if family == "A":
        return n_weight(o.partition)
    if family == "B":
        nilcone = o.group.dim - o.group.cartan_rank
        diff = nilcone - orbit_dim(o)
        assert diff % 2 == 0
        return diff // 2
    star = list(conjugate(o.partition))
    if len(star) % 2 == 1:
        star.append(0)
    total = 0
    for i in range(0, len(star), 2):
        a, b = star[i], star[i + 1]
        if family == "C":
            total += a * a + b * (b - 2)
        else:
            total += a * (a - 2) + b * b
    assert total % 4 == 0
    return total // 4


def is_special(o: Orbit) -> bool:
    """Whether the orbit is special in Lusztig's sense.

    The combinatorial criterion acts on the conjugate partition: type B needs
    its even parts in even multiplicity, types C and D need its odd parts in
    even multiplicity, and in type A every orbit is special.
    """
    if o.group.family == "A":
        return True
    star = conjugate(o.partition)
    check = 0 if o.group.family == "B" else 1
    for part in set(star):
        if part % 2 == check and star.count(part) % 2 != 0:
            return False
    return True


def closure_leq(o1: Orbit, o2: Orbit) -> str:
    """Closure order, realized by dominance plus the very even label rule."""
    if o1.group != o2.group:
        raise ValueError(f"cannot compare orbits of {o1.group} and {o2.group}")
    if o1.partition == o2.partition:
        return LEQ if o1.label == o2.label else INCOMPARABLE
    return dominance_leq(o1.partition, o2.partition)


def iter_groups(family: str, max_rank: int) -> Iterator[GroupType]:
    for rank in range(1, max_rank + 1):
        yield GroupType(family, rank)
