"""Elliptic conjugacy classes and their minimal reduction types.

An elliptic class in the rank n hyperoctahedral setting is a partition of n
listing the lengths of the totally negative cycles.  In family D only an
even number of cycles gives an honest group element, so classes there have
an even number of parts.

Each class carries a distinguished nilpotent orbit, its minimal reduction
type: doubled cycle lengths in family C, and doubled lengths corrected by
a sign pattern in family D.  The generic fiber dimension of the class is
the Springer fiber dimension of that orbit, and the character attached to
it has a closed description evaluated here without going through the
orbit recipe (the two routes are compared in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass

from .orbits import GroupType, Orbit, springer_dim
from .partitions import (
    ensure_partition,
    format_partition,
    from_incseq,
    parse_partition,
    partitions_of,
    sort_parts,
)
from .springer import WChar


@dataclass(frozen=True)
class EllipticClass:
    family: str
    n: int
    cycle_type: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.family not in ("C", "D"):
            raise ValueError(f"elliptic classes live in families C and D, not {self.family!r}")
        ensure_partition(self.cycle_type)
        if sum(self.cycle_type) != self.n:
            raise ValueError(
                f"cycle type {self.cycle_type} does not sum to rank {self.n}"
            )
        if self.family == "D" and len(self.cycle_type) % 2 != 0:
            raise ValueError(
                f"family D needs an even number of cycles, got {self.cycle_type}"
            )

    def __str__(self) -> str:
        return f"{self.family}{self.n}:[w]={format_partition(self.cycle_type)}"


def parse_class(text: str) -> EllipticClass:
    """Parse the textual form ``C6:[w]=4,2``."""
    head, sep, tail = text.strip().partition(":[w]=")
    if not sep or len(head) < 2 or not head[1:].isdigit():
        raise ValueError(f"bad class {text!r}, expected e.g. 'C6:[w]=4,2'")
    return EllipticClass(head[0], int(head[1:]), parse_partition(tail))


def elliptic_classes(family: str, n: int) -> list[EllipticClass]:
    """All elliptic classes of the rank n group, largest cycle first."""
    out = []
    for p in partitions_of(n):
        if family == "D" and len(p) % 2 != 0:
            continue
        out.append(EllipticClass(family, n, p))
    return out


def rt_min(cls: EllipticClass) -> Orbit:
    """The minimal reduction type of the class."""
    cycles = cls.cycle_type
    if cls.family == "C":
        parts = tuple(2 * c for c in cycles)
        return Orbit(GroupType("C", cls.n), parts)
    r = len(cycles)
    parts = []
    for i in range(1, r + 1):
        c = cycles[i - 1]
        prev = cycles[i - 2] if i >= 2 else None
        nxt = cycles[i] if i < r else 0
        if i % 2 == 1 and (prev is None or c < prev):
            parts.append(2 * c + 1)
        elif i % 2 == 0 and c > nxt:
            parts.append(2 * c - 1)
        else:
            parts.append(2 * c)
    return Orbit(GroupType("D", cls.n), sort_parts(parts))


def delta(cls: EllipticClass) -> int:
    """Generic fiber dimension of the class."""
    return springer_dim(rt_min(cls))


def rtmin_char(cls: EllipticClass) -> WChar:
    """Character attached to the minimal reduction type, by direct formula.

    Both families sort the cycle lengths increasingly and hand out one
    staircased entry per index; which half receives it depends on parity of
    the index and on comparisons with the neighbours.  The family C form
    first pads with a zero cycle to reach an even count.
    """
    cycles = sorted(cls.cycle_type)
    if cls.family == "C":
        if len(cycles) % 2 == 1:
            cycles = [0] + cycles
        zeta_seq = tuple(cycles[2 * i + 1] + i for i in range(len(cycles) // 2))
        eta_seq = tuple(cycles[2 * i] + i for i in range(len(cycles) // 2))
        return WChar("C", from_incseq(zeta_seq), from_incseq(eta_seq))
    zeta_seq, eta_seq = [], []
    r = len(cycles)
    for i in range(1, r + 1):
        c = cycles[i - 1]
        if i % 2 == 1:
            # against the previous cycle, with a virtual 0 in front
            to_zeta = c > (cycles[i - 2] if i >= 2 else 0)
        else:
            # against the next cycle, with a virtual infinity at the top
            to_zeta = i < r and c == cycles[i]
        if to_zeta:
            zeta_seq.append(c - 1 + i // 2)
        else:
            eta_seq.append(c + i // 2)
    return WChar("D", from_incseq(tuple(zeta_seq)), from_incseq(tuple(eta_seq)))
