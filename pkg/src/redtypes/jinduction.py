"""Truncated induction of characters from a product of two smaller groups.

A split point k of a rank n group names the pair of factors of rank k and
n - k.  On characters the induction acts half by half: realize both zeta
halves as strictly increasing sequences of one common length, add them
entrywise, and subtract the staircase; likewise for eta.  The result is the
unique constituent of the induced character with the smallest b-invariant,
and b is additive along it.

Split points at the ends of the affine diagram do not give a genuine product:
there the quotient is the full group again, so induction is the identity.  In
family C that means k in {0, n}; in family D the four values {0, 1, n-1, n}
all behave this way, and the interior splits start at k = 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orbits import GroupType, Orbit
from .partitions import from_incseq, to_incseq
from .springer import WChar, springer_char, springer_char_inverse


@dataclass(frozen=True)
class LeviIndex:
    family: str
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.family not in ("C", "D"):
            raise ValueError(f"splits are defined for families C and D, not {self.family!r}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"split {self.k} out of range for rank {self.n}")

    @property
    def hyperspecial(self) -> bool:
        if self.family == "C":
            return self.k in (0, self.n)
        return self.k in (0, 1, self.n - 1, self.n)

    @property
    def interior(self) -> bool:
        return not self.hyperspecial


def interior_splits(family: str, n: int) -> list[int]:
    """All split points that give a genuine two-factor quotient."""
    lo = 1 if family == "C" else 2
    return [k for k in range(lo, n - lo + 1) if LeviIndex(family, n, k).interior]


def _add_halves(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    length = max(len(a), len(b), 1)
    sa = to_incseq(a, length)
    sb = to_incseq(b, length)
    return from_incseq(tuple(x + y - i for i, (x, y) in enumerate(zip(sa, sb))))


def j_induce(levi: LeviIndex, left: WChar, right: WChar) -> WChar:
    """Induce left (rank k) tensor right (rank n - k) up to rank n.

    At a hyperspecial split the quotient is the whole group, so one factor
    must be the empty rank 0 character and the other comes back unchanged.
    A label on an equal-half input survives only when the output has equal
    halves too and no conflicting label arrives from the other factor.
    """
    if left.family != levi.family or right.family != levi.family:
        raise ValueError(
            f"family mismatch: {left.family}/{right.family} under {levi.family}"
        )
    if levi.hyperspecial:
        if left.rank == 0 and right.rank == levi.n:
            return right
        if right.rank == 0 and left.rank == levi.n:
            return left
        raise ValueError(
            f"split {levi.k} of {levi.family}{levi.n} is hyperspecial; "
            f"it has no rank ({left.rank},{right.rank}) factor pair"
        )
    if left.rank != levi.k or right.rank != levi.n - levi.k:
        raise ValueError(
            f"need ranks ({levi.k},{levi.n - levi.k}), got ({left.rank},{right.rank})"
        )
    zeta = _add_halves(left.zeta, right.zeta)
    eta = _add_halves(left.eta, right.eta)
    label = None
    if levi.family == "D" and zeta == eta:
        labels = {left.label, right.label} - {None}
        if len(labels) == 1:
            label = labels.pop()
    return WChar(levi.family, zeta, eta, label)


def ls_induce_orbit(levi: LeviIndex, o1: Orbit, o2: Orbit) -> Orbit | None:
    """Orbit induction through characters; None when the value is not Springer."""
    target = GroupType(levi.family, levi.n)
    return springer_char_inverse(
        target, j_induce(levi, springer_char(o1), springer_char(o2))
    )
