"""Minimal reduction types at a split point, and the checks built on them.

Fix an elliptic class with cycle lengths c_1 >= c_2 >= ... and a split point
k.  A candidate is a pair of orbits, one per factor, obtained by assigning
each cycle index a pair of parts (p_i, q_i); the left orbit collects the p
parts and the right orbit the q parts.

Two independent routes produce candidates.  The skeleton route enumerates
normalized lattice positions a_i with defects in {0, 1, 2}, derives
(p_i, q_i) from them, and keeps every configuration whose running surplus
sum of (p_i + q_i - 2 c_i) stays non-negative and returns to zero.  It
overshoots the true geometry, but among its entries only those of maximal
dimension sum can name reduction types.

The block grammar route instead fixes lambda_i = p_i + q_i by cutting the
index range into consecutive blocks:

  * a singleton at index i has lambda_i = 2 c_i and neither entry tied;
  * a run over s..e has lambda_s = 2 c_s + 1, lambda_e = 2 c_e - 1 and
    lambda_i = 2 c_i in between, and ties adjacent entries in an
    alternating pattern: one side is tied over (s, s+1), the other over
    (s+1, s+2), and so on down the run.  Which side ties first is the
    run's kind.

Tied entries are equal and carry the family's tying parity (odd for C,
even for D), untied entries the opposite parity; lambda and both part
sequences must be weakly decreasing along the indices, and each index must
come from an in-range lattice position.  The candidates at a split are the
grammar assignments that attain the skeleton's maximal dimension sum, so
the list may legitimately be empty.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .elliptic import EllipticClass, delta, elliptic_classes, rt_min, rtmin_char
from .jinduction import LeviIndex, interior_splits, j_induce
from .orbits import (
    GroupType,
    Orbit,
    is_very_even,
    list_orbits,
    partition_fits,
    springer_dim,
)
from .partitions import partitions_of, sort_parts
from .springer import WChar, springer_char

SINGLE, RUN_P, RUN_Q = "single", "run-p", "run-q"


@dataclass(frozen=True)
class Block:
    """One grammar block: singleton or run, with the index span it covers.

    Runs come in two mirror kinds named after the side tied over the run's
    first two indices; the ties then alternate sides down the run.
    """

    kind: str
    start: int
    stop: int  # inclusive


@dataclass(frozen=True)
class CandidatePair:
    left: Orbit
    right: Orbit
    provenance: str
    blocks: tuple[Block, ...] | None = None

    @property
    def dim_sum(self) -> int:
        return springer_dim(self.left) + springer_dim(self.right)


@dataclass(frozen=True)
class SkeletonConfig:
    """Lattice data behind one skeleton entry, one triple per cycle index."""

    cycles: tuple[int, ...]
    a: tuple[int, ...]
    defect_p: tuple[int, ...]
    defect_q: tuple[int, ...]

    def parts(self, family: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
        shift = 1 if family == "D" else 0
        p = tuple(
            -2 * a - shift + d for a, d in zip(self.a, self.defect_p)
        )
        q = tuple(
            2 * c - 2 + shift + 2 * a + d
            for c, a, d in zip(self.cycles, self.a, self.defect_q)
        )
        return p, q


def _interior_levi(cls: EllipticClass, k: int) -> LeviIndex:
    levi = LeviIndex(cls.family, cls.n, k)
    if not levi.interior:
        raise ValueError(
            f"split {k} of {cls.family}{cls.n} is hyperspecial; "
            "candidates there reduce to the minimal reduction type itself"
        )
    return levi


def _orbit_variants(group: GroupType, parts: tuple[int, ...]) -> list[Orbit]:
    """Wrap a sorted part multiset as orbits, once per very even label."""
    if is_very_even(group, parts):
        return [Orbit(group, parts, "I"), Orbit(group, parts, "II")]
    return [Orbit(group, parts)]


def _dim_of(group: GroupType, parts: tuple[int, ...]) -> int:
    """Fiber dimension of a valid part multiset; labels do not affect it."""
    return springer_dim(_orbit_variants(group, parts)[0])


def _emit_pairs(
    cls: EllipticClass,
    k: int,
    p_parts: tuple[int, ...],
    q_parts: tuple[int, ...],
    provenance: str,
    blocks: tuple[Block, ...] | None,
) -> Iterator[CandidatePair]:
    left_group = GroupType(cls.family, k)
    right_group = GroupType(cls.family, cls.n - k)
    if not (partition_fits(left_group, p_parts) and partition_fits(right_group, q_parts)):
        return
    for left in _orbit_variants(left_group, p_parts):
        for right in _orbit_variants(right_group, q_parts):
            yield CandidatePair(left, right, provenance, blocks)


# ---------------------------------------------------------------- the grammar

def _block_shapes(length: int) -> Iterator[tuple[Block, ...]]:
    """All cuts of 0..length-1 into singletons and runs of the two kinds."""
    if length == 0:
        yield ()
        return
    for size in range(1, length + 1):
        kinds = (SINGLE,) if size == 1 else (RUN_P, RUN_Q)
        for kind in kinds:
            head = Block(kind, 0, size - 1)
            for tail in _block_shapes(length - size):
                yield (head,) + tuple(
                    Block(b.kind, b.start + size, b.stop + size) for b in tail
                )


@lru_cache(maxsize=None)
def _slot_choices(
    family: str, c: int, lam: int, parity: int
) -> tuple[tuple[int, int, int], ...]:
    """Realizable (p, q, a) triples at one index.

    p + q = lam with p of the given parity, and both parts must arise from
    a lattice position a in the normalized range with defects in {0, 1, 2}.
    """
    shift = 1 if family == "D" else 0
    a_values = range(-1, -c, -1) if c > 1 else (0, -1)
    out = []
    for a in a_values:
        for p in range(parity, lam + 1, 2):
            q = lam - p
            if q < 0:
                break
            if 0 <= p + 2 * a + shift <= 2 and 0 <= q - 2 * c + 2 - shift - 2 * a <= 2:
                out.append((p, q, a))
    return tuple(out)


def _slot_grid(cycles: tuple[int, ...], blocks: tuple[Block, ...], family: str):
    """Per-index (lambda, p parity, tie flags) for one block decomposition.

    tie_p[i] means p_i must repeat p_{i-1}, likewise tie_q.  Returns None
    when the slotwise lambda fails to be weakly decreasing, which is what
    keeps separate blocks over equal cycles apart.
    """
    tied = 1 if family == "C" else 0
    lam: list[int] = []
    par_p: list[int] = []
    tie_p: list[bool] = []
    tie_q: list[bool] = []
    for block in blocks:
        m = block.stop - block.start
        if block.kind == SINGLE:
            lam.append(2 * cycles[block.start])
            par_p.append(1 - tied)
            tie_p.append(False)
            tie_q.append(False)
            continue
        for t in range(m + 1):
            c = cycles[block.start + t]
            lam.append(2 * c + 1 if t == 0 else 2 * c - 1 if t == m else 2 * c)
            # the leading side is tied over (0,1), (2,3), ..., the other
            # over (1,2), (3,4), ...; the run's last index may be left
            # untied on either side
            lead = (t % 2 == 1) or (t < m)
            trail = (t % 2 == 0 and t >= 2) or (t % 2 == 1 and t < m)
            p_tied = lead if block.kind == RUN_P else trail
            par_p.append(tied if p_tied else 1 - tied)
            if block.kind == RUN_P:
                tie_p.append(t % 2 == 1)
                tie_q.append(t % 2 == 0 and t >= 2)
            else:
                tie_p.append(t % 2 == 0 and t >= 2)
                tie_q.append(t % 2 == 1)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        return None
    return lam, par_p, tie_p, tie_q


def _assignments(
    cycles: tuple[int, ...],
    grid: tuple[list[int], list[int], list[bool], list[bool]],
    family: str,
    target_p: int,
    target_q: int,
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All per-index (p, q) fillings of a slot grid.

    Both part sequences stay weakly decreasing, tied entries repeat, the
    totals land on the targets, and the lattice positions behind the
    indices keep -a and c + a weakly decreasing.
    """
    lam, par_p, tie_p, tie_q = grid
    r = len(lam)

    def walk(i, prev_p, prev_q, prev_a, prev_c, sum_p, sum_q, acc_p, acc_q):
        if i == r:
            if sum_p == target_p and sum_q == target_q:
                yield tuple(acc_p), tuple(acc_q)
            return
        left = r - i
        if target_p - sum_p > prev_p * left or target_q - sum_q > prev_q * left:
            return
        for p, q, a in _slot_choices(family, cycles[i], lam[i], par_p[i]):
            if p > prev_p or q > prev_q:
                continue
            if sum_p + p > target_p or sum_q + q > target_q:
                continue
            if (tie_p[i] and p != acc_p[-1]) or (tie_q[i] and q != acc_q[-1]):
                continue
            if i and (-a > -prev_a or cycles[i] + a > prev_c + prev_a):
                continue
            yield from walk(
                i + 1, p, q, a, cycles[i],
                sum_p + p, sum_q + q, acc_p + [p], acc_q + [q],
            )

    yield from walk(0, 2 * (target_p + target_q), 2 * (target_p + target_q),
                    0, 0, 0, 0, [], [])


def block_candidates(cls: EllipticClass, k: int) -> list[CandidatePair]:
    """Grammar-generated pairs attaining the skeleton's maximal dimension sum.

    Reduction types at a split come from configurations of maximal fiber
    dimension sum, and the block grammar pins down the shape such maximal
    configurations can take.  The list may be empty: at some split points
    no grammar assignment reaches the skeleton's maximum, and then the
    split has nothing to say about the class.
    """
    _interior_levi(cls, k)
    cycles = tuple(sorted(cls.cycle_type, reverse=True))
    left_group = GroupType(cls.family, k)
    right_group = GroupType(cls.family, cls.n - k)
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    best = -1
    for _, _, _, p_acc, q_acc in _skeleton_walk(cls, k):
        key = (sort_parts(p_acc), sort_parts(q_acc))
        if key in seen:
            continue
        seen.add(key)
        if partition_fits(left_group, key[0]) and partition_fits(right_group, key[1]):
            best = max(best, _dim_of(left_group, key[0]) + _dim_of(right_group, key[1]))
    if best < 0:
        return []
    found: dict[tuple[Orbit, Orbit], CandidatePair] = {}
    for blocks in _block_shapes(len(cycles)):
        grid = _slot_grid(cycles, blocks, cls.family)
        if grid is None:
            continue
        for p_seq, q_seq in _assignments(
            cycles, grid, cls.family, 2 * k, 2 * (cls.n - k)
        ):
            p_parts = sort_parts(p_seq)
            q_parts = sort_parts(q_seq)
            for pair in _emit_pairs(cls, k, p_parts, q_parts, "block-grammar", blocks):
                found.setdefault((pair.left, pair.right), pair)
    return sorted(
        (pair for pair in found.values() if pair.dim_sum == best),
        key=lambda pair: (pair.left.partition, str(pair.left.label or ""),
                          pair.right.partition, str(pair.right.label or "")),
    )


# ------------------------------------------------------------- the skeleton

def _a_ranges(cycles: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Normalized lattice positions: interior for long cycles, 0 or -1 for
    length one, with -a and c + a both weakly decreasing."""

    def walk(i: int, acc: list[int]):
        if i == len(cycles):
            yield tuple(acc)
            return
        c = cycles[i]
        choices = range(-1, -c, -1) if c > 1 else (0, -1)
        for a in choices:
            if acc:
                if -a > -acc[-1]:
                    continue
                if cycles[i - 1] + acc[-1] < c + a:
                    continue
            yield from walk(i + 1, acc + [a])

    yield from walk(0, [])


def _skeleton_walk(
    cls: EllipticClass, k: int
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], list[int], list[int]]]:
    """Raw admissible configurations (a vector, defects, part sequences)."""
    cycles = tuple(sorted(cls.cycle_type, reverse=True))
    r = len(cycles)
    shift = 1 if cls.family == "D" else 0
    target_p, target_q = 2 * k, 2 * (cls.n - k)
    for a_vec in _a_ranges(cycles):
        base_p = [-2 * a - shift for a in a_vec]
        base_q = [2 * c - 2 + shift + 2 * a for c, a in zip(cycles, a_vec)]

        def walk(i: int, p_acc, q_acc, dp, dq, sum_p: int, sum_q: int, slack: int):
            if i == r:
                if sum_p == target_p and sum_q == target_q:
                    yield a_vec, tuple(dp), tuple(dq), p_acc, q_acc
                return
            for d1 in range(3):
                p = base_p[i] + d1
                if p < 0 or sum_p + p > target_p:
                    continue
                for d2 in range(3):
                    q = base_q[i] + d2
                    if q < 0 or sum_q + q > target_q:
                        continue
                    # prefix co-isotropy: running sum of (p+q) - 2c stays >= 0,
                    # and must come back to 0 with steps of size at most 2
                    new_slack = slack + p + q - 2 * cycles[i]
                    if not 0 <= new_slack <= 2 * (r - i - 1):
                        continue
                    yield from walk(
                        i + 1,
                        p_acc + [p],
                        q_acc + [q],
                        dp + [d1],
                        dq + [d2],
                        sum_p + p,
                        sum_q + q,
                        new_slack,
                    )

        yield from walk(0, [], [], [], [], 0, 0, 0)


def enumerate_skeleton(
    cls: EllipticClass, k: int
) -> list[tuple[SkeletonConfig, CandidatePair]]:
    """Every admissible lattice configuration with its candidate pair.

    Admissible means: normalized positions, defects in {0, 1, 2}, all parts
    non-negative with the correct totals, prefix part sums at least the
    prefix dimensions 2 c_1 + ... + 2 c_j, and both sides valid orbits.
    """
    _interior_levi(cls, k)
    cycles = tuple(sorted(cls.cycle_type, reverse=True))
    out = []
    for a_vec, dp, dq, p_acc, q_acc in _skeleton_walk(cls, k):
        config = SkeletonConfig(cycles, a_vec, dp, dq)
        p_parts = sort_parts(p_acc)
        q_parts = sort_parts(q_acc)
        for pair in _emit_pairs(cls, k, p_parts, q_parts, "skeleton-enumerator", None):
            out.append((config, pair))
    return out


# ------------------------------------------------------------- verification

@dataclass(frozen=True)
class CandidateResult:
    pair: CandidatePair
    j_value: WChar
    ok: bool


@dataclass(frozen=True)
class VerifyReport:
    cls: EllipticClass
    k: int
    delta: int
    rtmin_orbit: Orbit
    rtmin_char: WChar
    results: tuple[CandidateResult, ...]
    ok: bool

    def to_dict(self) -> dict:
        return {
            "family": self.cls.family,
            "n": self.cls.n,
            "class": ",".join(map(str, self.cls.cycle_type)),
            "k": self.k,
            "delta": self.delta,
            "rtmin_orbit": str(self.rtmin_orbit),
            "rtmin_char": str(self.rtmin_char),
            "candidates": [
                {
                    "left": str(res.pair.left),
                    "right": str(res.pair.right),
                    "d_left": springer_dim(res.pair.left),
                    "d_right": springer_dim(res.pair.right),
                    "j_value": str(res.j_value),
                    "pass": res.ok,
                }
                for res in self.results
            ],
            "pass": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_class(cls: EllipticClass, k: int) -> VerifyReport:
    """Check that every candidate at this split induces the expected character.

    A candidate passes when its induced character equals the closed-form
    character of the class and its dimension sum equals the class dimension.
    The report passes when every candidate does; with no candidates it
    passes vacuously.
    """
    levi = _interior_levi(cls, k)
    target = rtmin_char(cls)
    dim = delta(cls)
    results = []
    for pair in block_candidates(cls, k):
        value = j_induce(levi, springer_char(pair.left), springer_char(pair.right))
        good = value.unlabelled() == target.unlabelled() and pair.dim_sum == dim
        results.append(CandidateResult(pair, value, good))
    return VerifyReport(
        cls,
        k,
        dim,
        rt_min(cls),
        target,
        tuple(results),
        all(res.ok for res in results),
    )


def verify_family(family: str, max_n: int) -> Iterator[VerifyReport]:
    """Reports for every class and interior split up to the given rank."""
    for n in range(1, max_n + 1):
        for cls in elliptic_classes(family, n):
            for k in interior_splits(family, n):
                yield verify_class(cls, k)


# ------------------------------------------------ induced character inventory

def _split_pairs(family: str, n: int) -> Iterator[tuple[int, Orbit | None, Orbit]]:
    """The domain grouped by kl_fibers: one entry per split and orbit pair.

    Hyperspecial splits appear once, as k = 0 with an absent left orbit; the
    mirror splits k = n (and 1, n-1 for family D) would repeat them.
    """
    for orbit in list_orbits(GroupType(family, n)):
        yield 0, None, orbit
    for k in interior_splits(family, n):
        for left in list_orbits(GroupType(family, k)):
            for right in list_orbits(GroupType(family, n - k)):
                yield k, left, right


def stratum_label(
    family: str, n: int, k: int, left: Orbit | None, right: Orbit | None
) -> WChar:
    """The induced character labelling the stratum of a group element whose
    semisimple part splits the group at k and whose unipotent part has the
    given Jordan types."""
    levi = LeviIndex(family, n, k)
    if levi.hyperspecial:
        present = [o for o in (left, right) if o is not None]
        if len(present) != 1 or present[0].group != GroupType(family, n):
            raise ValueError(
                f"split {k} of {family}{n} is hyperspecial; "
                "pass the full-rank orbit on one side only"
            )
        return springer_char(present[0])
    if left is None or right is None:
        raise ValueError(f"interior split {k} needs an orbit on both sides")
    return j_induce(levi, springer_char(left), springer_char(right))


def two_special_set(family: str, n: int) -> set[WChar]:
    """All characters reachable by inducing a Springer character of a split."""
    return {
        stratum_label(family, n, k, left, right)
        for k, left, right in _split_pairs(family, n)
    }


def kl_fibers(
    family: str, n: int
) -> dict[WChar, list[tuple[int, Orbit | None, Orbit]]]:
    """Group the split/orbit domain by induced character.

    Two entries land in the same fiber exactly when their parahoric images
    under the reduction-type map agree, so the fibers partition the domain.
    """
    fibers: dict[WChar, list[tuple[int, Orbit | None, Orbit]]] = {}
    for k, left, right in _split_pairs(family, n):
        fibers.setdefault(stratum_label(family, n, k, left, right), []).append(
            (k, left, right)
        )
    return fibers


def count_irreducibles(family: str, n: int) -> int:
    """Number of irreducible characters of the rank n hyperoctahedral group."""
    if family not in ("B", "C"):
        raise ValueError(f"counting is defined for families B and C, not {family!r}")
    counts = [sum(1 for _ in partitions_of(m)) for m in range(n + 1)]
    return sum(counts[a] * counts[n - a] for a in range(n + 1))


def missing_irreducibles(family: str, n: int) -> list[WChar]:
    """Irreducible characters not reachable by induced Springer characters."""
    reachable = {c.unlabelled() for c in two_special_set(family, n)}
    out = []
    for a in range(n + 1):
        for zeta in partitions_of(a):
            for eta in partitions_of(n - a):
                c = WChar(family, zeta, eta)
                if c not in out and c.unlabelled() not in reachable:
                    out.append(c)
    return out
