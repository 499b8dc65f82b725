"""Integer partitions and the strictly increasing sequences used by truncated induction.

A partition is stored as a tuple of weakly decreasing positive integers, so
``()`` is the empty partition and ``(4, 2)`` is a partition of 6.  Increasing
sequences arise by padding a partition with zeros to a chosen length, reversing
it, and adding the staircase ``0, 1, 2, ...``; two sequences of different
lengths describe the same partition when they differ by the shift
``s -> (0,) + (s + 1)``.
"""

from __future__ import annotations

from typing import Iterator

LEQ = "less-or-equal"
GEQ = "greater"
INCOMPARABLE = "incomparable"


def ensure_partition(p: tuple[int, ...]) -> None:
    """Raise ValueError unless p is weakly decreasing with positive parts."""
    for i, part in enumerate(p):
        if part <= 0:
            raise ValueError(f"partition parts must be positive, got {part} in {p}")
        if i > 0 and p[i - 1] < part:
            raise ValueError(f"partition parts must be weakly decreasing: {p}")


def is_partition(p: tuple[int, ...]) -> bool:
    try:
        ensure_partition(p)
    except ValueError:
        return False
    return True


def sort_parts(parts) -> tuple[int, ...]:
    """Sort a bag of non-negative integers into a partition, dropping zeros."""
    return tuple(sorted((x for x in parts if x != 0), reverse=True))


def size(p: tuple[int, ...]) -> int:
    return sum(p)


def conjugate(p: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose the Young diagram: column lengths become row lengths.

    The i-th part of the conjugate counts the parts of p that are >= i.
    """
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= i) for i in range(1, p[0] + 1))


def n_weight(p: tuple[int, ...]) -> int:
    """The weight sum (i - 1) * p_i over parts in decreasing order."""
    return sum(i * part for i, part in enumerate(p))


def dominance_leq(p: tuple[int, ...], q: tuple[int, ...]) -> str:
    """Compare two partitions of the same number in the dominance order.

    Returns one of the module constants LEQ, GEQ, or INCOMPARABLE.  Prefix
    sums of p never exceeding those of q means p is dominated by q.  Equal
    partitions report LEQ.
    """
    if size(p) != size(q):
        raise ValueError(f"dominance needs equal sizes, got {size(p)} and {size(q)}")
    below = above = True
    acc_p = acc_q = 0
    for i in range(max(len(p), len(q))):
        acc_p += p[i] if i < len(p) else 0
        acc_q += q[i] if i < len(q) else 0
        if acc_p > acc_q:
            below = False
        if acc_p < acc_q:
            above = False
    if below:
        return LEQ
    if above:
        return GEQ
    return INCOMPARABLE


def to_incseq(p: tuple[int, ...], length: int) -> tuple[int, ...]:
    """Realize a partition as a strictly increasing sequence of the given length.

    Pads with zeros to the requested length first, so length must be at least
    the number of parts.
    """
    if length < len(p):
        raise ValueError(f"length {length} is too short for {len(p)} parts")
    padded = [0] * (length - len(p)) + list(reversed(p))
    return tuple(x + i for i, x in enumerate(padded))


def from_incseq(s: tuple[int, ...]) -> tuple[int, ...]:
    """Invert to_incseq; the length of s is forgotten."""
    parts = []
    prev = -1
    for i, x in enumerate(s):
        if x <= prev:
            raise ValueError(f"sequence must be strictly increasing: {s}")
        prev = x
        parts.append(x - i)
    return sort_parts(parts)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield all partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        yield ()
        return
    for head in range(cap, 0, -1):
        for tail in partitions_of(n - head, head):
            yield (head,) + tail


# ---------------------------------------------------------------- text forms

def parse_partition(text: str) -> tuple[int, ...]:
    """Parse either comma form ``9,2,2,1,1,1`` or exponent form ``1^3 2^2 9^1``.

    Exponent factors may appear in any order and bare numbers count once, so
    ``2^2 1^5`` and ``11`` are both accepted.  The empty string is the empty
    partition.
    """
    text = text.strip()
    if not text:
        return ()
    if "^" in text or (" " in text and "," not in text):
        parts: list[int] = []
        for token in text.split():
            base, _, exp = token.partition("^")
            try:
                parts.extend([int(base)] * (int(exp) if exp else 1))
            except ValueError:
                raise ValueError(f"bad partition token {token!r} in {text!r}") from None
        result = sort_parts(parts)
    else:
        try:
            result = sort_parts(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"bad partition text {text!r}") from None
    ensure_partition(result)
    return result


def format_partition(p: tuple[int, ...]) -> str:
    return ",".join(str(part) for part in p)


def format_exponent(p: tuple[int, ...]) -> str:
    """Exponent form with parts increasing, e.g. ``1^3 2^2 9^1``."""
    factors = []
    for part in sorted(set(p)):
        factors.append(f"{part}^{p.count(part)}")
    return " ".join(factors)
