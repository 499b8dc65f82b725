"""Command-line front end, one subcommand per library operation.

Exit codes follow the usual convention: 0 on success, 1 when a
verification ran and failed, 2 for usage or domain errors.  ``--json``
switches the verification and table subcommands to machine output; every
emitted document contains only integers, strings, and booleans, so parsing
and re-serializing with two-space indentation reproduces the bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .elliptic import EllipticClass, delta, rt_min, rtmin_char
from .jinduction import LeviIndex, interior_splits, j_induce
from .minimal import (
    kl_fibers,
    missing_irreducibles,
    stratum_label,
    two_special_set,
    verify_class,
    verify_family,
)
from .orbits import (
    GroupType,
    centralizer_dim,
    is_special,
    orbit_dim,
    parse_group,
    parse_orbit,
    springer_dim,
)
from .partitions import parse_partition, partitions_of
from .springer import (
    WChar,
    b_invariant,
    parse_wchar,
    springer_char,
    springer_char_inverse,
)
from .tables import check_tables


def _elliptic(family: str, text: str) -> EllipticClass:
    parts = parse_partition(text)
    return EllipticClass(family, sum(parts), parts)


def _factor_orbit(family: str, rank: int, text: str):
    # Reuse the orbit syntax so very even types can carry a +/- suffix.
    return parse_orbit(f"{family}{rank}:{text}")


def _cmd_orbit_info(args: argparse.Namespace) -> int:
    o = parse_orbit(args.orbit)
    c = springer_char(o)
    print(f"orbit: {o}")
    print(f"orbit dim: {orbit_dim(o)}")
    print(f"centralizer dim: {centralizer_dim(o)}")
    print(f"d: {springer_dim(o)}")
    print(f"special: {'yes' if is_special(o) else 'no'}")
    print(f"character: {c}")
    print(f"b: {b_invariant(c)}")
    return 0


def _cmd_springer(args: argparse.Namespace) -> int:
    if not args.inverse:
        print(springer_char(parse_orbit(args.value)))
        return 0
    head, sep, tail = args.value.partition(":")
    if not sep:
        raise ValueError(
            f"bad inverse query {args.value!r}, expected '<group>:<character>'"
        )
    c = parse_wchar(head[:1], tail)
    group = parse_group(head) if head[1:] else _group_of(head[:1], c)
    o = springer_char_inverse(group, c)
    if o is None:
        print(f"{c} is not a Springer value for {group}")
        return 1
    print(o)
    return 0


def _group_of(family: str, c: WChar) -> GroupType:
    rank = c.rank - 1 if family == "A" else c.rank
    return GroupType(family, rank)


def _cmd_jinduce(args: argparse.Namespace) -> int:
    levi = LeviIndex(args.family, args.n, args.k)
    left = _factor_orbit(args.family, args.k, args.left)
    right = _factor_orbit(args.family, args.n - args.k, args.right)
    print(j_induce(levi, springer_char(left), springer_char(right)))
    return 0


def _cmd_rtmin(args: argparse.Namespace) -> int:
    cls = _elliptic(args.family, args.cls)
    print(f"class: {cls}")
    print(f"rt_min: {rt_min(cls)}")
    print(f"delta: {delta(cls)}")
    print(f"character: {rtmin_char(cls)}")
    return 0


def _verify_line(report) -> str:
    word = "ok  " if report.ok else "FAIL"
    cycle = ",".join(map(str, report.cls.cycle_type))
    return (
        f"{word} {report.cls.family}{report.cls.n} class ({cycle}) k {report.k}: "
        f"delta {report.delta}, {len(report.results)} candidates"
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.cls is not None:
        cls = _elliptic(args.family, args.cls)
        splits = [args.k] if args.k is not None else interior_splits(args.family, cls.n)
        reports = [verify_class(cls, k) for k in splits]
    else:
        if args.max_n is None:
            raise ValueError("need --max-n or --class")
        reports = list(verify_family(args.family, args.max_n))
        if args.k is not None:
            reports = [r for r in reports if r.k == args.k]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for report in reports:
            print(_verify_line(report))
        good = sum(1 for r in reports if r.ok)
        print(f"{good}/{len(reports)} split checks passed")
    return 0 if all(r.ok for r in reports) else 1


def _cmd_two_special(args: argparse.Namespace) -> int:
    chars = two_special_set(args.family, args.n)
    total = len(
        {
            WChar(args.family, zeta, eta)
            for a in range(args.n + 1)
            for zeta in partitions_of(a)
            for eta in partitions_of(args.n - a)
        }
    )
    print(f"{len({c.unlabelled() for c in chars})} of {total}")
    missing = missing_irreducibles(args.family, args.n)
    if missing:
        print("missing: " + ", ".join(str(c) for c in missing))
    else:
        print("missing: none")
    if args.list:
        for c in sorted(chars, key=str):
            print(f"  {c}")
    return 0


def _cmd_kl_fibers(args: argparse.Namespace) -> int:
    fibers = kl_fibers(args.family, args.n)
    ordered = sorted(fibers.items(), key=lambda item: str(item[0]))
    if args.json:
        payload = {
            str(char): [
                {
                    "k": k,
                    "left": None if left is None else str(left),
                    "right": str(right),
                }
                for k, left, right in entries
            ]
            for char, entries in ordered
        }
        print(json.dumps(payload, indent=2))
        return 0
    for char, entries in ordered:
        print(char)
        for k, left, right in entries:
            if left is None:
                print(f"  k {k}: {right}")
            else:
                print(f"  k {k}: {left} | {right}")
    total = sum(len(entries) for _, entries in ordered)
    print(f"{len(fibers)} fibers over {total} strata")
    return 0


def _cmd_stratum(args: argparse.Namespace) -> int:
    left = right = None
    if args.left is not None:
        left = _factor_orbit(args.family, args.k, args.left)
    if args.right is not None:
        right = _factor_orbit(args.family, args.n - args.k, args.right)
    print(stratum_label(args.family, args.n, args.k, left, right))
    return 0


def _cmd_tables_check(args: argparse.Namespace) -> int:
    report = check_tables()
    if args.json:
        print(report.to_json())
        return 0 if report.ok else 1
    seen: list[tuple[int, str]] = []
    for cell in report.mismatches:
        if (cell.table, cell.row) not in seen:
            seen.append((cell.table, cell.row))
    for table, row in seen:
        cells = [c for c in report.mismatches if (c.table, c.row) == (table, row)]
        expected = all(c.expected_mismatch for c in cells)
        word = "expected mismatch" if expected else "MISMATCH"
        detail = "; ".join(
            f"{c.column} printed {c.printed}, recomputed {c.recomputed}" for c in cells
        )
        print(f"{word}: table {table}, {row}: {detail}")
    for cell in report.surprises:
        if cell.match:
            print(f"STALE: table {cell.table}, {cell.row}: {cell.column} matches")
    expected_count = sum(1 for c in report.mismatches if c.expected_mismatch)
    print(
        f"{len(report.cells)} cells checked, "
        f"{len(report.mismatches)} mismatches ({expected_count} expected)"
    )
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redtypes",
        description="Exact combinatorics of nilpotent orbits and minimal reduction types.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    orbit = sub.add_parser("orbit", help="inspect a nilpotent orbit")
    orbit_sub = orbit.add_subparsers(dest="action", required=True)
    info = orbit_sub.add_parser("info", help="dimensions, specialness, character")
    info.add_argument("orbit", help="orbit such as C3:4,2 or D8:4,4,4,4+")
    info.set_defaults(func=_cmd_orbit_info)

    springer = sub.add_parser("springer", help="Springer character of an orbit")
    springer.add_argument(
        "--inverse",
        action="store_true",
        help="map a character back to its orbit; argument like C3:((2,1),())",
    )
    springer.add_argument("value", help="orbit, or group:character with --inverse")
    springer.set_defaults(func=_cmd_springer)

    jinduce = sub.add_parser("jinduce", help="truncated induction of a character pair")
    jinduce.add_argument("--family", required=True)
    jinduce.add_argument("--n", type=int, required=True)
    jinduce.add_argument("--k", type=int, required=True)
    jinduce.add_argument("--left", required=True, help="orbit partition of the rank k factor")
    jinduce.add_argument("--right", required=True, help="orbit partition of the rank n-k factor")
    jinduce.set_defaults(func=_cmd_jinduce)

    rtmin = sub.add_parser("rtmin", help="minimal reduction type of an elliptic class")
    rtmin.add_argument("--family", required=True)
    rtmin.add_argument("--class", dest="cls", required=True, help="cycle type, e.g. 2,1")
    rtmin.set_defaults(func=_cmd_rtmin)

    verify = sub.add_parser("verify", help="check candidates against the minimal type")
    verify.add_argument("--family", required=True)
    verify.add_argument("--max-n", type=int, help="sweep every class up to this rank")
    verify.add_argument("--k", type=int, help="restrict to one split point")
    verify.add_argument("--class", dest="cls", help="restrict to one cycle type")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    two_special = sub.add_parser("two-special", help="induced-character inventory")
    two_special.add_argument("--family", required=True)
    two_special.add_argument("--n", type=int, required=True)
    two_special.add_argument("--list", action="store_true", help="list the reachable characters")
    two_special.set_defaults(func=_cmd_two_special)

    fibers = sub.add_parser("kl-fibers", help="group strata by induced character")
    fibers.add_argument("--family", required=True)
    fibers.add_argument("--n", type=int, required=True)
    fibers.add_argument("--json", action="store_true")
    fibers.set_defaults(func=_cmd_kl_fibers)

    stratum = sub.add_parser("stratum", help="label the stratum of a split orbit pair")
    stratum.add_argument("--family", required=True)
    stratum.add_argument("--n", type=int, required=True)
    stratum.add_argument("--k", type=int, required=True)
    stratum.add_argument("--left", help="orbit partition of the rank k factor")
    stratum.add_argument("--right", help="orbit partition of the rank n-k factor")
    stratum.set_defaults(func=_cmd_stratum)

    tables = sub.add_parser("tables", help="bundled table data")
    tables_sub = tables.add_subparsers(dest="action", required=True)
    check = tables_sub.add_parser("check", help="recompute the classical-factor cells")
    check.add_argument("--json", action="store_true")
    check.set_defaults(func=_cmd_tables_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
