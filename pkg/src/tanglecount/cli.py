"""Command-line front end: count tables, cycle-index expansions, unlabeled
generating functions, and the oracle-vs-series verification report.

Exit codes: 0 success, 1 internal mismatch (verification failure),
2 usage or guard error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle, species
from .cycle_index import DegreeOutOfRange
from .oracle import SizeLimitExceeded
from .partitions import partitions_of
from .species import (
    ROOTED_ORDERED,
    ROOTED_UNORDERED,
    UNROOTED_ORDERED,
    UNROOTED_UNORDERED,
    TanglegramFamily,
    binary_tree_cycle_index,
    unrooted_tree_cycle_index,
)

_FAMILY_NAMES = (
    "rooted-ordered",
    "rooted-unordered",
    "unrooted-ordered",
    "unrooted-unordered",
    "chain",
    "chain-unordered",
)


def _resolve_families(names: list[str], k: int) -> list[TanglegramFamily]:
    families = []
    for name in names:
        if name in ("chain", "chain-unordered"):
            families.append(TanglegramFamily(name, k))
        else:
            families.append(TanglegramFamily(name))
    # drop duplicates, keep command-line order
    seen: set[TanglegramFamily] = set()
    unique = []
    for fam in families:
        if fam not in seen:
            seen.add(fam)
            unique.append(fam)
    return unique


# -- output rendering -----------------------------------------------------

Rows = list[tuple[str, int, int]]  # (family label, n, count)


def _render_table(rows: Rows) -> str:
    lines = ["family\tn\tcount"]
    lines.extend(f"{fam}\t{n}\t{value}" for fam, n, value in rows)
    return "\n".join(lines) + "\n"


def _render_csv(rows: Rows) -> str:
    lines = ["family,n,count"]
    lines.extend(f"{fam},{n},{value}" for fam, n, value in rows)
    return "\n".join(lines) + "\n"


def _group(rows: Rows) -> list[tuple[str, list[tuple[int, int]]]]:
    grouped: list[tuple[str, list[tuple[int, int]]]] = []
    for fam, n, value in rows:
        if not grouped or grouped[-1][0] != fam:
            grouped.append((fam, []))
        grouped[-1][1].append((n, value))
    return grouped


def _render_json(rows: Rows) -> str:
    objects = [
        {"family": fam, "counts": [{"n": n, "value": str(v)} for n, v in pairs]}
        for fam, pairs in _group(rows)
    ]
    payload = objects[0] if len(objects) == 1 else objects
    return json.dumps(payload, indent=2) + "\n"


def _render_bfile(rows: Rows) -> str:
    lines = []
    for fam, pairs in _group(rows):
        lines.append(f"# {fam}")
        lines.extend(f"{n} {v}" for n, v in pairs)
    return "\n".join(lines) + "\n"


_RENDERERS = {
    "table": _render_table,
    "csv": _render_csv,
    "json": _render_json,
    "bfile": _render_bfile,
}


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as handle:
            handle.write(text)


# -- subcommands ----------------------------------------------------------


def cmd_counts(args: argparse.Namespace) -> int:
    families = _resolve_families(args.family, args.k)
    max_n = args.max_n
    for fam in families:
        if max_n < fam.min_n:
            raise _UsageError(f"{fam.label} requires --max-n >= {fam.min_n}")
    rows: Rows = []
    for fam in families:
        for n in range(fam.min_n, max_n + 1):
            rows.append((fam.label, n, species.count(fam, n, max_n)))
    _emit(_RENDERERS[args.format](rows), args.output)
    return 0


def cmd_zindex(args: argparse.Namespace) -> int:
    if args.which == "R":
        series = binary_tree_cycle_index(args.max_degree)
    else:
        if args.max_degree < 2:
            raise _UsageError("zindex U requires --max-degree >= 2")
        series = unrooted_tree_cycle_index(args.max_degree)
    _emit(series.render() + "\n", args.output)
    return 0


def cmd_gf(args: argparse.Namespace) -> int:
    if args.which == "R":
        series = binary_tree_cycle_index(args.max_n)
        start, label = 1, "R-unlabeled"
    else:
        if args.max_n < 2:
            raise _UsageError("gf U requires --max-n >= 2")
        series = unrooted_tree_cycle_index(args.max_n)
        start, label = 2, "U-unlabeled"
    gf = series.unlabeled_gf()
    rows: Rows = []
    for n in range(start, args.max_n + 1):
        value = gf[n]
        if value.denominator != 1:
            raise ArithmeticError(f"non-integer GF coefficient {value} at {n}")
        rows.append((label, n, int(value)))
    _emit(_RENDERERS[args.format](rows), args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    max_n = args.max_n
    if max_n < 1:
        raise _UsageError("--max-n must be >= 1")
    if max_n > oracle.DEFAULT_BURNSIDE_LIMIT:
        raise _UsageError(
            f"--max-n {max_n} exceeds the brute-force guard "
            f"{oracle.DEFAULT_BURNSIDE_LIMIT}; the oracle is desk-scale only"
        )

    failures = 0

    def report(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        if ok:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name}{': ' + detail if detail else ''}")

    # enumeration sizes against the double-factorial counts
    ok = all(
        len(oracle.enumerate_rooted(n)) == species.labeled_counts(n)[0]
        for n in range(1, max_n + 1)
    )
    report("rooted-enumeration-count", ok)
    if max_n >= 2:
        ok = True
        for n in range(2, max_n + 1):
            expected = 1
            for j in range(3, n + 1):
                expected *= 2 * j - 5
            ok = ok and len(oracle.enumerate_unrooted(n)) == expected
        report("unrooted-enumeration-count", ok)

    # fixed points of every cycle type against the series coefficients
    zr = binary_tree_cycle_index(max_n)
    ok = True
    first_bad = ""
    for n in range(1, max_n + 1):
        trees = oracle.enumerate_rooted(n)
        for lam in partitions_of(n):
            sigma = oracle.permutation_of_type(lam, n)
            if oracle.fix_count(trees, sigma) != species.r_coefficient(lam, zr):
                ok = False
                first_bad = f"cycle type {lam}"
                break
    report("fix-count-vs-cycle-index", ok, first_bad)

    # closed form against the fixed-point solver
    ok = all(
        species.r_closed_form(lam) == species.r_coefficient(lam, zr)
        for n in range(0, max_n + 1)
        for lam in partitions_of(n)
    )
    report("closed-form-vs-solver", ok)

    # Burnside orbit counts against the symbolic counts, per family
    families = [
        ROOTED_ORDERED,
        ROOTED_UNORDERED,
        species.chain(3),
        species.chain_unordered(3),
        UNROOTED_ORDERED,
        UNROOTED_UNORDERED,
    ]
    for fam in families:
        ok = True
        first_bad = ""
        for n in range(fam.min_n, max_n + 1):
            got = oracle.burnside_count(fam, n)
            want = species.count(fam, n, max_n)
            if got != want:
                ok = False
                first_bad = f"n={n}: oracle {got} vs series {want}"
                break
        report(f"burnside-vs-series[{fam.label}]", ok, first_bad)

    # functional equation against the unlabeled GF of the series
    gf = zr.unlabeled_gf()
    wet = species.wedderburn_etherington(max_n)
    report(
        "wedderburn-etherington-consistency",
        all(gf[n] == wet[n] for n in range(0, max_n + 1)),
    )

    return 1 if failures else 0


# -- argument parsing -------------------------------------------------------


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanglecount",
        description="Count unlabeled tanglegrams, tangled chains, and binary "
        "tree shapes exactly, via cycle-index series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_counts = sub.add_parser("counts", help="tables of counts per family")
    p_counts.add_argument(
        "--family",
        action="append",
        required=True,
        choices=_FAMILY_NAMES,
        help="family to count (repeatable)",
    )
    p_counts.add_argument("--k", type=int, default=2, help="chain length (default 2)")
    p_counts.add_argument("--max-n", type=int, required=True, help="largest leaf count")
    p_counts.add_argument(
        "--format", default="table", choices=sorted(_RENDERERS), help="output format"
    )
    p_counts.add_argument("--output", default=None, help="write to file instead of stdout")
    p_counts.set_defaults(func=cmd_counts)

    p_zindex = sub.add_parser("zindex", help="print a cycle-index expansion")
    p_zindex.add_argument("which", choices=("R", "U"), help="rooted or unrooted trees")
    p_zindex.add_argument("--max-degree", type=int, required=True)
    p_zindex.add_argument("--output", default=None)
    p_zindex.set_defaults(func=cmd_zindex)

    p_gf = sub.add_parser("gf", help="print unlabeled tree generating functions")
    p_gf.add_argument("which", choices=("R", "U"))
    p_gf.add_argument("--max-n", type=int, required=True)
    p_gf.add_argument("--format", default="table", choices=sorted(_RENDERERS))
    p_gf.add_argument("--output", default=None)
    p_gf.set_defaults(func=cmd_gf)

    p_verify = sub.add_parser(
        "verify", help="cross-check the series against the brute-force oracle"
    )
    p_verify.add_argument("--max-n", type=int, default=5)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SizeLimitExceeded, DegreeOutOfRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
