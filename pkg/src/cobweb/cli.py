"""Command-line front end.

Subcommands: ``seq`` (sequence values), ``fbinom`` (generalized binomial
triangle), ``grid`` (interval-poset quantities), ``pnf`` (layered-poset
quantities), ``verify`` (oracle cross-check suites), ``export`` (OEIS
b-file writer).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
Integers cross the output boundary as decimal strings at every magnitude.
The environment variable ``COBWEB_SCALE_LIMIT`` overrides the oracle's
top-index scale guard for ``verify``.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional

from . import oracle, verify
from .gridposet import grid_bell, grid_chain_count, grid_size, grid_whitney
from .pnfposet import POLICIES, pnf_bell, pnf_bell_sequence, pnf_whitney_vector
from .sequences import (
    SEQUENCE_NAMES,
    AdmissibilityError,
    NonIntegralError,
    f_binomial,
    make_sequence,
    seq_eval,
)

FORMATS = ("table", "csv", "json")


def _table(rows: list[list[str]], labels: Optional[list[str]] = None) -> str:
    if labels is not None:
        label_width = max(len(label) for label in labels)
        rows = [
            [labels[i].ljust(label_width)] + row for i, row in enumerate(rows)
        ]
    widths: dict[int, int] = {}
    for row in rows:
        for j, cell in enumerate(row):
            widths[j] = max(widths.get(j, 0), len(cell))
    lines = []
    for row in rows:
        padded = [cell.rjust(widths[j]) for j, cell in enumerate(row)]
        if labels is not None:
            padded[0] = row[0]  # keep labels left-justified
        lines.append(" ".join(padded).rstrip())
    return "\n".join(lines) + "\n"


def _emit(
    kind: str,
    params: dict[str, str],
    values,
    fmt: str,
    labels: Optional[list[str]] = None,
) -> None:
    """Render one output document; ``values`` is [str] or [[str]]."""
    nested = bool(values) and isinstance(values[0], list)
    if fmt == "json":
        doc = {"object": kind, "params": params, "values": values}
        sys.stdout.write(json.dumps(doc) + "\n")
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        for row in values if nested else [values]:
            writer.writerow(row)
    else:
        rows = [list(row) for row in values] if nested else [list(values)]
        sys.stdout.write(_table(rows, labels))


def _make_sequence(parser: argparse.ArgumentParser, name: str, q: Optional[int]):
    try:
        return make_sequence(name, q)
    except ValueError as exc:
        parser.error(str(exc))


def _seq_params(args) -> dict[str, str]:
    params = {"seq": args.seq}
    if args.q is not None:
        params["q"] = str(args.q)
    return params


def cmd_seq(args, parser) -> int:
    if args.count < 1:
        parser.error(f"--count must be >= 1, got {args.count}")
    seq = _make_sequence(parser, args.seq, args.q)
    values = [str(seq_eval(seq, i)) for i in range(1, args.count + 1)]
    _emit("seq", _seq_params(args) | {"count": str(args.count)}, values, args.format)
    return 0


def cmd_fbinom(args, parser) -> int:
    if args.rows < 0:
        parser.error(f"--rows must be >= 0, got {args.rows}")
    seq = _make_sequence(parser, args.seq, args.q)
    triangle = [
        [str(f_binomial(seq, n, k)) for k in range(n + 1)]
        for n in range(args.rows + 1)
    ]
    _emit(
        "fbinom", _seq_params(args) | {"rows": str(args.rows)}, triangle, args.format
    )
    return 0


def cmd_grid(args, parser) -> int:
    try:
        size = grid_size(args.k, args.n)
    except ValueError as exc:
        parser.error(str(exc))
    whitney = [str(w) for w in grid_whitney(args.k, args.n)]
    quantities = {
        "size": [str(size)],
        "whitney": whitney,
        "bell": [str(grid_bell(args.k, args.n))],
        "chains": [str(grid_chain_count(args.k, args.n))],
    }
    params = {"k": str(args.k), "n": str(args.n), "show": args.show}
    if args.show == "all":
        labels = list(quantities)
        _emit("grid", params, [quantities[name] for name in labels], args.format, labels)
    else:
        _emit("grid", params, quantities[args.show], args.format)
    return 0


def cmd_pnf(args, parser) -> int:
    if args.n < 1:
        parser.error(f"--n must be >= 1, got {args.n}")
    seq = _make_sequence(parser, args.seq, args.q)
    params = _seq_params(args) | {
        "n": str(args.n),
        "show": args.show,
        "degenerate": args.degenerate,
    }
    if args.show == "whitney":
        values = [str(w) for w in pnf_whitney_vector(args.n, seq, args.degenerate)]
    else:
        values = [str(pnf_bell(args.n, seq, args.degenerate))]
    _emit("pnf", params, values, args.format)
    return 0


def _scale_limit(parser) -> int:
    raw = os.environ.get("COBWEB_SCALE_LIMIT")
    if raw is None:
        return oracle.DEFAULT_MAX_INDEX
    try:
        return int(raw)
    except ValueError:
        parser.error(f"COBWEB_SCALE_LIMIT must be an integer, got {raw!r}")


def cmd_verify(args, parser) -> int:
    if args.max_n < 2:
        parser.error(f"--max-n must be >= 2, got {args.max_n}")
    limit = _scale_limit(parser)
    if args.max_n > limit:
        parser.error(
            f"--max-n {args.max_n} exceeds the scale guard {limit}; "
            f"set COBWEB_SCALE_LIMIT to go further"
        )
    tokens = args.seq.split(",") if args.seq else None
    try:
        suites = verify.run_verify(args.max_n, tokens)
    except ValueError as exc:
        parser.error(str(exc))
    cases = sum(suite.cases for suite in suites)
    failures = [failure for suite in suites for failure in suite.failures]
    params = {
        "max_n": str(args.max_n),
        "seqs": ",".join(tokens if tokens else verify.DEFAULT_VERIFY_SEQS),
    }
    if args.format == "table":
        for suite in suites:
            line = f"{suite.name}: {suite.cases} checks, {len(suite.failures)} failed"
            if suite.skipped:
                line += f", {suite.skipped} skipped (scale guard)"
            sys.stdout.write(line + "\n")
        for failure in failures:
            sys.stdout.write(
                f"FAIL {failure.identity} at {failure.inputs}: "
                f"expected {failure.expected}, got {failure.actual}\n"
            )
        sys.stdout.write(f"checks {cases}\nfailures {len(failures)}\n")
    else:
        _emit("verify", params, [str(cases), str(len(failures))], args.format)
    return 1 if failures else 0


def cmd_export(args, parser) -> int:
    if args.count < 1:
        parser.error(f"--count must be >= 1, got {args.count}")
    seq = _make_sequence(parser, args.seq, args.q)
    if args.what == "bell":
        values = pnf_bell_sequence(seq, args.count)
    else:  # fbinom-diagonal: central column of the triangle
        values = [f_binomial(seq, 2 * n, n) for n in range(1, args.count + 1)]
    lines = "".join(f"{i} {v}\n" for i, v in enumerate(values, start=1))
    try:
        with open(args.bfile, "w", encoding="ascii", newline="\n") as handle:
            handle.write(lines)
    except OSError as exc:
        sys.stderr.write(f"cannot write b-file {args.bfile!r}: {exc}\n")
        return 3
    return 0


def _add_seq_options(sub) -> None:
    sub.add_argument("--seq", required=True, choices=SEQUENCE_NAMES)
    sub.add_argument("--q", type=int, default=None, help="base for --seq gauss")


def _add_format_option(sub) -> None:
    sub.add_argument("--format", choices=FORMATS, default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cobweb",
        description="Exact layer combinatorics of cobweb posets.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

    sub = subparsers.add_parser("seq", help="print F_1..F_N for a shipped sequence")
    _add_seq_options(sub)
    sub.add_argument("--count", type=int, required=True)
    _add_format_option(sub)
    sub.set_defaults(handler=cmd_seq)

    sub = subparsers.add_parser("fbinom", help="print F-binomial triangle rows 0..R")
    _add_seq_options(sub)
    sub.add_argument("--rows", type=int, required=True)
    _add_format_option(sub)
    sub.set_defaults(handler=cmd_fbinom)

    sub = subparsers.add_parser("grid", help="interval-poset quantities for (k, n)")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument(
        "--show",
        choices=("size", "whitney", "bell", "chains", "all"),
        default="all",
    )
    _add_format_option(sub)
    sub.set_defaults(handler=cmd_grid)

    sub = subparsers.add_parser("pnf", help="layered-poset quantities for (n, F)")
    _add_seq_options(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--show", choices=("whitney", "bell"), default="bell")
    sub.add_argument("--degenerate", choices=POLICIES, default="include")
    _add_format_option(sub)
    sub.set_defaults(handler=cmd_pnf)

    sub = subparsers.add_parser(
        "verify", help="run every closed-form-vs-oracle suite up to a scale"
    )
    sub.add_argument("--max-n", type=int, required=True, dest="max_n")
    sub.add_argument(
        "--seq",
        default=None,
        help=f"comma-separated subset of {','.join(verify.VERIFY_SEQ_TOKENS)}",
    )
    _add_format_option(sub)
    sub.set_defaults(handler=cmd_verify)

    sub = subparsers.add_parser("export", help="write a sequence as an OEIS b-file")
    sub.add_argument("--what", choices=("bell", "fbinom-diagonal"), required=True)
    _add_seq_options(sub)
    sub.add_argument("--count", type=int, required=True)
    sub.add_argument("--bfile", required=True, help="output path")
    sub.set_defaults(handler=cmd_export)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except (AdmissibilityError, NonIntegralError) as exc:
        # the requested quantity does not exist for this sequence
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
