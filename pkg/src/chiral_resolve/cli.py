"""Command-line harness.

Exit codes: 0 when every executed check passes, 1 when some check fails,
2 for usage errors and 3 for internal failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import traceback
from typing import Sequence

from . import checks, homology, symplectic
from .characters import SPACES, closed_form, compare
from .fock import as_sector
from .report import VerificationReport
from .suites import SUITES, Options, all_tasks, default_jobs, run_tasks, space_dims

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _nonneg(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(s: str) -> int:
    v = _nonneg(s)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cutoff", type=_nonneg, default=10, help="maximal energy (default 10)")
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--report", metavar="PATH", help="write JSON-lines reports to PATH")
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")
    common.add_argument("--jobs", type=_positive, default=None,
                        help="worker processes (default: CHIRAL_RESOLVE_JOBS or 1)")

    p = _Parser(prog="chiral-resolve", description="Exact verification of chiral-space resolutions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--m-max", type=_nonneg, default=2)
    v.add_argument("--p-max", type=_nonneg, default=2)
    v.add_argument("--terms", type=_positive, default=3)
    v.add_argument("--mode-cutoff", type=_positive, default=10)

    c = sub.add_parser("char", parents=[common], help="graded dimensions of a space against its closed form")
    c.add_argument("--space", choices=SPACES, required=True)
    c.add_argument("--sector", choices=("even", "odd"), default="even")
    c.add_argument("--m", type=_nonneg, default=0)
    c.add_argument("--p", type=_nonneg, default=0, help="cohomological index for Hcoh")

    r = sub.add_parser("resolution", parents=[common], help="exactness of the free resolution")
    r.add_argument("--m", type=_nonneg, default=None)
    r.add_argument("--m-max", type=_nonneg, default=1)
    r.add_argument("--terms", type=_positive, default=3)

    d = sub.add_parser("derham", parents=[common], help="semi-infinite de Rham cohomology")
    d.add_argument("--sector", choices=("even", "odd"), default=None)
    d.add_argument("--m", type=_nonneg, default=None)
    d.add_argument("--m-max", type=_nonneg, default=1)
    d.add_argument("--p-max", type=_nonneg, default=2)

    k = sub.add_parser("koszul", parents=[common], help="fixed-hole Koszul subcomplexes")
    k.add_argument("--k", type=_nonneg, default=2, help="maximal number of holes")
    k.add_argument("--m-max", type=_nonneg, default=2, help="largest position")

    s = sub.add_parser("sp", parents=[common], help="fundamental representations of Sp(2N)")
    s.add_argument("--N", type=_positive, required=True)
    s.add_argument("--k", type=_nonneg, default=None)
    s.add_argument("--m", type=_nonneg, default=None, help="compare the filtration of W at this m")
    s.add_argument("--sector", choices=("even", "odd"), default="even")

    b = sub.add_parser("bf-check", parents=[common], help="boson-fermion commutation square")
    b.add_argument("--sector", choices=("even", "odd"), default=None)
    b.add_argument("--mode-range", type=_positive, default=None)
    return p


# ---------------------------------------------------------------------------
# rendering

def _csv_line(values) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(values)
    return buf.getvalue()


def render(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return "\n".join(r.to_json() for r in reports)
    if fmt == "csv":
        lines = [_csv_line(["check_name", "parameters", "status", "cells", "first_mismatch"])]
        for r in reports:
            fm = r.first_mismatch
            lines.append(_csv_line([r.check_name, json.dumps(r.to_dict()["parameters"], sort_keys=True),
                                    r.status, len(r.cells), "" if fm is None else json.dumps(fm, sort_keys=True)]))
        return "\n".join(lines)
    failed = sum(1 for r in reports if not r.passed)
    lines = [r.summary() for r in reports]
    lines.append(f"{len(reports)} reports, {failed} failed")
    return "\n".join(lines)


def _finish(reports: list[VerificationReport], args, out, text: str | None = None) -> int:
    if not args.no_timestamp:
        for r in reports:
            r.stamp()
    print(render(reports, args.format) if text is None else text, file=out)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            for r in reports:
                fh.write(r.to_json() + "\n")
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    try:
        return default_jobs()
    except ValueError as e:
        raise UsageError(str(e)) from None


# ---------------------------------------------------------------------------
# subcommands

def _cmd_verify(args, out) -> int:
    opt = Options(cutoff=args.cutoff, m_max=args.m_max, p_max=args.p_max, terms=args.terms,
                  mode_cutoff=args.mode_cutoff)
    reports = run_tasks(all_tasks(args.suite, opt), _jobs(args))
    return _finish(reports, args, out)


def _cmd_char(args, out) -> int:
    sec = as_sector(args.sector)
    dims = space_dims(args.space, sec, args.m, args.cutoff, args.p)
    params = {"space": args.space, "sector": sec.label, "m": args.m, "cutoff": args.cutoff}
    if args.space == "Hcoh":
        params["p"] = args.p
    series = closed_form(args.space, sec, args.m, args.p, args.cutoff)
    rep = compare(series, dims, "character", params)
    text = None
    if args.format == "csv":
        text = _csv_line(dims)
    elif args.format == "table":
        rows = [f"{'energy':>6} {'computed':>9} {'closed':>9}"]
        rows += [f"{e:>6} {dims[e]:>9} {series[e]:>9}" for e in range(args.cutoff + 1)]
        rows.append(rep.summary())
        text = "\n".join(rows)
    return _finish([rep], args, out, text)


def _ms(args) -> list[int]:
    return [args.m] if args.m is not None else list(range(args.m_max + 1))


def _cmd_resolution(args, out) -> int:
    tasks = [(homology.resolution_check, (m, args.terms, args.cutoff)) for m in _ms(args)]
    return _finish(run_tasks(tasks, _jobs(args)), args, out)


def _sectors(args):
    return [as_sector(args.sector)] if args.sector else [as_sector("even"), as_sector("odd")]


def _cmd_derham(args, out) -> int:
    tasks = []
    for sec in _sectors(args):
        for m in _ms(args):
            tasks.append((homology.derham_check, (sec, m, args.p_max, args.cutoff)))
            tasks.append((homology.highest_cohomology_check, (sec, m, args.cutoff)))
    return _finish(run_tasks(tasks, _jobs(args)), args, out)


def _cmd_koszul(args, out) -> int:
    sectors = homology.koszul_sectors(args.k, args.cutoff)
    rep = homology.koszul_exactness_check(sectors, args.m_max, args.cutoff)
    return _finish([rep], args, out)


def _cmd_sp(args, out) -> int:
    N = args.N
    if args.m is not None:
        rep = symplectic.w_filtration_compare(as_sector(args.sector), args.m, N, args.cutoff)
        return _finish([rep], args, out)
    ks = [args.k] if args.k is not None else list(range(N + 1))
    if any(k > N for k in ks):
        raise UsageError(f"k must be at most N = {N}")
    rep = VerificationReport("sp-fundamental", {"N": N, "k": ks if args.k is None else args.k})
    dims = {}
    for k in ks:
        dims[k] = symplectic.fundamental_dim(N, k)
        rep.add({"N": N, "k": k}, symplectic.fundamental_dim_formula(N, k), dims[k])
    text = None
    if args.format == "table":
        if args.k is not None:
            text = f"dim={dims[args.k]}"
        else:
            text = "\n".join(f"k={k} dim={d}" for k, d in dims.items())
    elif args.format == "csv":
        text = _csv_line(dims[k] for k in ks)
    return _finish([rep], args, out, text)


def _cmd_bf(args, out) -> int:
    tasks = []
    for sec in _sectors(args):
        tasks.append((checks.bf_check, (sec, args.cutoff, args.mode_range)))
    return _finish(run_tasks(tasks, _jobs(args)), args, out)


COMMANDS = {"verify": _cmd_verify, "char": _cmd_char, "resolution": _cmd_resolution,
            "derham": _cmd_derham, "koszul": _cmd_koszul, "sp": _cmd_sp, "bf-check": _cmd_bf}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(parser.format_usage().rstrip(), file=err)
        print(e, file=err)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_PASS if not e.code else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as e:
        # ValueError is what the library raises for out-of-range parameters
        print(f"chiral-resolve: error: {e}", file=err)
        return EXIT_USAGE
    except Exception as e:  # noqa: BLE001
        print(f"chiral-resolve: internal error: {type(e).__name__}: {e}", file=err)
        traceback.print_exc(file=err)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
