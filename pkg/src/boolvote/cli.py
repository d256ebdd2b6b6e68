"""Command-line front end.

Exit codes: 0 success, 1 oracle or closed-form mismatch, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import datetime
import sys

from . import __version__
from .boolean_core import CapacityError, check_arity, dump_table, polarity
from .indices import full_report
from .oracle import oracle_report
from .report import RENDERERS
from .loader import InputError, load_system
from .symmetric import binom
from .voting import VotingSystem, apply_restrictions, decision_function

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _forbid_lists(values):
    return [[name.strip() for name in v.split(",") if name.strip()] for v in values or []]


def _meta(args) -> str:
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    return f"# boolvote {__version__} {args.command} at {stamp}\n"


def cmd_analyze(args, out) -> int:
    system = load_system(args.system, _forbid_lists(args.forbid))
    report = full_report(system, args.max_n)
    if args.meta:
        out.write(_meta(args))
    out.write(RENDERERS[args.format](report))
    if not args.oracle:
        return EXIT_OK
    check_arity(system.n, min(args.max_n or 20, 20))
    reference = oracle_report(system)
    status = EXIT_OK
    if report.weight != reference.weight:
        out.write(f"MISMATCH weight: algebraic={report.weight} oracle={reference.weight}\n")
        status = EXIT_MISMATCH
    for mine, theirs in zip(report.voters, reference.voters):
        for name, a, b in zip(
            ("voter", "tbp", "pbp", "pii", "ppi", "sat", "nsat", "psat", "pgi"),
            mine.values(), theirs.values(),
        ):
            if a != b:
                out.write(f"MISMATCH {mine.voter}.{name}: algebraic={a} oracle={b}\n")
                status = EXIT_MISMATCH
    if status == EXIT_OK:
        out.write("oracle: all indices agree\n")
    return status


def kofn_rows(n_max: int):
    """Computed versus closed-form values for every k-out-of-n system up to ``n_max``."""
    for n in range(3, n_max + 1):
        for k in range(2, n + 1):
            free = full_report(VotingSystem.k_out_of_n(k, n))
            tied = full_report(VotingSystem.k_out_of_n(k, n, forbidden=[{0, 1}]))
            expected_free = binom(n - 1, k - 1)
            expected_pair = binom(n - 2, k - 1)
            expected_rest = binom(n - 3, k - 1) + 2 * binom(n - 3, k - 2)
            ok = (
                free.column("tbp") == [expected_free] * n
                and free.column("pgi") == [expected_free] * n
                and tied.column("tbp") == [expected_pair] * 2 + [expected_rest] * (n - 2)
                and tied.column("pgi") == tied.column("tbp")
            )
            yield {
                "n": n, "k": k,
                "tbp": free.voters[0].tbp, "expected": expected_free,
                "tbp_pair": tied.voters[0].tbp, "expected_pair": expected_pair,
                "tbp_rest": tied.voters[2].tbp, "expected_rest": expected_rest,
                "pgi_pair": tied.voters[0].pgi, "pgi_rest": tied.voters[2].pgi,
                "ok": ok,
            }


def cmd_sweep_kofn(args, out) -> int:
    check_arity(args.n_max, args.max_n)
    if args.meta:
        out.write(_meta(args))
    out.write("n   k   tbp/closed   forbid{1,2}: tbp(X1)/closed  tbp(X3)/closed  pgi(X1) pgi(X3)  status\n")
    status = EXIT_OK
    for r in kofn_rows(args.n_max):
        flag = "ok" if r["ok"] else "MISMATCH"
        if not r["ok"]:
            status = EXIT_MISMATCH
        out.write(
            f"{r['n']:<3} {r['k']:<3} {r['tbp']}/{r['expected']:<10} "
            f"{r['tbp_pair']}/{r['expected_pair']:<22} {r['tbp_rest']}/{r['expected_rest']:<10} "
            f"{r['pgi_pair']:<7} {r['pgi_rest']:<7}  {flag}\n"
        )
    return status


def _polarity_line(label, f) -> str:
    marks = " ".join(f"X{m + 1}:{polarity(f, m).value}" for m in range(f.n))
    return f"# polarity {label}: {marks}\n"


def cmd_dump_table(args, out) -> int:
    system = load_system(args.system, _forbid_lists(args.forbid))
    f = decision_function(system, args.max_n)
    g = apply_restrictions(f, system.forbidden).restricted
    out.write("# f\n" + dump_table(f) + _polarity_line("f", f))
    out.write("# g\n" + dump_table(g) + _polarity_line("g", g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolvote", description="Voting-power indices of yes-no voting systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-n", type=int, default=None, help="truth-table variable cap (default 24)")
        p.add_argument("--meta", action="store_true", help="prepend a run-metadata comment line")

    analyze = sub.add_parser("analyze", help="compute every index for a system file")
    analyze.add_argument("system", help="JSON system file or bundled fixture name")
    analyze.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    analyze.add_argument("--format", choices=sorted(RENDERERS), default="plain")
    analyze.add_argument("--forbid", action="extend", nargs="+", metavar="A,B",
                         help="forbid a coalition of the named voters")
    common(analyze)
    analyze.set_defaults(func=cmd_analyze)

    sweep = sub.add_parser("sweep-kofn", help="check k-out-of-n closed forms")
    sweep.add_argument("--n-max", type=int, required=True)
    common(sweep)
    sweep.set_defaults(func=cmd_sweep_kofn)

    dump = sub.add_parser("dump-table", help="print truth tables of f and g")
    dump.add_argument("system")
    dump.add_argument("--forbid", action="extend", nargs="+", metavar="A,B")
    common(dump)
    dump.set_defaults(func=cmd_dump_table)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
