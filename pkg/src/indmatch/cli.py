"""Command-line front end.

Subcommands: gen, solve, exact, verify, fuzz. Results go to stdout and are
byte-identical across runs with the same arguments; anything timed or
diagnostic goes to stderr.

Exit codes: 0 success, 2 max degree exceeded, 3 excluded component in the
input, 4 usage or parse failure, 5 internal invariant violation, 6 checks
found failures, 7 search budget exhausted.
"""

import argparse
import sys
from pathlib import Path
from time import perf_counter

from .engine import EXACT_THRESHOLD, SolveResult, solve
from .errors import (
    BudgetExceededError,
    C25ComponentError,
    FormatError,
    IndmatchError,
    InvariantViolationError,
    MaxDegreeExceededError,
)
from .exact import max_induced_matching
from .formats import (
    format_certificate,
    format_graph,
    format_matching,
    parse_certificate_file,
    parse_graph_file,
    parse_matching_file,
)
from .generators import (
    RandomGraphConfig,
    gen_c25,
    gen_cycle,
    gen_k33plus,
    gen_path,
    gen_random_maxdeg4,
    gen_tight9,
)
from .harness import FuzzConfig, fuzz, verify_certificate, verify_solution

EXIT_OK = 0
EXIT_MAX_DEGREE = 2
EXIT_C25 = 3
EXIT_USAGE = 4
EXIT_INVARIANT = 5
EXIT_CHECKS_FAILED = 6
EXIT_BUDGET = 7


def _write_out(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_gen(args):
    family = args.family
    if family in ("path", "cycle", "random") and args.n is None:
        print(f"error: gen --family {family} requires --n", file=sys.stderr)
        return EXIT_USAGE
    if family == "c25":
        g = gen_c25()
    elif family == "k33plus":
        g = gen_k33plus()
    elif family == "tight9":
        g = gen_tight9()
    elif family == "path":
        g = gen_path(args.n)
    elif family == "cycle":
        g = gen_cycle(args.n)
    else:
        extra = args.extra_attempts
        if extra is None:
            extra = 2 * args.n
        g = gen_random_maxdeg4(
            RandomGraphConfig(n=args.n, extra_edge_attempts=extra, seed=args.seed)
        )
    _write_out(format_graph(g), args.out)
    return EXIT_OK


def _cmd_solve(args):
    g = parse_graph_file(args.graph)
    started = perf_counter()
    result = solve(g, exact_threshold=args.threshold)
    elapsed = perf_counter() - started
    sys.stdout.write(format_matching(result.matching))
    if args.certificate is not None:
        Path(args.certificate).write_text(format_certificate(result))
    print(
        f"matched {len(result.matching)} edges on {result.n} vertices in"
        f" {len(result.certificate.steps)} steps ({elapsed:.3f}s)",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_exact(args):
    g = parse_graph_file(args.graph)
    started = perf_counter()
    matching = max_induced_matching(g, max_nodes=args.budget)
    elapsed = perf_counter() - started
    sys.stdout.write(format_matching(matching))
    print(
        f"optimum {len(matching)} edges on {g.n} vertices ({elapsed:.3f}s)",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_verify(args):
    g = parse_graph_file(args.graph)
    matching = parse_matching_file(args.matching)
    report = verify_solution(g, matching)
    for line in report.details:
        print(line)
    failed = not report.ok
    if args.certificate is not None:
        cert, cert_matching = parse_certificate_file(args.certificate)
        if tuple(cert_matching) != tuple(matching):
            print("certificate matching differs from the matching file")
            failed = True
        isolated = sum(1 for v in g.vertices() if g.degree(v) == 0)
        cert_report = verify_certificate(
            g, SolveResult(cert_matching, cert, g.n, isolated)
        )
        for line in cert_report.details:
            print(line)
        failed = failed or not cert_report.ok
    if failed:
        return EXIT_CHECKS_FAILED
    print("ok")
    return EXIT_OK


def _cmd_fuzz(args):
    config = FuzzConfig(
        trials=args.trials,
        n_min=args.n_min,
        n_max=args.n_max,
        seed=args.seed,
        cross_check_max_n=args.cross_check_max_n,
    )
    report = fuzz(config)
    for line in report.summary_lines():
        print(line)
    print(f"slowest trial {report.max_seconds:.3f}s", file=sys.stderr)
    for failure in report.failures:
        path = Path.cwd() / f"fuzz-fail-{failure.trial}.txt"
        header = (
            f"# fuzz failure: {failure.kind}\n"
            f"# trial {failure.trial}\n"
            f"# seed {failure.seed}\n"
        )
        path.write_text(header + failure.graph_text)
        for detail in failure.details:
            print(f"trial {failure.trial}: {detail}", file=sys.stderr)
    return EXIT_CHECKS_FAILED if report.failures else EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="indmatch",
        description="Certified induced matchings in graphs of max degree 4.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named or random instance")
    p.add_argument(
        "--family", required=True,
        choices=("c25", "k33plus", "tight9", "path", "cycle", "random"),
    )
    p.add_argument("--n", type=int, help="vertex count (path, cycle, random)")
    p.add_argument(
        "--extra-attempts", type=int, dest="extra_attempts",
        help="random only: edge-insertion attempts (default 2n)",
    )
    p.add_argument("--seed", type=int, default=0, help="random only (default 0)")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="reduce a graph to a certified matching")
    p.add_argument("graph", help="graph file")
    p.add_argument(
        "--threshold", type=int, default=EXACT_THRESHOLD,
        help="components this small are solved exactly"
        f" (default {EXACT_THRESHOLD}, minimum 10)",
    )
    p.add_argument("--certificate", help="also write the step log here")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("exact", help="maximum induced matching, small graphs")
    p.add_argument("graph", help="graph file")
    p.add_argument(
        "--budget", type=int, default=10_000_000,
        help="search-node budget, 0 for unlimited (default 10^7)",
    )
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("verify", help="check a matching (and certificate)")
    p.add_argument("graph", help="graph file")
    p.add_argument("matching", help="matching file")
    p.add_argument("--certificate", help="certificate file to replay")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fuzz", help="randomized solve/verify campaign")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--nmin", type=int, default=2, dest="n_min")
    p.add_argument("--nmax", type=int, default=300, dest="n_max")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--cross-check-max-n", type=int, default=20, dest="cross_check_max_n",
        help="sizes up to this are compared against the exact solver",
    )
    p.set_defaults(func=_cmd_fuzz)
    return parser


def run(argv=None):
    """Parse arguments and dispatch; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; fold the
        # latter into the parse-failure code.
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except MaxDegreeExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MAX_DEGREE
    except C25ComponentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_C25
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (FormatError, IndmatchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
