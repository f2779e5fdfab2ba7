"""Command-line interface.

Exit codes: 0 solved/feasible, 1 infeasible, 2 input error, 3 size limit
exceeded, 4 oracle disagreement (``check`` only).
"""

import argparse
import logging
import sys

from .exceptions import AAFREError, ParseError, SizeError
from .io import dump_instance, emit_report, parse_instance
from .optimizer import solve
from .oracle import GeneratorConfig, brute_force_solve, generate_feasible
from .resolution import feasible_candidates

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_SIZE, EXIT_MISMATCH = 0, 1, 2, 3, 4

logger = logging.getLogger("aafre")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(exc.strerror, path) from exc


def _load(args):
    return parse_instance(_read(args.file), lam=args.lam, tol=args.tol)


def cmd_resolve(args):
    inst = _load(args)
    report = feasible_candidates(inst, minimal=not args.no_minimality_filter,
                                 max_candidates=args.max_candidates, n_jobs=args.parallel)
    sys.stdout.write(emit_report(report, args.format))
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_optimize(args):
    inst = _load(args)
    report = solve(inst, prune=args.prune, all_optima=args.all_optima,
                   max_candidates=args.max_candidates, n_jobs=args.parallel)
    sys.stdout.write(emit_report(report, args.format))
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_check(args):
    inst = _load(args)
    oracle = brute_force_solve(inst, n_samples=args.samples, seed=args.seed)
    report = solve(inst, prune=args.prune, max_candidates=args.max_candidates)
    agree = report.feasible == oracle.feasible
    if agree and report.feasible:
        agree = abs(report.z_star - oracle.z_star) <= args.atol
    print(f"solver: feasible={report.feasible} z*={report.z_star}")
    print(f"oracle: feasible={oracle.feasible} z*={oracle.z_star} "
          f"selections={oracle.selections} samples={0 if oracle.samples is None else len(oracle.samples)}")
    print("agree" if agree else "DISAGREE")
    if not agree:
        return EXIT_MISMATCH
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_generate(args):
    cfg = GeneratorConfig(m=args.m, n=args.n, density=args.density, lam=args.lam,
                          seed=args.seed)
    text = dump_instance(generate_feasible(cfg))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_goldens(args):
    from .goldens import run_goldens

    results = run_goldens(args.directory)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
        for f in r.failures:
            print(f"    {f}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def build_parser():
    parser = argparse.ArgumentParser(
        prog="aafre",
        description="Solve linear programs over max-Aczel-Alsina fuzzy relational equations.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="instance document, '-' for stdin")
        p.add_argument("--lambda", dest="lam", type=float, help="override the t-norm exponent")
        p.add_argument("--tol", type=float, help="override the feasibility tolerance")
        p.add_argument("--max-candidates", type=int, help="abort with exit 3 beyond this many")
        p.set_defaults(func=func)
        return p

    p = instance_command("resolve", cmd_resolve, "feasibility, Xbar and minimal candidates")
    p.add_argument("--no-minimality-filter", action="store_true")
    p.add_argument("--parallel", type=int, metavar="WORKERS")
    p.add_argument("--format", choices=["text", "machine"], default="text")

    p = instance_command("optimize", cmd_optimize, "optimal solutions of c.x")
    p.add_argument("--prune", action="store_true", help="bound the positive-cost search")
    p.add_argument("--all-optima", action="store_true", help="report all tied selections")
    p.add_argument("--parallel", type=int, metavar="WORKERS")
    p.add_argument("--format", choices=["text", "machine"], default="text")

    p = instance_command("check", cmd_check, "cross-check against brute-force enumeration")
    p.add_argument("--prune", action="store_true")
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--atol", type=float, default=1e-9)

    p = sub.add_parser("generate", help="emit a random feasible instance")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.7)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("goldens", help="run the golden regression corpus")
    p.add_argument("--directory")
    p.set_defaults(func=cmd_goldens)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except AAFREError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
