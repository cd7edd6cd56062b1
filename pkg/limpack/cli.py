"""Command-line entry point: ``python -m limpack <subcommand> ...``.

Exit codes: 0 success or valid certificate, 1 invalid certificate, infeasible
instance or failed construction, 2 usage error, 3 input error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from limpack.bench import format_table, run_bench
from limpack.bounds import bound_sheet, graph_bound_sheet
from limpack.cubic import construct_two_limited
from limpack.errors import InfeasibleError, InputError, LimpackError
from limpack.exact import max_k_limited, max_typed_two_limited, min_tuple_dominating
from limpack.generators import (
    copies, gen_cycle, gen_named, gen_projective, gen_random_regular, gen_random_typed,
)
from limpack.graph_core import Graph
from limpack.graph_io import read_graph, read_packing, serialize_graph, serialize_packing, write_graph, write_text
from limpack.greedy import greedy_packing
from limpack.logging_setup import configure_logging
from limpack.random_packing import AUTO, BOUND, RandomRunReport, lll_resample, sample_and_repair
from limpack.shared import config
from limpack.typed import TypedMultigraph
from limpack.verify import verify_k_limited, verify_tuple_dominating, verify_typed_two_limited

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

FAMILIES = ('cycle', 'h6', 'petersen', 'k4', 'projective', 'random-regular', 'random-typed')
CONSTRUCT_METHODS = ('cubic2', 'greedy', 'sample-repair', 'lll')


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _rate(text: str) -> float | str:
    if text in (AUTO, BOUND):
        return text
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a probability, '{AUTO}' or '{BOUND}', got {text!r}") from None
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='limpack', description='Limited packings and tuple domination.')
    parser.add_argument('--log-level', default=None, type=str.upper,
                        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'),
                        help='logging level for stderr (default: LIMPACK_LOG_LEVEL)')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', help='write a graph from a named family')
    gen.add_argument('--family', required=True, choices=FAMILIES)
    gen.add_argument('--n', type=_nonnegative)
    gen.add_argument('--r', type=_nonnegative)
    gen.add_argument('--q', type=_positive)
    gen.add_argument('--k', type=_positive)
    gen.add_argument('--seed', type=_nonnegative, default=None)
    gen.add_argument('--copies', type=_positive, default=1)
    gen.add_argument('--out', required=True, help="output file, or '-' for stdout")

    solve = sub.add_parser('solve', help='exact L_k or tuple domination number')
    solve.add_argument('--k', type=_positive)
    solve.add_argument('--exact', action='store_true', help='lift the exact-solver vertex limit')
    solve.add_argument('--dominating', action='store_true')
    solve.add_argument('--l', dest='ell', type=_positive)
    solve.add_argument('--jobs', type=_positive, default=None)
    solve.add_argument('file')

    construct = sub.add_parser('construct', help='build a packing with a constructive method')
    construct.add_argument('--method', required=True, choices=CONSTRUCT_METHODS)
    construct.add_argument('--k', type=_positive, required=True)
    construct.add_argument('--seed', type=_nonnegative, default=None)
    construct.add_argument('--p', type=_rate, default=None)
    construct.add_argument('--max-rounds', type=_positive, default=None)
    construct.add_argument('--trace', default=None)
    construct.add_argument('file')

    verify = sub.add_parser('verify', help='check a packing or dominating set')
    verify.add_argument('--k', type=_positive)
    verify.add_argument('--packing', required=True)
    verify.add_argument('--dominating', action='store_true')
    verify.add_argument('--l', dest='ell', type=_positive)
    verify.add_argument('graph')

    bounds = sub.add_parser('bounds', help='closed-form bounds for a graph or parameters')
    bounds.add_argument('--k', type=_positive, required=True)
    bounds.add_argument('--n', type=_nonnegative)
    bounds.add_argument('--maxdeg', type=_nonnegative)
    bounds.add_argument('--mindeg', type=_nonnegative)
    bounds.add_argument('file', nargs='?')

    bench = sub.add_parser('bench', help='benchmark table')
    bench.add_argument('--suite', required=True, choices=('paper',))
    bench.add_argument('--no-timing', action='store_true')
    bench.add_argument('--seed', type=_nonnegative, default=None)
    bench.add_argument('--jobs', type=_positive, default=None)
    return parser


def _check_flags(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    """Cross-flag rules argparse cannot express; runs before any file is touched."""
    if args.command == 'gen':
        needed = {'cycle': ('n',), 'projective': ('q', 'k'), 'random-regular': ('n', 'r'),
                  'random-typed': ('n',)}.get(args.family, ())
        missing = [f"--{name}" for name in needed if getattr(args, name) is None]
        if missing:
            parser.error(f"gen --family {args.family} requires {' '.join(missing)}")
        if args.family == 'random-typed' and args.copies != 1:
            parser.error("--copies applies to plain graph families only")
    elif args.command in ('solve', 'verify'):
        if args.dominating and args.ell is None:
            parser.error(f"{args.command} --dominating requires --l")
        if not args.dominating and args.k is None:
            parser.error(f"{args.command} requires --k")
    elif args.command == 'construct':
        if args.trace is not None and args.method != 'cubic2':
            parser.error("--trace is only available with --method cubic2")
        if args.method == 'cubic2' and args.k != 2:
            parser.error("--method cubic2 builds 2-limited sets; use --k 2")
        if isinstance(args.p, str) and args.method != 'sample-repair':
            parser.error(f"--p {args.p} is only meaningful with --method sample-repair")
    elif args.command == 'bounds':
        given = [name for name in ('n', 'maxdeg', 'mindeg') if getattr(args, name) is not None]
        if args.file is None and len(given) != 3:
            parser.error("bounds needs FILE or all of --n, --maxdeg and --mindeg")
        if args.file is not None and given:
            parser.error("bounds takes either FILE or --n/--maxdeg/--mindeg, not both")


def _plain(g: Graph | TypedMultigraph, what: str) -> Graph:
    if isinstance(g, TypedMultigraph):
        raise InputError(f"{what} needs a plain graph; the file has typed edges")
    return g


def _cmd_gen(args: argparse.Namespace) -> int:
    seed = config.DEFAULT_SEED if args.seed is None else args.seed
    family = args.family
    if family == 'cycle':
        g = gen_cycle(args.n)
    elif family == 'projective':
        g = gen_projective(args.q, args.k)
    elif family == 'random-regular':
        g = gen_random_regular(args.n, args.r, seed)
    elif family == 'random-typed':
        g = gen_random_typed(args.n, seed)
    else:
        g = gen_named(family)
    if isinstance(g, Graph):
        g = copies(g, args.copies)
    if args.out == '-':
        sys.stdout.write(serialize_graph(g))
    else:
        write_graph(args.out, g)
        print(f"wrote {g.vertex_count} vertices to {args.out}")
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    g = read_graph(args.file)
    limit = g.vertex_count if args.exact else None
    if isinstance(g, TypedMultigraph):
        if args.dominating or args.k != 2:
            raise InputError("typed multigraphs only support the 2-limited problem (--k 2)")
        result = max_typed_two_limited(g, limit=limit)
    elif args.dominating:
        result = min_tuple_dominating(g, args.ell, limit=limit, n_jobs=args.jobs)
    else:
        result = max_k_limited(g, args.k, limit=limit, n_jobs=args.jobs)
    sys.stdout.write(result.to_text())
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace) -> int:
    g = read_graph(args.file)
    if args.method == 'cubic2':
        tm = g if isinstance(g, TypedMultigraph) else TypedMultigraph.from_graph(g)
        chosen, trace = construct_two_limited(tm)
        if args.trace is not None:
            write_text(args.trace, trace.to_text(), 'trace')
        sys.stdout.write(f"size: {len(chosen)}\nrounds: {len(trace.steps)}\nclamped: false\n"
                         f"witness: {serialize_packing(chosen)}")
        return EXIT_OK
    g = _plain(g, f"--method {args.method}")
    if args.method == 'greedy':
        packing = greedy_packing(g, args.k)
        sys.stdout.write(f"size: {len(packing)}\nrounds: 0\nclamped: false\n"
                         f"witness: {serialize_packing(packing.vertices)}")
        return EXIT_OK
    if args.method == 'sample-repair':
        report: RandomRunReport = sample_and_repair(g, args.k, p=AUTO if args.p is None else args.p,
                                                    seed=args.seed)
    else:
        report = lll_resample(g, args.k, seed=args.seed, max_rounds=args.max_rounds, p=args.p)
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.success else EXIT_INVALID


def _cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    vertices = read_packing(args.packing)
    if isinstance(g, TypedMultigraph):
        if args.dominating or args.k != 2:
            raise InputError("typed multigraphs only support 2-limited sets (--k 2)")
        report = verify_typed_two_limited(g, vertices)
    elif args.dominating:
        report = verify_tuple_dominating(g, vertices, args.ell)
    else:
        report = verify_k_limited(g, vertices, args.k)
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_bounds(args: argparse.Namespace) -> int:
    if args.file is None:
        sheet = bound_sheet(args.n, args.maxdeg, args.mindeg, args.k)
    else:
        g = read_graph(args.file)
        if isinstance(g, TypedMultigraph):
            g = g.underlying_graph()
        sheet = graph_bound_sheet(g, args.k)
    sys.stdout.write(sheet.to_text())
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    table = run_bench(args.suite, seed=args.seed, timing=not args.no_timing, n_jobs=args.jobs)
    sys.stdout.write(format_table(table))
    return EXIT_OK


COMMANDS = {
    'gen': _cmd_gen,
    'solve': _cmd_solve,
    'construct': _cmd_construct,
    'verify': _cmd_verify,
    'bounds': _cmd_bounds,
    'bench': _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_flags(parser, args)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except LimpackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
