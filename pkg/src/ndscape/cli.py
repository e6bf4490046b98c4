"""Command-line entry point: ``ndscape <subcommand> ...``.

Every CSV written starts with ``# ndscape <version> seed=<seed> cmd=<args>``
so a result can be replayed exactly. Exit codes: 0 success, 1 usage error,
2 I/O or format error, 3 numeric or contract violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import FdcUndefined, fdc, fdc_scatter, network_size_ranking
from .core import IncompatibleDimensions, Landscape, degree_distribution, distribution_stats, partition
from .extension import ExtendedLandscape, convolve, extend, extended_distribution
from .formats import (
    FormatError,
    dumps_ndl,
    dumps_xndl,
    header_line,
    read_distribution,
    read_landscape_any,
    write_csv,
    write_distribution,
)
from .ga import GaParams, success_rate
from .generator import MAX_BITS, RECIPIENT_RULES
from .netfit import DEFAULT_NOISE, TrapParams, assign_trap, window_distribution
from .pipeline import build_nd, streams
from .reference import nk_family, royal_road, technological

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_CONTRACT = 3

FAMILIES = ("royal-road", "nk", "nkp", "nkq", "tech")
REPORTS = ("degrees", "networks", "ranks", "fdc", "scatter")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ndscape", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"ndscape {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="build an ND-landscape for a target degree distribution")
    p.add_argument("--n", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--target", help="distribution CSV (degree,weight)")
    src.add_argument("--window", type=int, nargs=2, metavar=("P", "W"),
                     help="uniform target on degrees P..P+W-1")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--skip-anneal", action="store_true")
    p.add_argument("--anneal-budget", type=int, help="total annealing moves")
    p.add_argument("--recipients", choices=RECIPIENT_RULES, default="aligned")
    p.add_argument("--join", action="store_true", help="let genotypes adopt a neighbour's value")
    p.add_argument("--allow-large", action="store_true", help=f"permit N > {MAX_BITS}")
    p.add_argument("--out", default="-")
    p.add_argument("--log", help="CSV of processing order and sampled degrees")
    p.add_argument("--trace", help="CSV of the annealing energy trace")

    p = sub.add_parser("ref", help="build a reference landscape")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--blocks", type=int, help="royal-road block count")
    p.add_argument("--k", type=int, help="epistatic partners per locus")
    p.add_argument("--p", type=float, help="NKp zero probability")
    p.add_argument("--q", type=int, help="NKq value count")
    p.add_argument("--m", type=int, help="technological level count")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", default="-")

    p = sub.add_parser("trap", help="assign trap fitness to the neutral networks")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--noise", type=float, default=DEFAULT_NOISE)
    p.add_argument("--anchor", type=int, default=0)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", default="-")
    p.add_argument("--networks-csv", help="per-network size, distance and fitness")

    p = sub.add_parser("analyze", help="report on a landscape")
    p.add_argument("--report", choices=REPORTS, required=True)
    p.add_argument("--in", dest="input", default="-")
    p.add_argument("--sample", type=int, help="scatter sample size (default: all)")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", default="-")

    p = sub.add_parser("ga", help="GA success rate on one or more landscapes")
    p.add_argument("--in", dest="inputs", nargs="+", required=True)
    p.add_argument("--runs", type=int, default=GaParams.runs)
    p.add_argument("--pop", type=int, default=GaParams.population)
    p.add_argument("--gens", type=int, default=GaParams.generations)
    p.add_argument("--mut", type=float, default=GaParams.mutation_rate)
    p.add_argument("--xover", type=float, default=GaParams.crossover_rate)
    p.add_argument("--tour", type=int, default=GaParams.tournament)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--trap", default="", help="label copied into the trap column")
    p.add_argument("--out", default="-")

    p = sub.add_parser("extend", help="combine landscapes into an additive extended one")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--out", default="-")

    p = sub.add_parser("convolve", help="degree distribution of an extended landscape")
    p.add_argument("inputs", nargs=2)
    p.add_argument("--out", default="-")

    p = sub.add_parser("window", help="uniform window distribution")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")
    return parser


def canonical(args: argparse.Namespace) -> str:
    """The parsed invocation as a flat argument string, defaults included."""
    parts = [args.command]
    for key, value in vars(args).items():
        if key == "command" or value is None or value is False:
            continue
        flag = "--" + {"input": "in", "inputs": "in"}.get(key, key).replace("_", "-")
        if key == "inputs" and args.command in ("extend", "convolve"):
            parts.extend(value)
            continue
        if value is True:
            parts.append(flag)
        elif isinstance(value, (list, tuple)):
            parts.append(flag + " " + " ".join(str(v) for v in value))
        else:
            parts.append(f"{flag} {value}")
    return " ".join(parts)


def _header(args) -> str:
    return header_line(__version__, getattr(args, "seed", "none"), canonical(args))


def _emit(text: str, dest: str) -> None:
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _csv(dest: str, columns, rows, args) -> None:
    if dest == "-":
        write_csv(sys.stdout, columns, rows, _header(args))
    else:
        write_csv(dest, columns, rows, _header(args))


def _read(path: str):
    if path == "-":
        return read_landscape_any(sys.stdin)
    return read_landscape_any(path)


def _plain(land) -> Landscape:
    if isinstance(land, ExtendedLandscape):
        return land.flatten()
    return land


def cmd_gen(args) -> None:
    if args.target is not None:
        target = read_distribution(args.target)
    else:
        target = window_distribution(args.window[0], args.window[1], args.n)
    if len(target) != args.n + 1:
        raise IncompatibleDimensions(
            f"target has {len(target)} degrees but N={args.n} needs {args.n + 1}"
        )
    build = build_nd(
        args.n, target, args.seed,
        anneal=not args.skip_anneal,
        anneal_moves=args.anneal_budget,
        allow_large=args.allow_large,
        recipients=args.recipients,
        join=args.join,
    )
    _emit(dumps_ndl(build.landscape), args.out)
    if args.log:
        order = np.empty(build.landscape.size, dtype=np.int64)
        order[build.log.order] = np.arange(build.landscape.size)
        rows = ((g, int(order[g]), int(build.log.sampled[g])) for g in range(build.landscape.size))
        _csv(args.log, ["genotype", "position", "sampled_degree"], rows, args)
    if args.trace:
        trace = build.trace if build.trace is not None else np.empty((0, 2))
        _csv(args.trace, ["move", "energy"], ((int(m), float(e)) for m, e in trace), args)
    print(
        f"seed={args.seed} distance={build.distance:.6f} raw_distance={build.raw_distance:.6f} "
        f"mean_degree={build.mean_degree:.4f}",
        file=sys.stderr,
    )


def cmd_ref(args) -> None:
    rng = np.random.default_rng(args.seed)
    fam = args.family

    def need(*names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            raise UsageError(f"--family {fam} needs " + ", ".join("--" + n for n in missing))

    if fam == "royal-road":
        need("blocks")
        if args.n % args.blocks:
            raise UsageError(f"--n {args.n} is not a multiple of --blocks {args.blocks}")
        land = royal_road(args.n, args.blocks, args.n // args.blocks)
    elif fam == "nk":
        need("k")
        land = nk_family(args.n, args.k, rng)
    elif fam == "nkp":
        need("k", "p")
        land = nk_family(args.n, args.k, rng, p=args.p)
    elif fam == "nkq":
        need("k", "q")
        land = nk_family(args.n, args.k, rng, q=args.q)
    else:
        need("k", "m")
        land = technological(args.n, args.k, args.m, rng)
    _emit(dumps_ndl(land), args.out)


def cmd_trap(args) -> None:
    land = _plain(_read(args.input))
    _, _, trap_rng = streams(args.seed)
    result = assign_trap(land, TrapParams(args.b, args.r), args.noise, trap_rng, args.anchor)
    _emit(dumps_ndl(result.landscape), args.out)
    if args.networks_csv:
        part = result.partition
        rows = (
            (i, int(part.sizes[i]), float(result.distances[i]), float(result.fitness[i]))
            for i in range(part.count)
        )
        _csv(args.networks_csv, ["network", "size", "distance", "fitness"], rows, args)


def cmd_analyze(args) -> None:
    land = _read(args.input)
    report = args.report
    if report == "degrees":
        if isinstance(land, ExtendedLandscape):
            dist = extended_distribution(land)
        else:
            dist = degree_distribution(land)
        write_distribution(dist, sys.stdout if args.out == "-" else args.out, _header(args))
        return
    land = _plain(land)
    if report == "networks":
        part = partition(land)
        rows = (
            (i, int(part.sizes[i]), float(part.fitness[i]), int(part.members(i)[0]))
            for i in range(part.count)
        )
        _csv(args.out, ["network", "size", "fitness", "first_member"], rows, args)
    elif report == "ranks":
        _csv(args.out, ["rank", "size"], network_size_ranking(land), args)
    elif report == "fdc":
        rep = fdc(land)
        _csv(args.out, ["fdc", "classification", "m", "optima"],
             [(rep.fdc, rep.classification, rep.m, rep.optima_count)], args)
    else:
        sample = land.size if args.sample is None else args.sample
        pairs = fdc_scatter(land, sample, np.random.default_rng(args.seed))
        _csv(args.out, ["distance", "fitness"], pairs, args)


def _mean_degree(land) -> float:
    if isinstance(land, ExtendedLandscape):
        return distribution_stats(extended_distribution(land))[0]
    return distribution_stats(degree_distribution(land))[0]


def cmd_ga(args) -> None:
    params = GaParams(
        population=args.pop, generations=args.gens, mutation_rate=args.mut,
        crossover_rate=args.xover, tournament=args.tour, runs=args.runs,
    )
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    rows = []
    for path in args.inputs:
        land = _read(path)
        rate, half = success_rate(land, params, args.seed, jobs=args.jobs)
        rows.append((path, _mean_degree(land), args.trap, rate, half))
    _csv(args.out, ["landscape", "mean_degree", "trap", "success_rate", "ci_half_width"], rows, args)


def cmd_extend(args) -> None:
    parts = [_read(p) for p in args.inputs]
    _emit(dumps_xndl(extend(*parts)), args.out)


def cmd_convolve(args) -> None:
    d1, d2 = (read_distribution(p) for p in args.inputs)
    out = convolve(d1, d2)
    write_distribution(out, sys.stdout if args.out == "-" else args.out, _header(args))


def cmd_window(args) -> None:
    w = window_distribution(args.p, args.w, args.n)
    write_distribution(w, sys.stdout if args.out == "-" else args.out, _header(args))


COMMANDS = {
    "gen": cmd_gen,
    "ref": cmd_ref,
    "trap": cmd_trap,
    "analyze": cmd_analyze,
    "ga": cmd_ga,
    "extend": cmd_extend,
    "convolve": cmd_convolve,
    "window": cmd_window,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"ndscape {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, OSError) as exc:
        print(f"ndscape {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO
    except (IncompatibleDimensions, FdcUndefined, ValueError) as exc:
        print(f"ndscape {args.command}: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    return 0


if __name__ == "__main__":
    sys.exit(main())
