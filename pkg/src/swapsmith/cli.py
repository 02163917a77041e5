"""Command-line interface: ``swapsmith <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (non-graphical degrees,
unreachable simple graph, bad trace, failed sweep) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import secrets
import sys
from pathlib import Path

import numpy as np

from . import formats
from .game import DEVILS, VARIANTS, GameSolver, make_devil, play_loopfree_game, play_loopy_game
from .graphicality import DegreeSequence, NotGraphical, erdos_gallai, realize_loopfree_multigraph, realize_simple
from .multigraph import FingerprintMismatch, LoopyMultigraph, ReplayError, replay_with_flags
from .oracle import StateSpaceExceeded, graph_label, min_admissible_swaps, sweep_verify
from .sampling import BudgetExhausted, graph_counts, sample_batch, sample_configuration_model, spawn_seeds
from .strategies import STRATEGIES, StrategyError, simplify


class DomainError(Exception):
    pass


class UsageError(Exception):
    pass


def _seq(text: str) -> DegreeSequence:
    try:
        return DegreeSequence.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pairs(text: str) -> list:
    """``"0-1,2-3"`` -> ``[(0, 1), (2, 3)]``."""
    out = []
    for tok in filter(None, text.split(",")):
        try:
            u, v = tok.split("-")
            out.append((int(u), int(v)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad pair {tok!r}, expected u-v") from None
    return out


def _caps(text: str) -> dict:
    caps = {"n": 5, "sum": 12}
    for tok in filter(None, text.split(",")):
        key, _, val = tok.partition("=")
        if key not in caps or not val.isdigit():
            raise argparse.ArgumentTypeError(f"bad cap {tok!r}, expected n=<int> or sum=<int>")
        caps[key] = int(val)
    return caps


def _seed_value(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= s < 2**64:
        raise argparse.ArgumentTypeError("seed must be in [0, 2**64)")
    return s


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="swapsmith", description="Make loopy multigraphs simple with admissible double edge swaps.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="Erdős–Gallai test for a degree sequence")
    c.add_argument("degrees", type=_seq)

    c = sub.add_parser("realize", help="write a graph with the given degrees")
    c.add_argument("degrees", type=_seq)
    c.add_argument("--loopfree", action="store_true", help="allow multiple edges (loop-free multigraph)")
    c.add_argument("--out")

    c = sub.add_parser("simplify", help="simplify a graph file, printing the swap trace")
    c.add_argument("graph")
    c.add_argument("--strategy", choices=STRATEGIES, default="target")
    c.add_argument("--seed", type=_seed_value, help="seeded-random picks (default: lowest candidate)")
    c.add_argument("--out", help="trace file (default: stdout)")
    c.add_argument("--final", help="file for the final graph (default: stdout when --out is given)")

    c = sub.add_parser("minswaps", help="fewest admissible swaps to a simple graph (BFS)")
    c.add_argument("graph")
    c.add_argument("--any-swaps", action="store_true", help="allow inadmissible swaps too")
    c.add_argument("--cap", type=int, default=10**6)

    c = sub.add_parser("game", help="play the Angel strategy against a Devil policy")
    c.add_argument("graph")
    c.add_argument("--devil", choices=DEVILS, default="first")
    c.add_argument("--variant", choices=VARIANTS, help="default: loopfree for loop-free graphs, else loopy")
    c.add_argument("--script", type=_pairs, default=[], help="picks for --devil scripted, e.g. 2-3,1-2")
    c.add_argument("--seed", type=_seed_value)
    c.add_argument("--out")

    c = sub.add_parser("solve", help="decide the game exhaustively")
    c.add_argument("graph")
    c.add_argument("--variant", choices=VARIANTS)
    c.add_argument("--cap", type=int, default=10**6)

    c = sub.add_parser("sample", help="draw random graphs with the given degrees")
    c.add_argument("degrees", type=_seq)
    c.add_argument("--model", choices=("config", "switched", "rejection"), default="switched")
    c.add_argument("--strategy", choices=STRATEGIES, default="target")
    c.add_argument("--count", type=int, default=1)
    c.add_argument("--seed", type=_seed_value)
    c.add_argument("--max-attempts", type=int, default=10_000)
    c.add_argument("--out", help="sample stream file (default: stdout)")
    c.add_argument("--trace-dir", help="write sample-k.start.graph and sample-k.trace here (switched model)")
    c.add_argument("--stats", help="also write per-graph counts as CSV")

    c = sub.add_parser("verify", help="replay a trace or game record against its starting graph")
    c.add_argument("graph")
    c.add_argument("trace")

    c = sub.add_parser("sweep", help="exhaustive cross-checks over small degree sequences")
    c.add_argument("--caps", type=_caps, default=_caps(""), help="e.g. n=5,sum=12")
    c.add_argument("--csv", help="also write the report as CSV")
    c.add_argument("--out", help="report file (default: stdout)")
    c.add_argument("--failures-only", action="store_true")

    c = sub.add_parser("stats", help="count samples per graph in a sample stream (CSV)")
    c.add_argument("stream")
    c.add_argument("--out")
    return p


def _emit(text: str, path, out) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _seed(args, out):
    if args.seed is not None:
        return args.seed
    seed = secrets.randbits(64)
    out.write(f"# seed {seed}\n")
    return seed


def _read_graph(path):
    try:
        return formats.read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_check(args, out):
    res = erdos_gallai(args.degrees)
    out.write(res.describe() + "\n")
    return 0 if res else 1


def cmd_realize(args, out):
    if args.loopfree:
        g = realize_loopfree_multigraph(args.degrees)
    else:
        g = realize_simple(args.degrees)
    _emit(formats.format_graph(g), args.out, out)
    return 0


def cmd_simplify(args, out):
    g = _read_graph(args.graph)
    rng = None if args.seed is None else np.random.default_rng(args.seed)
    trace, final = simplify(g, args.strategy, rng)
    _emit(formats.format_trace(trace), args.out, out)
    if args.final:
        formats.write_graph(args.final, final)
    elif args.out:
        out.write(formats.format_graph(final))
    return 0


def cmd_minswaps(args, out):
    g = _read_graph(args.graph)
    d = min_admissible_swaps(g, cap=args.cap, admissible_only=not args.any_swaps)
    if d is None:
        out.write("unreachable\n")
        return 1
    out.write(f"{d}\n")
    return 0


def cmd_game(args, out):
    g = _read_graph(args.graph)
    variant = args.variant or ("loopfree" if g.is_loop_free() else "loopy")
    seed = _seed(args, out) if args.devil == "random" else args.seed
    devil = make_devil(args.devil, seed=seed, script=args.script)
    rng = None if args.seed is None else np.random.default_rng(args.seed)
    play = play_loopfree_game if variant == "loopfree" else play_loopy_game
    record = play(g, devil, rng)
    _emit(record.to_text(), args.out, out)
    return 0 if record.angel_won else 1


def cmd_solve(args, out):
    g = _read_graph(args.graph)
    variant = args.variant or ("loopfree" if g.is_loop_free() else "loopy")
    v = GameSolver(variant, args.cap).value(g)
    out.write("devil-wins\n" if v == math.inf else f"angel-wins {int(v)}\n")
    return 0


def cmd_sample(args, out):
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    seed = _seed(args, out)
    draws = sample_batch(args.degrees, args.count, seed, args.model, args.strategy, args.max_attempts)
    graphs = [g for g, _ in draws]
    _emit(formats.format_sample_stream(graphs), args.out, out)
    if args.trace_dir and args.model == "switched":
        d = Path(args.trace_dir)
        d.mkdir(parents=True, exist_ok=True)
        for k, (g, trace) in enumerate(draws):
            start = _start_graph(args.degrees, seed, k)
            formats.write_graph(d / f"sample-{k}.start.graph", start)
            formats.write_trace(d / f"sample-{k}.trace", trace)
    if args.stats:
        Path(args.stats).write_text(_stats_csv(graphs), encoding="utf-8")
    return 0


def _start_graph(d, seed, k):
    """Configuration-model draw that sample ``k`` of a switched batch started from."""
    return sample_configuration_model(d, np.random.default_rng(spawn_seeds(seed, k + 1)[k]))


def _stats_csv(graphs) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["graph", "count"])
    for key, cnt in sorted(graph_counts(graphs).items()):
        w.writerow([graph_label(LoopyMultigraph.from_key(key)), cnt])
    return buf.getvalue()


def cmd_verify(args, out):
    g = _read_graph(args.graph)
    try:
        trace = formats.read_trace(args.trace)
    except OSError as exc:
        raise UsageError(f"cannot read {args.trace}: {exc.strerror}") from None
    final, flags = replay_with_flags(trace, g)
    if not all(flags):
        raise DomainError(f"step {flags.index(False)} is not an admissible swap")
    if not final.is_simple():
        raise DomainError("trace does not end in a simple graph")
    out.write(f"ok {len(trace)} swaps\n")
    return 0


def cmd_sweep(args, out):
    report = sweep_verify(args.caps["n"], args.caps["sum"])
    text = report.to_text()
    if args.failures_only:
        text = "".join(line + "\n" for line in text.splitlines() if line.startswith("FAIL"))
    _emit(text, args.out, out)
    if args.csv:
        Path(args.csv).write_text(report.to_csv(), encoding="utf-8")
    out.write(f"# {len(report.rows)} checks, {len(report.violations)} failures\n")
    return 0 if report.ok() else 1


def cmd_stats(args, out):
    try:
        text = Path(args.stream).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.stream}: {exc.strerror}") from None
    _emit(_stats_csv(formats.parse_sample_stream(text)), args.out, out)
    return 0


COMMANDS = {
    "check": cmd_check, "realize": cmd_realize, "simplify": cmd_simplify, "minswaps": cmd_minswaps,
    "game": cmd_game, "solve": cmd_solve, "sample": cmd_sample, "verify": cmd_verify,
    "sweep": cmd_sweep, "stats": cmd_stats,
}

DOMAIN_ERRORS = (NotGraphical, BudgetExhausted, StrategyError, StateSpaceExceeded, FingerprintMismatch,
                 ReplayError, formats.FormatError, DomainError, ValueError, RuntimeError)


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"swapsmith: error: {exc}\n")
        return 2
    except DOMAIN_ERRORS as exc:
        err.write(f"swapsmith: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
