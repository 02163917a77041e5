"""Constructive swap strategies that make loopy multigraphs simple."""

from ._common import StrategyError
from .descent import (
    CycleSequenceError,
    DescentContext,
    check_cycle_sequence,
    cycle_swap,
    descent_step,
    graph_less,
    graph_order_key,
    pair_key,
    run_descent,
    simplify_via_descent,
    vertex_ranks,
)
from .loops import eliminate_loops
from .target import (
    Colouring,
    IllegalDevilChoice,
    angel_target_step,
    run_target,
    simplify_via_target,
    total_distance,
)

STRATEGIES = ("target", "descent")


def simplify(g, strategy="target", rng=None, devil=None):
    """Make ``g`` simple; returns ``(trace, final_graph)``.

    ``target`` removes loops first and then plays the target game against a
    Havel–Hakimi realization; ``descent`` removes loops and then descends.
    """
    if strategy == "target":
        cur, trace = eliminate_loops(g, rng)
        rest, final = run_target(cur, rng, devil)
        trace.extend(rest)
        return trace, final
    if strategy == "descent":
        return run_descent(g, rng)
    raise ValueError(f"unknown strategy {strategy!r}")


__all__ = [
    "STRATEGIES", "Colouring", "CycleSequenceError", "DescentContext", "IllegalDevilChoice",
    "StrategyError", "angel_target_step", "check_cycle_sequence", "cycle_swap", "descent_step",
    "eliminate_loops", "graph_less", "graph_order_key", "pair_key", "run_descent", "run_target",
    "simplify", "simplify_via_descent", "simplify_via_target", "total_distance", "vertex_ranks",
]
