from __future__ import annotations

from ..multigraph import LoopyMultigraph, Swap, SwapTrace
from ._common import StrategyError, pick, pick_weighted, require_graphical


def eliminate_loops(g: LoopyMultigraph, rng=None) -> tuple[LoopyMultigraph, SwapTrace]:
    """Swap every loop away against an edge not incident to it.

    Each swap ``(v,v)(a,b)`` turns a loop at ``v`` into edges {v,a}, {b,v}, so
    the loop count strictly drops. For a graphical degree sequence a partner
    edge always exists. Returns the loop-free graph and the trace; ``g`` is not
    modified.
    """
    require_graphical(g)
    cur = g.copy()
    trace = SwapTrace.start(g)
    while True:
        loops = [v for v, _ in cur.loops()]
        if not loops:
            return cur, trace
        v = pick(loops, rng)
        partners = [(p, m) for p, m in cur.pairs() if v not in p]
        if not partners:
            raise StrategyError(f"no edge avoids vertex {v} although the degrees are graphical")
        (a, b) = pick_weighted([p for p, _ in partners], [m for _, m in partners], rng)
        if rng is not None and a != b and rng.integers(2):
            a, b = b, a
        trace.record(cur, Swap(v, v, a, b))
