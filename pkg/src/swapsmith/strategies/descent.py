"""Ordered descent: make a loop-free multigraph smaller in a degree-based order.

Vertices are ranked by (degree, index). A pair {a, b} is compared by its
higher-ranked endpoint first, then its lower one. A non-simple graph's order
key is (its largest non-simple pair, that pair's multiplicity); simple graphs
sit below everything. Each :func:`descent_step` strictly lowers the key using
one of three swap patterns anchored at the largest non-simple pair {u1, u2}.
When none applies, the degree sequence fails the Erdős–Gallai test.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graphicality import NotGraphical, erdos_gallai
from ..multigraph import LoopyMultigraph, Pair, Swap, SwapTrace, pair
from ._common import StrategyError, pick, require_graphical
from .loops import eliminate_loops


class CycleSequenceError(ValueError):
    pass


def vertex_ranks(degrees) -> list[int]:
    """``rank[v]``: position of v when sorted by (degree, index) ascending."""
    order = sorted(range(len(degrees)), key=lambda v: (degrees[v], v))
    rank = [0] * len(degrees)
    for r, v in enumerate(order):
        rank[v] = r
    return rank


def pair_key(p: Pair, rank) -> tuple[int, int]:
    ra, rb = rank[p[0]], rank[p[1]]
    return (ra, rb) if ra >= rb else (rb, ra)


def graph_order_key(g: LoopyMultigraph, rank=None):
    """``None`` for simple graphs, else (key of max non-simple pair, multiplicity)."""
    if rank is None:
        rank = vertex_ranks(g.degrees())
    ns = g.non_simple_pairs()
    if not ns:
        return None
    top = max(ns, key=lambda p: pair_key(p, rank))
    return pair_key(top, rank), g.multiplicity(*top)


def graph_less(g: LoopyMultigraph, h: LoopyMultigraph, rank=None) -> bool:
    """Strict order: ``g < h``. Both graphs must have the same degrees."""
    if rank is None:
        rank = vertex_ranks(g.degrees())
    kg, kh = graph_order_key(g, rank), graph_order_key(h, rank)
    if kh is None:
        return False
    return kg is None or kg < kh


@dataclass
class DescentContext:
    """Vocabulary around the maximal non-simple pair {u1, u2}, u1 ranked above u2."""

    rank: list
    u1: int
    u2: int
    adj: list  # distinct neighbour sets
    ordinary: frozenset
    small: frozenset
    large: frozenset
    V1: frozenset
    V1bar: frozenset
    V2: frozenset
    V2bar: frozenset

    @property
    def L(self) -> frozenset:
        return self.large

    @property
    def ell(self) -> int:
        return len(self.large)

    @classmethod
    def of(cls, g: LoopyMultigraph) -> DescentContext:
        rank = vertex_ranks(g.degrees())
        top = max(g.multiple_pairs(), key=lambda p: pair_key(p, rank))
        u1, u2 = top if rank[top[0]] > rank[top[1]] else (top[1], top[0])
        adj = [g.neighbors(v) for v in range(g.n)]
        ordinary = frozenset(range(g.n)) - {u1, u2}
        return cls(
            rank=rank, u1=u1, u2=u2, adj=adj, ordinary=ordinary,
            small=frozenset(v for v in ordinary if rank[v] < rank[u1]),
            large=frozenset(v for v in ordinary if rank[v] > rank[u1]),
            V1=frozenset(v for v in ordinary if v in adj[u1]),
            V1bar=frozenset(v for v in ordinary if v not in adj[u1]),
            V2=frozenset(v for v in ordinary if v in adj[u2]),
            V2bar=frozenset(v for v in ordinary if v not in adj[u2]),
        )


# -- cycle swaps ------------------------------------------------------------

def check_cycle_sequence(g: LoopyMultigraph, seq) -> None:
    """Validate conditions (a)-(d) for ``v1..v2m``; raise :class:`CycleSequenceError`."""
    seq = list(seq)
    if len(seq) < 4 or len(seq) % 2:
        raise CycleSequenceError("need an even-length sequence with m >= 2")
    if any(not 0 <= v < g.n for v in seq):
        raise CycleSequenceError("vertex out of range")
    if not g.is_loop_free():
        raise CycleSequenceError("graph must be loop-free")
    if seq[0] in seq[1:]:
        raise CycleSequenceError("(a) first vertex repeats")
    steps = [pair(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]
    if any(a == b for a, b in steps):
        raise CycleSequenceError("(b) consecutive vertices coincide")
    closing = pair(seq[0], seq[-1])
    if len(set(steps)) != len(steps) or closing in steps:
        raise CycleSequenceError("(b) consecutive pairs are not all distinct")
    for i in range(1, len(seq) - 1, 2):
        if g.multiplicity(seq[i], seq[i + 1]) < 1:
            raise CycleSequenceError(f"(c) no edge {pair(seq[i], seq[i + 1])}")
    if g.multiplicity(*closing) < 2:
        raise CycleSequenceError(f"(d) {closing} is not a multiple edge")


def cycle_swap(g: LoopyMultigraph, seq) -> tuple[SwapTrace, LoopyMultigraph]:
    """Lower the multiplicity of {v1, v2m} by one with admissible swaps.

    Works from the far end: ``(v1,v_2k)(v_2k-1,v_2k-2)`` and then continues
    with ``k - 1`` only while the freshly added {v1, v_2k-2} is a multiple edge
    outside the odd pairs {v_2j-1, v_2j}. New non-simple pairs can only be odd
    pairs that were already present.
    """
    check_cycle_sequence(g, seq)
    v = [None] + list(seq)  # 1-based
    m = len(seq) // 2
    odd_pairs = {pair(v[2 * j - 1], v[2 * j]) for j in range(1, m + 1)}
    cur = g.copy()
    trace = SwapTrace.start(g)
    k = m
    while True:
        trace.record(cur, Swap(v[1], v[2 * k], v[2 * k - 1], v[2 * k - 2]))
        back = pair(v[1], v[2 * k - 2])
        if cur.multiplicity(*back) >= 2 and back not in odd_pairs:
            if k <= 2:
                raise StrategyError("cycle swap recursion ran past its base case")
            k -= 1
            continue
        return trace, cur


# -- descent patterns --------------------------------------------------------

def _edge_patterns(g, ctx):
    """Single swap (u1,u2)(y,x) for an edge {x,y}, x without an edge to u1."""
    u1, u2 = ctx.u1, ctx.u2
    for (a, b), _ in g.pairs():
        if a == b:
            continue
        for x, y in ((a, b), (b, a)):
            if x in ctx.V1bar and y in ctx.ordinary and (y in ctx.small or y in ctx.V2bar):
                yield ("edge", Swap(u1, u2, y, x))


def _large_patterns(g, ctx):
    """Ordinary v1 next to small v2 but missing a large v3; v4 joins v3 outside N(u1)."""
    u1, u2, adj = ctx.u1, ctx.u2, ctx.adj
    for v1 in sorted(ctx.ordinary):
        for v2 in sorted(adj[v1] & ctx.small):
            for v3 in sorted(ctx.large - adj[v1] - {v1}):
                for v4 in sorted(adj[v3] & ctx.V1bar):
                    yield ("large", (u1, v4, v3, v1, v2, u2))


def _small_patterns(g, ctx):
    """Small edge {w1,w2} and isolated-from-small x in V2 ranked below u2."""
    u1, u2, adj, rank = ctx.u1, ctx.u2, ctx.adj, ctx.rank
    xs = sorted(x for x in ctx.small & ctx.V2 if not adj[x] & ctx.small and rank[x] < rank[u2])
    if not xs:
        return
    for w1 in sorted(ctx.small):
        for w2 in sorted(adj[w1] & ctx.small):
            for x in xs:
                yield ("small", (u1, x, u2, w1, w2, u2))


PATTERNS = (_edge_patterns, _large_patterns, _small_patterns)


def find_pattern(g: LoopyMultigraph, ctx: DescentContext, rng=None):
    """First applicable pattern as ``(kind, swap_or_sequence)``, or ``None``."""
    for gen in PATTERNS:
        if rng is None:
            hit = next(gen(g, ctx), None)
        else:
            hit = pick(list(gen(g, ctx)), rng)
        if hit is not None:
            return hit
    return None


def descent_step(g: LoopyMultigraph, rng=None) -> tuple[SwapTrace, LoopyMultigraph]:
    """Transform a non-simple loop-free ``g`` into a strictly smaller graph."""
    if not g.is_loop_free():
        raise ValueError("descent needs a loop-free graph")
    if g.is_simple():
        raise ValueError("graph is already simple")
    ctx = DescentContext.of(g)
    hit = find_pattern(g, ctx, rng)
    if hit is None:
        d = g.degree_sequence()
        if erdos_gallai(d):
            raise StrategyError(f"no descent pattern although {tuple(d)} is graphical")
        raise NotGraphical(f"degree sequence {tuple(d)} is not graphical")
    kind, what = hit
    if kind == "edge":
        cur = g.copy()
        trace = SwapTrace.start(g)
        trace.record(cur, what)
    else:
        trace, cur = cycle_swap(g, what)
    if not graph_less(cur, g, ctx.rank):
        raise StrategyError(f"{kind} pattern did not descend")
    return trace, cur


def simplify_via_descent(g: LoopyMultigraph, rng=None) -> SwapTrace:
    """Admissible swaps taking ``g`` (loops allowed) to a simple graph."""
    return run_descent(g, rng)[0]


def run_descent(g: LoopyMultigraph, rng=None):
    require_graphical(g)
    cur, trace = eliminate_loops(g, rng)
    while not cur.is_simple():
        step, cur = descent_step(cur, rng)
        trace.extend(step)
    return trace, cur
