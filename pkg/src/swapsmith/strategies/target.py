"""The Angel's strategy in the loop-free game with a fixed target graph.

Every move removes the Devil's edge plus one non-incident edge and lowers the
total distance to the target by at least two, so a simple target is reached
after at most ``total_distance / 2`` moves.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..graphicality import realize_degrees
from ..multigraph import LoopyMultigraph, Pair, Swap, SwapTrace, pair
from ._common import StrategyError, pick, require_graphical


class IllegalDevilChoice(ValueError):
    """The Devil picked a pair that is not over-represented relative to the target."""


def _check_comparable(g: LoopyMultigraph, h: LoopyMultigraph) -> None:
    if g.n != h.n or g.degrees() != h.degrees():
        raise ValueError("graphs must share vertex set and degrees")


def total_distance(g: LoopyMultigraph, h: LoopyMultigraph) -> int:
    """Sum over unordered pairs of ``|mult_g - mult_h|``."""
    _check_comparable(g, h)
    keys = {p for p, _ in g.pairs()} | {p for p, _ in h.pairs()}
    return sum(abs(g.multiplicity(*p) - h.multiplicity(*p)) for p in keys)


@dataclass
class Colouring:
    """Blue copies of G-edges and red copies of H-edges around the Devil's pair.

    Starts as the surplus colouring (blue = G's excess over H per pair, red =
    H's excess over G). That colouring is balanced at every vertex because G
    and H have equal degrees, and no pair is both blue and red.
    """

    e_pair: Pair
    blue: Counter = field(default_factory=Counter)
    red: Counter = field(default_factory=Counter)

    @classmethod
    def surplus(cls, g: LoopyMultigraph, h: LoopyMultigraph, e_pair: Pair) -> Colouring:
        c = cls(pair(*e_pair))
        for p in {p for p, _ in g.pairs()} | {p for p, _ in h.pairs()}:
            diff = g.multiplicity(*p) - h.multiplicity(*p)
            if diff > 0:
                c.blue[p] = diff
            elif diff < 0:
                c.red[p] = -diff
        return c

    def coloured_count(self) -> int:
        return sum(self.blue.values()) + sum(self.red.values())

    def blue_partners(self, v: int) -> list[int]:
        return sorted(b if a == v else a for (a, b), k in self.blue.items() if k and v in (a, b))

    def red_partners(self, v: int) -> list[int]:
        return sorted(b if a == v else a for (a, b), k in self.red.items() if k and v in (a, b))

    def check(self) -> None:
        """Raise :class:`StrategyError` if a colouring invariant is broken."""
        if self.blue[self.e_pair] < 1:
            raise StrategyError("devil pair is not blue")
        bal = Counter()
        for (a, b), k in self.blue.items():
            bal[a] += k
            bal[b] += k
        for (a, b), k in self.red.items():
            bal[a] -= k
            bal[b] -= k
        if any(bal.values()):
            raise StrategyError("colouring is unbalanced")
        if any(self.blue[p] and self.red[p] for p in list(self.red)):
            raise StrategyError("a pair carries both colours")

    def uncolour_cycle(self, v1: int, v2: int, u1: int, u2: int) -> None:
        """Uncolour red{v1,v2}, blue{v2,u1}, red{u1,u2}, blue{u2,v1}."""
        for col, p in ((self.red, pair(v1, v2)), (self.blue, pair(v2, u1)),
                       (self.red, pair(u1, u2)), (self.blue, pair(u2, v1))):
            if col[p] < 1:
                raise StrategyError(f"alternating cycle edge {p} is not coloured")
            col[p] -= 1
            if not col[p]:
                del col[p]


def angel_target_step(g: LoopyMultigraph, h: LoopyMultigraph, e_pair, rng=None,
                      stats: dict | None = None) -> tuple[Swap, LoopyMultigraph]:
    """Answer the Devil's pick ``e_pair`` with a distance-reducing swap.

    ``e_pair = (u1, v1)``; the returned swap is ``(u1,v1)(v2,v3)`` or
    ``(v1,u1)(u2,u3)``. Returns the swap and the new graph; ``g`` is untouched.
    If ``stats`` is given, ``stats["uncolourings"]`` counts blocked 4-cycles.
    """
    _check_comparable(g, h)
    if not (g.is_loop_free() and h.is_loop_free()):
        raise ValueError("target game needs loop-free graphs")
    u1, v1 = e_pair
    if u1 == v1 or g.multiplicity(u1, v1) <= h.multiplicity(u1, v1):
        raise IllegalDevilChoice(f"pair {tuple(e_pair)} is not over-represented in G")

    col = Colouring.surplus(g, h, e_pair)
    while True:
        v2 = pick(col.red_partners(v1), rng)
        u2 = pick(col.red_partners(u1), rng)
        if v2 is None or u2 is None:
            raise StrategyError("no red edge at an endpoint of the devil pair")
        v3 = pick(col.blue_partners(v2), rng)
        u3 = pick(col.blue_partners(u2), rng)
        if v3 is None or u3 is None:
            raise StrategyError("red edge without a blue continuation")
        options = []
        if u1 != v3:
            options.append(Swap(u1, v1, v2, v3))
        if v1 != u3:
            options.append(Swap(v1, u1, u2, u3))
        if options:
            s = pick(options, rng)
            out = g.copy()
            out.swap_inplace(s)
            return s, out
        before = col.coloured_count()
        col.uncolour_cycle(v1, v2, u1, u2)
        col.check()
        if col.coloured_count() >= before:
            raise StrategyError("uncolouring did not shrink the colouring")
        if stats is not None:
            stats["uncolourings"] = stats.get("uncolourings", 0) + 1


def simplify_via_target(g: LoopyMultigraph, rng=None, devil=None) -> SwapTrace:
    """Admissible swaps taking a loop-free ``g`` to a simple graph."""
    return run_target(g, rng, devil)[0]


def run_target(g: LoopyMultigraph, rng=None, devil=None, target: LoopyMultigraph | None = None):
    """Play the target game against ``target`` (default: Havel–Hakimi realization).

    ``devil(graph, legal_pairs) -> pair`` picks the multiple edge each move;
    by default the lowest pair, or a uniform one when ``rng`` is given.
    Returns ``(trace, final_graph)``.
    """
    if not g.is_loop_free():
        raise ValueError("graph has loops; eliminate them first")
    require_graphical(g)
    h = target if target is not None else realize_degrees(g.degrees())
    cur = g.copy()
    trace = SwapTrace.start(g)
    budget = total_distance(cur, h) // 2
    while not cur.is_simple():
        legal = cur.multiple_pairs()
        e = devil(cur, legal) if devil is not None else pick(legal, rng)
        s, _ = angel_target_step(cur, h, e, rng)
        trace.record(cur, s)
        if len(trace) > budget:
            raise StrategyError("target strategy exceeded total_distance/2 moves")
    return trace, cur
