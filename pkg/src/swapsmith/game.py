"""The Angel/Devil games: exhaustive solving and strategy playouts.

Loop-free game: the Devil names a multiple edge, the Angel swaps it with an
edge not incident to it. Loopy game: the Devil names a loop or a multiple
edge and the Angel may swap it with any other edge. The Angel wins on
reaching a simple graph.
"""

from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .graphicality import InfeasibleDegrees, is_graphical_vector, realize_degrees, realize_loopfree_multigraph
from .multigraph import LoopyMultigraph, Pair, Swap, pair
from .oracle import DEFAULT_STATE_CAP, StateSpaceExceeded
from .strategies import IllegalDevilChoice, angel_target_step, total_distance
from .strategies._common import require_graphical

log = logging.getLogger(__name__)

VARIANTS = ("loopfree", "loopy")
DEVILS = ("first", "max", "random", "scripted", "adversarial")


class StrategyAssertionFailed(RuntimeError):
    """The loopy-game fallback could not build a target for the loop-free part."""


def legal_picks(g: LoopyMultigraph, variant: str) -> list[Pair]:
    if variant == "loopfree":
        return g.multiple_pairs()
    if variant == "loopy":
        return g.non_simple_pairs()
    raise ValueError(f"unknown variant {variant!r}")


def angel_moves(g: LoopyMultigraph, e: Pair, variant: str):
    """Every swap the Angel may answer ``e`` with."""
    a, b = e
    for q, mq in g.pairs():
        if variant == "loopfree":
            if a in q or b in q:
                continue
        elif q == e and mq < 2:
            continue
        c, d = q
        yield Swap(a, b, c, d)
        if c != d:
            yield Swap(a, b, d, c)


# -- exhaustive solver -----------------------------------------------------

class GameSolver:
    """Memoized minimax over labelled states for one game variant.

    ``value(g)`` is the number of moves the Angel needs against a Devil who
    stretches the game as long as possible (0 for simple graphs), or ``inf``
    when the Devil can prevent a win. Computed by retrograde analysis over
    the closure of all explored roots.
    """

    def __init__(self, variant: str = "loopfree", cap: int = DEFAULT_STATE_CAP):
        if variant not in VARIANTS:
            raise ValueError(f"unknown variant {variant!r}")
        self.variant = variant
        self.cap = cap
        self._succ: dict = {}  # state key -> {devil pair: [successor keys]}
        self._value: dict = {}
        self._option: dict = {}  # (state key, devil pair) -> value

    def add_roots(self, graphs) -> None:
        stack = [g for g in graphs if g.key() not in self._succ]
        if not stack:
            return
        for g in stack:
            if self.variant == "loopfree" and not g.is_loop_free():
                raise ValueError("loop-free game needs a loop-free graph")
        while stack:
            g = stack.pop()
            k = g.key()
            if k in self._succ:
                continue
            opts = {}
            if not g.is_simple():
                for e in legal_picks(g, self.variant):
                    succ = []
                    for s in angel_moves(g, e, self.variant):
                        h = g.copy()
                        h.swap_inplace(s)
                        hk = h.key()
                        succ.append(hk)
                        if hk not in self._succ:
                            stack.append(h)
                    opts[e] = sorted(set(succ))
            self._succ[k] = opts
            if len(self._succ) > self.cap:
                raise StateSpaceExceeded(f"game state space exceeds {self.cap} states")
        self._solve()

    def _solve(self) -> None:
        preds: dict = {}
        pending = {}
        for k, opts in self._succ.items():
            pending[k] = len(opts)
            for e, succ in opts.items():
                for hk in succ:
                    preds.setdefault(hk, []).append((k, e))
        value = {k: 0 for k, opts in self._succ.items() if not opts}
        option = {}
        heap = [(0, k) for k in value]
        heapq.heapify(heap)
        while heap:
            v, k = heapq.heappop(heap)
            for sk, e in preds.get(k, ()):
                if (sk, e) in option or sk in value:
                    continue
                option[(sk, e)] = v + 1
                pending[sk] -= 1
                if pending[sk] == 0:
                    value[sk] = v + 1
                    heapq.heappush(heap, (v + 1, sk))
        self._value = value
        self._option = option

    def value(self, g: LoopyMultigraph) -> float:
        self.add_roots([g])
        return self._value.get(g.key(), math.inf)

    def option_value(self, g: LoopyMultigraph, e: Pair) -> float:
        self.add_roots([g])
        return self._option.get((g.key(), pair(*e)), math.inf)

    def angel_wins(self, g: LoopyMultigraph) -> bool:
        return self.value(g) < math.inf

    def __len__(self) -> int:
        return len(self._succ)


def solve_game_exhaustive(g: LoopyMultigraph, variant: str = "loopfree", cap: int = DEFAULT_STATE_CAP) -> bool:
    """True iff the Angel wins from ``g`` under optimal play on both sides."""
    return GameSolver(variant, cap).angel_wins(g)


# -- devil policies ----------------------------------------------------------

class Devil:
    kind = "first"

    def pick(self, g: LoopyMultigraph, legal: list, variant: str) -> Pair:
        return legal[0]


class FirstDevil(Devil):
    """Lowest legal pair in lexicographic order."""


class MaxMultiplicityDevil(Devil):
    kind = "max"

    def pick(self, g, legal, variant):
        return max(legal, key=lambda p: (g.multiplicity(*p), tuple(-x for x in p)))


class RandomDevil(Devil):
    kind = "random"

    def __init__(self, seed=None):
        self.rng = np.random.default_rng(seed)

    def pick(self, g, legal, variant):
        return legal[int(self.rng.integers(len(legal)))]


class ScriptedDevil(Devil):
    """Plays a fixed list of picks, then falls back to the lowest legal pair."""

    kind = "scripted"

    def __init__(self, picks):
        self.picks = [pair(*p) for p in picks]
        self.pos = 0

    def pick(self, g, legal, variant):
        if self.pos >= len(self.picks):
            return legal[0]
        p = self.picks[self.pos]
        self.pos += 1
        if p not in legal:
            raise IllegalDevilChoice(f"scripted pick {p} is not legal here")
        return p


class AdversarialDevil(Devil):
    """Picks the edge that maximizes the optimal remaining game length."""

    kind = "adversarial"

    def __init__(self, cap: int = DEFAULT_STATE_CAP, solvers: dict | None = None):
        self.cap = cap
        self.solvers = {} if solvers is None else solvers

    def solver(self, variant):
        if variant not in self.solvers:
            self.solvers[variant] = GameSolver(variant, self.cap)
        return self.solvers[variant]

    def pick(self, g, legal, variant):
        solver = self.solver(variant)
        best = max(solver.option_value(g, p) for p in legal)
        return next(p for p in legal if solver.option_value(g, p) == best)


def make_devil(kind: str, seed=None, script=None, cap: int = DEFAULT_STATE_CAP) -> Devil:
    if kind == "first":
        return FirstDevil()
    if kind == "max":
        return MaxMultiplicityDevil()
    if kind == "random":
        return RandomDevil(seed)
    if kind == "scripted":
        return ScriptedDevil(script or [])
    if kind == "adversarial":
        return AdversarialDevil(cap)
    raise ValueError(f"unknown devil policy {kind!r}")


# -- playouts ------------------------------------------------------------------

@dataclass
class GameRecord:
    initial: LoopyMultigraph
    variant: str
    moves: list = field(default_factory=list)  # (devil pair, swap)
    outcome: str = "running"  # "angel-wins" or "aborted"
    reason: str = ""
    final: LoopyMultigraph | None = None

    @property
    def angel_won(self) -> bool:
        return self.outcome == "angel-wins"

    @property
    def swaps(self) -> list:
        return [s for _, s in self.moves]

    def to_text(self) -> str:
        out = [f"fingerprint {self.initial.fingerprint()}"]
        for (u, v), s in self.moves:
            out.append(f"devil {u} {v}")
            out.append("swap {} {} {} {}".format(*s))
        out.append(f"outcome {self.outcome}" + (f" {self.reason}" if self.reason else ""))
        return "\n".join(out) + "\n"


def move_ceiling(g: LoopyMultigraph) -> int:
    return max(10, 10 * g.edge_count() ** 2)


def _play(g, variant, devil, angel, ceiling):
    record = GameRecord(g.copy(), variant)
    cur = g.copy()
    ceiling = move_ceiling(g) if ceiling is None else ceiling
    while not cur.is_simple():
        if len(record.moves) >= ceiling:
            record.outcome, record.reason = "aborted", f"move ceiling {ceiling} reached"
            log.error("game aborted after %d moves; the strategy should have terminated", ceiling)
            record.final = cur
            return record
        legal = legal_picks(cur, variant)
        e = pair(*devil.pick(cur, legal, variant))
        if e not in legal:
            raise IllegalDevilChoice(f"devil picked illegal pair {e}")
        s = angel(cur, e)
        cur.swap_inplace(s)
        record.moves.append((e, s))
    record.outcome, record.final = "angel-wins", cur
    return record


def play_loopfree_game(g: LoopyMultigraph, devil: Devil | None = None, rng=None,
                       ceiling: int | None = None) -> GameRecord:
    """Angel plays the target-game step against a Havel–Hakimi target."""
    if not g.is_loop_free():
        raise ValueError("loop-free game needs a loop-free graph")
    require_graphical(g)
    h = realize_degrees(g.degrees())

    def angel(cur, e):
        return angel_target_step(cur, h, e, rng)[0]

    return _play(g, "loopfree", devil or FirstDevil(), angel, ceiling)


class LoopyAngel:
    """Angel for the loopy game built on the loop-free target strategy.

    A loop pick is swapped with the lowest edge avoiding it. A multiple-edge
    pick is swapped with a loop avoiding it if there is one; otherwise the
    Angel plays the target step on the loop-free part. The target is a simple
    realization of the loop-free part's degrees when they are graphical, else
    a loop-free multigraph capped below the current multiplicity of the pick.
    It is kept while the loops stay put and the Devil's pick stays legal.
    """

    def __init__(self, rng=None):
        self.rng = rng
        self.target = None
        self.loop_sig = None
        self.retargets = 0

    def __call__(self, g: LoopyMultigraph, e: Pair) -> Swap:
        a, b = e
        if a == b:
            for q, _ in g.pairs():
                if a not in q:
                    return Swap(a, a, q[0], q[1])
            raise StrategyAssertionFailed(f"no edge avoids the loop at {a}")
        for w, _ in g.loops():
            if w not in e:
                return Swap(a, b, w, w)
        rest = g.without_loops()
        sig = tuple(g.loops())
        if (self.target is None or sig != self.loop_sig
                or rest.multiplicity(a, b) <= self.target.multiplicity(a, b)):
            self.target = self._retarget(rest, e)
            self.loop_sig = sig
            self.retargets += 1
        return angel_target_step(rest, self.target, e, self.rng)[0]

    @staticmethod
    def _retarget(rest: LoopyMultigraph, e: Pair) -> LoopyMultigraph:
        degs = rest.degrees()
        if is_graphical_vector(degs):
            return realize_degrees(degs)
        try:
            return realize_loopfree_multigraph(degs, {e: rest.multiplicity(*e) - 1})
        except InfeasibleDegrees as exc:
            log.warning("StrategyAssertionFailed: %s", exc)
            raise StrategyAssertionFailed(str(exc)) from None


def play_loopy_game(g: LoopyMultigraph, devil: Devil | None = None, rng=None,
                    ceiling: int | None = None) -> GameRecord:
    require_graphical(g)
    return _play(g, "loopy", devil or FirstDevil(), LoopyAngel(rng), ceiling)


def play_game(g: LoopyMultigraph, devil: Devil | None = None, variant: str | None = None, rng=None):
    variant = variant or ("loopfree" if g.is_loop_free() else "loopy")
    if variant == "loopfree":
        return play_loopfree_game(g, devil, rng)
    return play_loopy_game(g, devil, rng)


def distance_bound(g: LoopyMultigraph) -> int:
    """``total_distance(g, H) / 2`` for the Havel–Hakimi target H."""
    return total_distance(g, realize_degrees(g.degrees())) // 2
