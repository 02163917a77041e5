"""Loopy multigraphs as plain values, double edge swaps and swap traces.

Vertices are dense indices ``0..n-1``. An unordered pair ``{u, v}`` is stored
as the tuple ``(min, max)``; ``(v, v)`` is a loop. Pairs of multiplicity zero
are never stored, so two graphs are equal exactly when their multiplicity maps
are equal.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

Pair = tuple[int, int]


def pair(u: int, v: int) -> Pair:
    """Canonical form of the unordered pair {u, v}."""
    return (u, v) if u <= v else (v, u)


class EdgeClass(enum.Enum):
    LOOP = "loop"
    MULTIPLE = "multiple"
    SIMPLE = "simple"


class IllegalSwap(ValueError):
    """A swap names an edge copy the graph does not have."""


class Swap(NamedTuple):
    """The double edge swap ``(v1,v2)(v3,v4)``.

    Removes one edge of type {v1,v2} and one of type {v3,v4}, then adds one
    edge of type {v2,v3} and one of type {v4,v1}.
    """

    v1: int
    v2: int
    v3: int
    v4: int

    @property
    def removed(self) -> tuple[Pair, Pair]:
        return pair(self.v1, self.v2), pair(self.v3, self.v4)

    @property
    def added(self) -> tuple[Pair, Pair]:
        return pair(self.v2, self.v3), pair(self.v4, self.v1)

    def reverse(self) -> Swap:
        """The swap undoing this one."""
        return Swap(self.v2, self.v3, self.v4, self.v1)


class LoopyMultigraph:
    """Undirected multigraph on vertices ``0..n-1`` with loops allowed."""

    __slots__ = ("n", "_mult", "_deg")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self._mult: dict[Pair, int] = {}
        self._deg = [0] * n
        for e in edges:
            if len(e) == 3:
                u, v, m = e
            else:
                (u, v), m = e, 1
            self.add_edge(u, v, m)

    @classmethod
    def from_multiplicities(cls, n: int, mult: dict) -> LoopyMultigraph:
        return cls(n, ((u, v, m) for (u, v), m in mult.items() if m))

    def copy(self) -> LoopyMultigraph:
        g = LoopyMultigraph.__new__(LoopyMultigraph)
        g.n = self.n
        g._mult = dict(self._mult)
        g._deg = list(self._deg)
        return g

    # -- queries ---------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get(pair(u, v), 0)

    def degree(self, v: int) -> int:
        """Stub count at ``v``; each loop contributes two."""
        self._check_vertex(v)
        return self._deg[v]

    def degrees(self) -> list[int]:
        """Degree of every vertex, in vertex order."""
        return list(self._deg)

    def degree_sequence(self):
        from .graphicality import DegreeSequence

        return DegreeSequence(sorted(self._deg, reverse=True))

    def pairs(self) -> Iterator[tuple[Pair, int]]:
        """Nonzero (pair, multiplicity) entries in lexicographic pair order."""
        return iter(sorted(self._mult.items()))

    def edge_count(self) -> int:
        return sum(self._mult.values())

    def loop_count(self) -> int:
        return sum(m for (u, v), m in self._mult.items() if u == v)

    def loops(self) -> list[tuple[int, int]]:
        """(vertex, loop multiplicity) for every vertex carrying a loop."""
        return sorted((u, m) for (u, v), m in self._mult.items() if u == v)

    def non_simple_pairs(self) -> list[Pair]:
        return sorted(p for p, m in self._mult.items() if p[0] == p[1] or m >= 2)

    def multiple_pairs(self) -> list[Pair]:
        """Non-loop pairs with multiplicity at least two."""
        return sorted(p for p, m in self._mult.items() if p[0] != p[1] and m >= 2)

    def classify(self, u: int, v: int) -> EdgeClass | None:
        self._check_vertex(u)
        self._check_vertex(v)
        m = self.multiplicity(u, v)
        if m == 0:
            return None
        if u == v:
            return EdgeClass.LOOP
        return EdgeClass.MULTIPLE if m >= 2 else EdgeClass.SIMPLE

    def is_simple(self) -> bool:
        return all(u != v and m == 1 for (u, v), m in self._mult.items())

    def is_loop_free(self) -> bool:
        return all(u != v for u, v in self._mult)

    def neighbors(self, v: int) -> set[int]:
        """Distinct vertices joined to ``v`` by a non-loop edge."""
        out = set()
        for a, b in self._mult:
            if a == v and b != v:
                out.add(b)
            elif b == v and a != v:
                out.add(a)
        return out

    def without_loops(self) -> LoopyMultigraph:
        g = LoopyMultigraph(self.n)
        for (u, v), m in self._mult.items():
            if u != v:
                g.add_edge(u, v, m)
        return g

    # -- canonical form ----------------------------------------------------

    def key(self) -> tuple:
        """Canonical hashable state key: ``(n, sorted pair multiplicities)``."""
        return (self.n, tuple(sorted((u, v, m) for (u, v), m in self._mult.items())))

    @classmethod
    def from_key(cls, key: tuple) -> LoopyMultigraph:
        n, entries = key
        return cls(n, entries)

    def fingerprint(self) -> str:
        from .formats import format_graph

        return hashlib.sha256(format_graph(self).encode()).hexdigest()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LoopyMultigraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    __hash__ = None  # mutable; hash ``key()`` instead

    def __repr__(self) -> str:
        body = ", ".join(f"{u}-{v}" + (f"x{m}" if m > 1 else "") for (u, v), m in self.pairs())
        return f"LoopyMultigraph(n={self.n}, [{body}])"

    # -- mutation --------------------------------------------------------

    def add_edge(self, u: int, v: int, k: int = 1) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if k < 0:
            raise ValueError("multiplicity increment must be nonnegative")
        if k == 0:
            return
        p = pair(u, v)
        self._mult[p] = self._mult.get(p, 0) + k
        self._deg[u] += k
        self._deg[v] += k

    def remove_edge(self, u: int, v: int, k: int = 1) -> None:
        p = pair(u, v)
        m = self._mult.get(p, 0)
        if m < k:
            raise IllegalSwap(f"graph has {m} edge(s) of type {p}, cannot remove {k}")
        if m == k:
            del self._mult[p]
        else:
            self._mult[p] = m - k
        self._deg[u] -= k
        self._deg[v] -= k

    def swap_inplace(self, s: Swap) -> None:
        """Apply ``s`` to this graph, raising :class:`IllegalSwap` if impossible."""
        for v in s:
            self._check_vertex(v)
        a, b = s.removed
        need = 2 if a == b else 1
        if self._mult.get(a, 0) < need or self._mult.get(b, 0) < 1:
            raise IllegalSwap(f"swap {tuple(s)} needs edges {a} and {b}")
        self.remove_edge(s.v1, s.v2)
        self.remove_edge(s.v3, s.v4)
        self.add_edge(s.v2, s.v3)
        self.add_edge(s.v4, s.v1)


def degree(g: LoopyMultigraph, v: int) -> int:
    return g.degree(v)


def degree_sequence(g: LoopyMultigraph):
    return g.degree_sequence()


def classify(g: LoopyMultigraph, p: Pair) -> EdgeClass | None:
    return g.classify(*p)


def is_incident(e: Pair, e2: Pair) -> bool:
    return bool(set(e) & set(e2))


def is_admissible(g: LoopyMultigraph, e: Pair, e2: Pair) -> bool:
    """Whether edges of types ``e`` and ``e2`` may be swapped admissibly.

    True iff they share no vertex and at least one of them is a loop or a
    multiple edge. Raises ``ValueError`` if either type is absent from ``g``.
    """
    me, me2 = g.multiplicity(*e), g.multiplicity(*e2)
    if me == 0 or me2 == 0:
        raise ValueError(f"edge {e if me == 0 else e2} is absent")
    if is_incident(e, e2):
        return False
    return e[0] == e[1] or me >= 2 or e2[0] == e2[1] or me2 >= 2


def swap_is_admissible(g: LoopyMultigraph, s: Swap) -> bool:
    a, b = s.removed
    try:
        return is_admissible(g, a, b)
    except ValueError:
        return False


def apply_swap(g: LoopyMultigraph, s: Swap) -> LoopyMultigraph:
    """Return a new graph with ``s`` applied; ``g`` is left untouched."""
    out = g.copy()
    out.swap_inplace(s)
    return out


class FingerprintMismatch(ValueError):
    pass


class ReplayError(ValueError):
    """A trace step could not be applied."""

    def __init__(self, index: int, swap: Swap, reason: str):
        super().__init__(f"step {index}: swap {tuple(swap)}: {reason}")
        self.index = index
        self.swap = swap


@dataclass
class SwapTrace:
    """A replayable sequence of swaps anchored to its starting graph."""

    fingerprint: str
    swaps: list[Swap] = field(default_factory=list)
    admissible: list[bool] = field(default_factory=list)

    @classmethod
    def start(cls, g: LoopyMultigraph) -> SwapTrace:
        return cls(g.fingerprint())

    def record(self, g: LoopyMultigraph, s: Swap) -> None:
        """Apply ``s`` to ``g`` in place and append it to the trace."""
        ok = swap_is_admissible(g, s)
        g.swap_inplace(s)
        self.swaps.append(s)
        self.admissible.append(ok)

    def extend(self, other: SwapTrace) -> None:
        self.swaps.extend(other.swaps)
        self.admissible.extend(other.admissible)

    def __len__(self) -> int:
        return len(self.swaps)

    def all_admissible(self) -> bool:
        return all(self.admissible)


def replay(trace: SwapTrace, g: LoopyMultigraph, check_fingerprint: bool = True) -> LoopyMultigraph:
    """Fold the trace's swaps over a copy of ``g``.

    Raises :class:`FingerprintMismatch` if ``g`` is not the graph the trace
    was recorded on, and :class:`ReplayError` carrying the index of the first
    swap that cannot be applied.
    """
    return replay_with_flags(trace, g, check_fingerprint)[0]


def replay_with_flags(trace: SwapTrace, g: LoopyMultigraph, check_fingerprint: bool = True):
    """Like :func:`replay`, also returning recomputed admissibility per step."""
    if check_fingerprint and trace.fingerprint != g.fingerprint():
        raise FingerprintMismatch("trace fingerprint does not match the graph")
    cur = g.copy()
    flags = []
    for i, s in enumerate(trace.swaps):
        flags.append(swap_is_admissible(cur, s))
        try:
            cur.swap_inplace(s)
        except (IllegalSwap, IndexError) as exc:
            raise ReplayError(i, s, str(exc)) from None
    return cur, flags
