"""Degree sequences: the Erdős–Gallai test and simple / loop-free realizations."""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import LoopyMultigraph, pair


class NotGraphical(ValueError):
    """The degree sequence is not realized by any simple graph."""


class InfeasibleDegrees(ValueError):
    """No loop-free multigraph meets the degrees (and caps)."""


class DegreeSequence(tuple):
    """Weakly decreasing tuple of nonnegative integers.

    Unsorted input raises ``ValueError``; it is never silently sorted.
    """

    def __new__(cls, values=()):
        d = tuple(int(x) for x in values)
        if any(x < 0 for x in d):
            raise ValueError(f"negative degree in {d}")
        if any(d[i] < d[i + 1] for i in range(len(d) - 1)):
            raise ValueError(f"degree sequence {d} is not weakly decreasing")
        return super().__new__(cls, d)

    @classmethod
    def parse(cls, text: str) -> DegreeSequence:
        """Parse ``"4,4,3,3,2"``."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(t) for t in text.split(","))

    @property
    def total(self) -> int:
        return sum(self)

    def has_even_sum(self) -> bool:
        return self.total % 2 == 0

    def is_graphical(self) -> bool:
        return erdos_gallai(self).graphical

    def __repr__(self) -> str:
        return f"DegreeSequence({tuple(self)})"


@dataclass(frozen=True)
class EGResult:
    graphical: bool
    reason: str | None = None  # "odd sum" or "inequality"
    k: int | None = None  # first violated k

    def __bool__(self) -> bool:
        return self.graphical

    def describe(self) -> str:
        if self.graphical:
            return "graphical"
        if self.reason == "odd sum":
            return "not graphical: odd sum"
        return f"not graphical: inequality fails at k={self.k}"


def erdos_gallai(d) -> EGResult:
    """Erdős–Gallai test, returning the first violated ``k`` on failure."""
    d = DegreeSequence(d)
    if d.total % 2:
        return EGResult(False, "odd sum")
    n = len(d)
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if lhs > rhs:
            return EGResult(False, "inequality", k)
    return EGResult(True)


def is_graphical_vector(degrees) -> bool:
    """Graphicality of a degree vector in any vertex order."""
    return erdos_gallai(sorted(degrees, reverse=True)).graphical


def realize_degrees(degrees) -> LoopyMultigraph:
    """Havel–Hakimi realization of a vertex-labelled degree vector.

    The vertex with the largest residual degree is joined to the vertices with
    the next largest residuals; ties go to the lowest index.
    """
    degrees = [int(x) for x in degrees]
    n = len(degrees)
    g = LoopyMultigraph(n)
    res = list(degrees)
    while True:
        v = max(range(n), key=lambda i: (res[i], -i), default=None)
        if v is None or res[v] == 0:
            return g
        others = sorted((i for i in range(n) if i != v and res[i] > 0), key=lambda i: (-res[i], i))
        if len(others) < res[v]:
            raise NotGraphical(f"degree vector {tuple(degrees)} is not graphical")
        for u in others[: res[v]]:
            g.add_edge(v, u)
            res[u] -= 1
        res[v] = 0


def realize_simple(d) -> LoopyMultigraph:
    """Deterministic simple graph with degree sequence ``d`` (vertex i gets d[i])."""
    d = DegreeSequence(d)
    if not erdos_gallai(d):
        raise NotGraphical(erdos_gallai(d).describe())
    return realize_degrees(d)


def realize_loopfree_multigraph(d, caps: dict | None = None) -> LoopyMultigraph:
    """Loop-free multigraph with degree vector ``d`` and small multiplicities.

    Tries multiplicity bounds ``M = 1, 2, ...`` and returns the first
    realization found by exhaustive search under ``min(M, caps[pair])``, so the
    maximum multiplicity is as small as possible. ``d`` is taken in vertex
    order; it need not be sorted. Intended for desk-scale vertex counts.
    """
    d = [int(x) for x in d]
    if any(x < 0 for x in d):
        raise ValueError("negative degree")
    caps = {pair(*p): c for p, c in (caps or {}).items()}
    total = sum(d)
    if total % 2:
        raise InfeasibleDegrees("odd degree sum")
    if d and 2 * max(d) > total:
        raise InfeasibleDegrees("largest degree exceeds the sum of the others")
    n = len(d)
    if total == 0:
        return LoopyMultigraph(n)
    for bound in range(1, max(d) + 1):
        mult = _search_caps(d, lambda u, v: min(bound, caps.get((u, v), bound)))
        if mult is not None:
            return LoopyMultigraph.from_multiplicities(n, mult)
    raise InfeasibleDegrees(f"no loop-free multigraph with degrees {tuple(d)} under caps {caps}")


def _search_caps(d, cap):
    """Backtracking over pairs (i, j), i < j; returns a multiplicity map or None."""
    n = len(d)
    res = list(d)
    mult = {}

    def fill(i, j):
        while i < n and res[i] == 0:
            i, j = i + 1, i + 2
        if i >= n:
            return True
        if j >= n:
            return False
        # residual of i must fit into the remaining partners j..n-1
        room = sum(min(cap(i, k), res[k]) for k in range(j, n))
        if room < res[i]:
            return False
        hi = min(cap(i, j), res[i], res[j])
        # the largest first: fills high-residual partners before later ones
        for m in range(hi, -1, -1):
            res[i] -= m
            res[j] -= m
            if m:
                mult[(i, j)] = m
            if fill(i, j + 1) if res[i] else fill(i + 1, i + 2):
                return True
            mult.pop((i, j), None)
            res[i] += m
            res[j] += m
        return False

    return dict(mult) if fill(0, 1) else None
