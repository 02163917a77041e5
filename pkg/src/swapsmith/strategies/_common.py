from __future__ import annotations

from ..graphicality import NotGraphical, erdos_gallai
from ..multigraph import LoopyMultigraph


class StrategyError(RuntimeError):
    """An invariant the constructive argument guarantees did not hold (a bug)."""


def pick(candidates, rng=None):
    """First candidate, or a uniform one when a numpy ``Generator`` is given."""
    if not candidates:
        return None
    if rng is None:
        return candidates[0]
    return candidates[int(rng.integers(len(candidates)))]


def pick_weighted(candidates, weights, rng=None):
    if not candidates:
        return None
    if rng is None:
        return candidates[0]
    total = sum(weights)
    r = int(rng.integers(total))
    for c, w in zip(candidates, weights):
        if r < w:
            return c
        r -= w
    raise AssertionError("unreachable")


def require_graphical(g: LoopyMultigraph) -> None:
    eg = erdos_gallai(g.degree_sequence())
    if not eg:
        raise NotGraphical(f"degree sequence {tuple(g.degree_sequence())} is {eg.describe()}")
