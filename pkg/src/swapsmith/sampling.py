"""Configuration-model sampling and the switched simplification pipeline."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .graphicality import NotGraphical, erdos_gallai
from .multigraph import LoopyMultigraph, SwapTrace
from .parallel import ordered_map
from .strategies import eliminate_loops, run_descent, run_target


class BudgetExhausted(RuntimeError):
    """Rejection sampling ran out of attempts."""


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def spawn_seeds(seed, count: int) -> list[np.random.SeedSequence]:
    """One independent stream per sample, derived from a single root seed."""
    return np.random.SeedSequence(seed).spawn(count)


@dataclass(frozen=True)
class StubMatching:
    degrees: tuple
    pairs: tuple  # ((vertex, local index), (vertex, local index)) per edge

    def graph(self) -> LoopyMultigraph:
        return LoopyMultigraph(len(self.degrees), ((a[0], b[0]) for a, b in self.pairs))


def random_matching(d, seed=None) -> StubMatching:
    d = tuple(int(x) for x in d)
    if any(x < 0 for x in d):
        raise ValueError("negative degree")
    if sum(d) % 2:
        raise ValueError("odd degree sum")
    stubs = [(v, i) for v, k in enumerate(d) for i in range(k)]
    order = _rng(seed).permutation(len(stubs))
    pairs = tuple((stubs[order[j]], stubs[order[j + 1]]) for j in range(0, len(stubs), 2))
    return StubMatching(d, pairs)


def sample_configuration_model(d, seed=None) -> LoopyMultigraph:
    """Graph induced by a uniform random matching of all stubs."""
    return random_matching(d, seed).graph()


def sample_switched(d, seed=None, strategy: str = "target", devil=None) -> tuple[LoopyMultigraph, SwapTrace]:
    """Configuration-model draw made simple by seeded-random admissible swaps.

    ``devil(graph, legal_pairs)`` overrides the random multiple-edge pick of
    the target strategy. The trace starts at the configuration-model graph.
    """
    res = erdos_gallai(d)
    if not res:
        raise NotGraphical(res.describe())
    rng = _rng(seed)
    g = sample_configuration_model(d, rng)
    cur, trace = eliminate_loops(g, rng)
    if strategy == "target":
        rest, final = run_target(cur, rng, devil)
    elif strategy == "descent":
        rest, final = run_descent(cur, rng)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    trace.extend(rest)
    return final, trace


def sample_rejection(d, seed=None, max_attempts: int = 10_000) -> LoopyMultigraph:
    """Configuration-model draws until one is simple (exactly uniform)."""
    rng = _rng(seed)
    for _ in range(max_attempts):
        g = sample_configuration_model(d, rng)
        if g.is_simple():
            return g
    raise BudgetExhausted(f"no simple graph in {max_attempts} attempts")


def _draw(args):
    model, d, seq, strategy, max_attempts = args
    rng = np.random.default_rng(seq)
    if model == "config":
        return sample_configuration_model(d, rng), None
    if model == "switched":
        return sample_switched(d, rng, strategy)
    if model == "rejection":
        return sample_rejection(d, rng, max_attempts), None
    raise ValueError(f"unknown model {model!r}")


def sample_batch(d, count: int, seed=None, model: str = "switched", strategy: str = "target",
                 max_attempts: int = 10_000, workers: int | None = None) -> list:
    """``count`` samples as ``(graph, trace_or_None)``, in sample order.

    Each sample gets its own spawned seed stream, so the output does not
    depend on the number of workers.
    """
    if model == "switched":
        res = erdos_gallai(d)
        if not res:
            raise NotGraphical(res.describe())
    jobs = [(model, tuple(d), s, strategy, max_attempts) for s in spawn_seeds(seed, count)]
    return ordered_map(_draw, jobs, workers, chunksize=max(1, count // 64))


def graph_counts(samples) -> Counter:
    return Counter(g.key() for g in samples)


def empirical_tv(samples, reference) -> float:
    """Total variation between the sample frequencies and uniform on ``reference``."""
    ref = {g.key() for g in reference}
    if not ref:
        raise ValueError("reference set is empty")
    counts = graph_counts(samples)
    total = sum(counts.values())
    if total == 0:
        return 1.0
    u = 1 / len(ref)
    return 0.5 * sum(abs(counts.get(k, 0) / total - (u if k in ref else 0.0))
                     for k in ref | set(counts))
