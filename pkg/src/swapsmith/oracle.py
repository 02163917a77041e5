"""Brute-force ground truth: enumeration, swap-distance BFS and exhaustive sweeps.

Nothing here calls into the strategies except :func:`sweep_verify`, which
checks the strategies against these independent answers.
"""

from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import dataclass, field
from functools import partial

from .graphicality import NotGraphical, erdos_gallai, realize_simple
from .multigraph import LoopyMultigraph, Swap, is_admissible, is_incident, replay_with_flags
from .parallel import ordered_map

CLASSES = ("simple", "loop-free", "loopy")
DEFAULT_STATE_CAP = 10**6


class StateSpaceExceeded(RuntimeError):
    pass


def enumerate_graphs(d, cls: str = "simple", max_n: int = 12, max_sum: int = 40) -> list[LoopyMultigraph]:
    """Every labelled graph of class ``cls`` in which vertex i has degree ``d[i]``.

    Pairs are assigned multiplicities in lexicographic order with residual
    degree pruning. ``d`` may be any degree vector; a weakly decreasing
    sequence is the usual input.
    """
    return list(iter_graphs(d, cls, max_n, max_sum))


def iter_graphs(d, cls: str = "simple", max_n: int = 12, max_sum: int = 40):
    if cls not in CLASSES:
        raise ValueError(f"unknown graph class {cls!r}")
    d = [int(x) for x in d]
    if any(x < 0 for x in d):
        raise ValueError("negative degree")
    n, total = len(d), sum(d)
    if n > max_n or total > max_sum:
        raise StateSpaceExceeded(f"instance n={n}, sum={total} exceeds caps n<={max_n}, sum<={max_sum}")
    if total % 2:
        raise ValueError("odd degree sum")
    simple = cls == "simple"
    loops_ok = cls == "loopy"
    res = list(d)
    mult = {}

    def fill(i, j):
        while i < n and res[i] == 0:
            i, j = i + 1, i + 1
        if i == n:
            yield LoopyMultigraph(n, ((u, v, m) for (u, v), m in mult.items()))
            return
        if j == i:
            top = res[i] // 2 if loops_ok else 0
            for m in range(top, -1, -1):
                res[i] -= 2 * m
                if m:
                    mult[(i, i)] = m
                yield from fill(i, i + 1)
                mult.pop((i, i), None)
                res[i] += 2 * m
            return
        if j >= n:
            return
        room = sum(min(1, res[k]) if simple else res[k] for k in range(j, n))
        if room < res[i]:
            return
        hi = min(res[i], res[j], 1 if simple else res[j])
        for m in range(hi, -1, -1):
            res[i] -= m
            res[j] -= m
            if m:
                mult[(i, j)] = m
            if res[i]:
                yield from fill(i, j + 1)
            else:
                yield from fill(i + 1, i + 1)
            mult.pop((i, j), None)
            res[i] += m
            res[j] += m

    yield from fill(0, 0)


def has_simple_realization(d) -> bool:
    return next(iter_graphs(d, "simple", max_n=64, max_sum=10**6), None) is not None


# -- transitions ----------------------------------------------------------

def _swap_candidates(g: LoopyMultigraph, allow_same_pair: bool):
    entries = list(g.pairs())
    for i, (e, me) in enumerate(entries):
        start = i if allow_same_pair and me >= 2 else i + 1
        for e2, _ in entries[start:]:
            a, b = e
            c, d = e2
            yield e, e2, Swap(a, b, c, d)
            if c != d:
                yield e, e2, Swap(a, b, d, c)


def admissible_neighbors(g: LoopyMultigraph, admissible=is_admissible) -> list[tuple[Swap, LoopyMultigraph]]:
    """Distinct successors under admissible swaps, one witness swap each.

    ``admissible`` may be replaced (e.g. by a deliberately broken predicate
    in mutation tests).
    """
    seen = {}
    key0 = g.key()
    for e, e2, s in _swap_candidates(g, allow_same_pair=True):
        if not admissible(g, e, e2):
            continue
        h = g.copy()
        h.swap_inplace(s)
        k = h.key()
        if k != key0 and k not in seen:
            seen[k] = (s, h)
    return list(seen.values())


def any_swap_neighbors(g: LoopyMultigraph) -> list[tuple[Swap, LoopyMultigraph]]:
    """Distinct successors under every double edge swap, admissible or not."""
    return admissible_neighbors(g, admissible=lambda g, e, e2: True)


def _neighbors_fn(admissible_only: bool, admissible=is_admissible):
    if admissible_only:
        return partial(admissible_neighbors, admissible=admissible)
    return any_swap_neighbors


def min_admissible_swaps(g: LoopyMultigraph, cap: int = DEFAULT_STATE_CAP,
                         admissible_only: bool = True) -> int | None:
    """Fewest swaps from ``g`` to any simple graph; ``None`` if unreachable.

    Breadth-first search over labelled states. With ``admissible_only=False``
    every double edge swap counts as a move.
    """
    if g.is_simple():
        return 0
    step = _neighbors_fn(admissible_only)
    seen = {g.key()}
    frontier = deque([(g, 0)])
    while frontier:
        cur, dist = frontier.popleft()
        for _, h in step(cur):
            k = h.key()
            if k in seen:
                continue
            if h.is_simple():
                return dist + 1
            seen.add(k)
            if len(seen) > cap:
                raise StateSpaceExceeded(f"more than {cap} states")
            frontier.append((h, dist + 1))
    return None


def swap_distances(degrees, cap: int = DEFAULT_STATE_CAP, admissible=is_admissible) -> dict:
    """Distance to simplicity for every loopy multigraph with these degrees.

    Keys are state keys; unreachable states are absent. Computed by one
    backwards BFS from all simple graphs over the admissible-swap relation.
    """
    graphs = list(iter_graphs(degrees, "loopy", max_n=64, max_sum=10**6))
    if len(graphs) > cap:
        raise StateSpaceExceeded(f"{len(graphs)} states exceed cap {cap}")
    preds: dict = {}
    for g in graphs:
        k = g.key()
        for _, h in admissible_neighbors(g, admissible):
            preds.setdefault(h.key(), []).append(k)
    dist = {g.key(): 0 for g in graphs if g.is_simple()}
    queue = deque(dist)
    while queue:
        k = queue.popleft()
        for p in preds.get(k, ()):
            if p not in dist:
                dist[p] = dist[k] + 1
                queue.append(p)
    return dist


# -- sweeps ----------------------------------------------------------------

def degree_sequences(max_n: int, max_sum: int, min_n: int = 1):
    """Weakly decreasing sequences of length ``min_n..max_n`` with even sum <= ``max_sum``."""
    def rec(prefix, n, cap, left):
        if len(prefix) == n:
            if sum(prefix) % 2 == 0:
                yield tuple(prefix)
            return
        for x in range(min(cap, left), -1, -1):
            yield from rec(prefix + [x], n, x, left - x)

    for n in range(min_n, max_n + 1):
        yield from rec([], n, max_sum, max_sum)


def graph_label(g: LoopyMultigraph) -> str:
    return ";".join(f"{u}-{v}" + (f"x{m}" if m > 1 else "") for (u, v), m in g.pairs()) or "empty"


@dataclass
class Report:
    rows: list = field(default_factory=list)  # (sequence, graph, check, ok, detail)

    def add(self, seq, graph, check, ok, detail=""):
        self.rows.append((seq, graph, check, bool(ok), detail))

    def extend(self, other: Report) -> None:
        self.rows.extend(other.rows)

    @property
    def violations(self) -> list:
        return [r for r in self.rows if not r[3]]

    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        out = []
        for seq, graph, check, ok, detail in self.rows:
            line = f"{'OK' if ok else 'FAIL'} {','.join(map(str, seq))} {graph} {check}"
            out.append(line + (f" {detail}" if detail else ""))
        return "\n".join(out) + ("\n" if out else "")

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["sequence", "graph", "check", "status", "detail"])
        for seq, graph, check, ok, detail in self.rows:
            w.writerow([",".join(map(str, seq)), graph, check, "OK" if ok else "FAIL", detail])
        return buf.getvalue()


def _check_trace(g, strategy, admissible):
    from .strategies import simplify

    try:
        trace, final = simplify(g, strategy)
    except Exception as exc:  # any failure is report content
        return False, f"{type(exc).__name__}: {exc}", None
    replayed, _ = replay_with_flags(trace, g)
    flags = []
    cur = g.copy()
    for s in trace.swaps:
        a, b = s.removed
        flags.append(cur.multiplicity(*a) > 0 and cur.multiplicity(*b) > 0 and admissible(cur, a, b))
        cur.swap_inplace(s)
    problems = []
    if replayed != final or not replayed.is_simple():
        problems.append("final graph not simple")
    if not all(flags):
        problems.append(f"inadmissible step {flags.index(False)}")
    if replayed.degrees() != g.degrees():
        problems.append("degrees changed")
    return not problems, "; ".join(problems) or f"len={len(trace)}", len(trace)


def verify_sequence(seq, admissible=is_admissible, strategies=("target", "descent"),
                    check_min: bool = True) -> Report:
    """All sweep checks for one degree sequence."""
    rep = Report()
    eg = bool(erdos_gallai(seq))
    exists = has_simple_realization(seq)
    try:
        realize_simple(seq)
        realized = True
    except NotGraphical:
        realized = False
    rep.add(seq, "-", "eg-realizability", eg == exists == realized,
            f"eg={eg} enum={exists} realize={realized}")
    if not eg:
        return rep
    dist = swap_distances(seq, admissible=admissible) if check_min else None
    for g in iter_graphs(seq, "loopy", max_n=64, max_sum=10**6):
        label = graph_label(g)
        loops = g.loop_count()
        bad = [s for s, h in admissible_neighbors(g, admissible) if h.loop_count() > loops]
        rep.add(seq, label, "no-new-loops", not bad, f"swap {tuple(bad[0])}" if bad else "")
        lengths = []
        for strategy in strategies:
            ok, detail, length = _check_trace(g, strategy, admissible)
            rep.add(seq, label, strategy, ok, detail)
            lengths.append(length)
        if dist is not None:
            d = dist.get(g.key())
            ok = d is not None and all(x is None or d <= x for x in lengths)
            rep.add(seq, label, "minswaps", ok, f"min={d}")
    return rep


def sweep_verify(max_n: int = 5, max_sum: int = 12, admissible=is_admissible,
                 strategies=("target", "descent"), workers: int | None = None) -> Report:
    """Run every cross-check on each degree sequence within the caps."""
    seqs = list(degree_sequences(max_n, max_sum))
    fn = partial(verify_sequence, admissible=admissible, strategies=strategies)
    report = Report()
    for part in ordered_map(fn, seqs, workers):
        report.extend(part)
    return report


def broken_admissible(g, e, e2) -> bool:
    """Mutant predicate with the incidence check removed (for mutation tests)."""
    me, me2 = g.multiplicity(*e), g.multiplicity(*e2)
    if me == 0 or me2 == 0:
        raise ValueError("absent edge")
    if e == e2 and me < 2:
        return False
    return e[0] == e[1] or me >= 2 or e2[0] == e2[1] or me2 >= 2


__all__ = [
    "CLASSES", "Report", "StateSpaceExceeded", "admissible_neighbors", "any_swap_neighbors",
    "broken_admissible", "degree_sequences", "enumerate_graphs", "graph_label",
    "has_simple_realization", "iter_graphs", "is_incident", "min_admissible_swaps",
    "swap_distances", "sweep_verify", "verify_sequence",
]
