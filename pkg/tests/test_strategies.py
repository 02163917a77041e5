from __future__ import annotations

import numpy as np
import pytest
from _gen import random_cycle_sequence, random_graphical_loopfree, random_loopfree_pair

from swapsmith.graphicality import NotGraphical, erdos_gallai, realize_degrees
from swapsmith.multigraph import LoopyMultigraph, Swap, pair, replay_with_flags
from swapsmith.strategies import (
    Colouring,
    CycleSequenceError,
    DescentContext,
    IllegalDevilChoice,
    StrategyError,
    angel_target_step,
    cycle_swap,
    descent_step,
    eliminate_loops,
    graph_less,
    graph_order_key,
    simplify,
    simplify_via_descent,
    simplify_via_target,
    total_distance,
    vertex_ranks,
)


def check_trace(g, trace, final):
    replayed, flags = replay_with_flags(trace, g)
    assert replayed == final and final.is_simple()
    assert all(flags) and trace.all_admissible()
    assert final.degrees() == g.degrees()


# -- loops ----------------------------------------------------------------

def test_eliminate_loops_triangle_plus_loop():
    g = LoopyMultigraph(4, [(0, 0), (1, 2), (1, 3), (2, 3)])
    h, trace = eliminate_loops(g)
    assert len(trace) == 1 and h.is_loop_free() and h.degrees() == g.degrees()
    assert trace.swaps[0] == Swap(0, 0, 1, 2)


def test_eliminate_loops_noop_and_error(two_swap):
    h, trace = eliminate_loops(two_swap)
    assert h == two_swap and len(trace) == 0
    with pytest.raises(NotGraphical):
        eliminate_loops(LoopyMultigraph(2, [(0, 0), (1, 1)]))


def test_eliminate_loops_random_mode(rng):
    g = LoopyMultigraph(5, [(0, 0, 2), (1, 1), (2, 3), (3, 4), (2, 4), (1, 2)])
    for _ in range(50):
        h, trace = eliminate_loops(g, rng)
        assert h.is_loop_free() and trace.all_admissible()
        counts = [g.loop_count()]
        cur = g.copy()
        for s in trace.swaps:
            cur.swap_inplace(s)
            counts.append(cur.loop_count())
        assert all(a > b for a, b in zip(counts, counts[1:]))


# -- target game -------------------------------------------------------------

def test_total_distance_examples():
    g = LoopyMultigraph(4, [(0, 1, 2), (2, 3)])
    h = LoopyMultigraph(4, [(0, 1), (0, 2), (1, 3)])
    assert total_distance(g, h) == 4 and total_distance(g, g) == 0
    g2 = g.copy()
    g2.swap_inplace(Swap(0, 1, 3, 2))
    assert total_distance(g, g2) in (0, 2, 4)
    with pytest.raises(ValueError):
        total_distance(g, LoopyMultigraph(4, [(0, 1)]))


def test_angel_step_hand_example():
    g = LoopyMultigraph(5, [(1, 2, 2), (3, 4)])
    h = LoopyMultigraph(5, [(1, 2), (1, 3), (2, 4)])
    s, g2 = angel_target_step(g, h, (1, 2))
    assert s == Swap(1, 2, 4, 3) and g2 == h
    assert total_distance(g, h) == 4 and total_distance(g2, h) == 0


def test_angel_step_illegal_pick():
    g = LoopyMultigraph(4, [(0, 1), (2, 3)])
    with pytest.raises(IllegalDevilChoice):
        angel_target_step(g, g, (0, 1))
    with pytest.raises(ValueError):
        angel_target_step(g, LoopyMultigraph(4, [(0, 2), (1, 3), (0, 1)]), (0, 1))


def test_surplus_colouring_invariants(rng):
    for _ in range(200):
        g, h = random_loopfree_pair(rng)
        for e in [p for p, _ in g.pairs() if g.multiplicity(*p) > h.multiplicity(*p)]:
            col = Colouring.surplus(g, h, e)
            col.check()
            assert col.coloured_count() == total_distance(g, h)


def test_angel_step_random_pairs(rng):
    stats = {}
    for _ in range(500):
        g, h = random_loopfree_pair(rng)
        legal = [p for p, _ in g.pairs() if g.multiplicity(*p) > h.multiplicity(*p)]
        e = legal[int(rng.integers(len(legal)))]
        s, g2 = angel_target_step(g, h, e, rng, stats)
        (a, b), (c, d) = s.removed
        assert pair(a, b) == e and not {a, b} & {c, d}
        assert total_distance(g2, h) <= total_distance(g, h) - 2
        assert g2.is_loop_free()
    assert stats.get("uncolourings", 0) > 0


def test_uncolouring_happens_and_is_sound():
    # both candidate swaps blocked: v3 = u1 and u3 = v1
    g = LoopyMultigraph(4, [(0, 1, 2), (2, 3, 2)])
    h = LoopyMultigraph(4, [(0, 2), (1, 2), (0, 3), (1, 3)])
    stats = {}
    s, g2 = angel_target_step(g, h, (0, 1), stats=stats)
    assert total_distance(g2, h) <= total_distance(g, h) - 2
    assert stats.get("uncolourings", 0) >= 0


def test_simplify_via_target(two_swap):
    trace = simplify_via_target(two_swap)
    h = realize_degrees(two_swap.degrees())
    assert len(trace) <= total_distance(two_swap, h) // 2 <= 8
    trace2, final = simplify(two_swap, "target")
    check_trace(two_swap, trace2, final)
    simple = LoopyMultigraph(3, [(0, 1), (1, 2)])
    assert len(simplify_via_target(simple)) == 0
    g = LoopyMultigraph(4, [(0, 1, 2), (2, 3)])
    t, final = simplify(g, "target")
    assert len(t) <= 2
    check_trace(g, t, final)
    with pytest.raises(ValueError):
        simplify_via_target(LoopyMultigraph(4, [(0, 0), (1, 2), (1, 3), (2, 3)]))


# -- descent ---------------------------------------------------------------------

def test_vertex_order_respects_degrees(two_swap):
    rank = vertex_ranks(two_swap.degrees())
    d = two_swap.degrees()
    assert all(rank[u] < rank[v] for u in range(5) for v in range(5) if d[u] < d[v])
    ctx = DescentContext.of(two_swap)
    assert {ctx.u1, ctx.u2} == {2, 3} and ctx.rank[ctx.u1] > ctx.rank[ctx.u2]
    assert ctx.small | ctx.large == ctx.ordinary and ctx.ell == len(ctx.L)
    assert ctx.V1 | ctx.V1bar == ctx.ordinary and not ctx.V1 & ctx.V1bar


def test_cycle_swap_base_case():
    g = LoopyMultigraph(5, [(1, 4, 2), (2, 3)])
    trace, h = cycle_swap(g, (1, 2, 3, 4))
    assert trace.swaps == [Swap(1, 4, 3, 2)]
    assert h == LoopyMultigraph(5, [(1, 4), (3, 4), (1, 2)])


def test_cycle_swap_rejects_bad_sequences():
    g = LoopyMultigraph(5, [(1, 4, 2), (2, 3)])
    for seq in [(1, 2, 3, 2, 3, 4), (1, 2, 1, 4), (1, 2, 2, 4), (1, 3, 0, 4), (1, 2, 3)]:
        with pytest.raises(CycleSequenceError):
            cycle_swap(g, seq)
    with pytest.raises(CycleSequenceError):
        cycle_swap(LoopyMultigraph(5, [(1, 4), (2, 3)]), (1, 2, 3, 4))
    assert g == LoopyMultigraph(5, [(1, 4, 2), (2, 3)])


def test_cycle_swap_random(rng):
    for _ in range(500):
        g, seq = random_cycle_sequence(rng)
        trace, h = cycle_swap(g, seq)
        m = len(seq) // 2
        odd = {pair(seq[2 * j], seq[2 * j + 1]) for j in range(m)}
        assert h.multiplicity(seq[0], seq[-1]) == g.multiplicity(seq[0], seq[-1]) - 1
        assert trace.all_admissible() and h.degrees() == g.degrees()
        newly = set(h.non_simple_pairs()) - set(g.non_simple_pairs())
        assert newly <= odd


def test_descent_step_examples(two_swap):
    trace, h = descent_step(two_swap)
    assert graph_less(h, two_swap) and trace.all_admissible()
    assert graph_order_key(two_swap) == ((4, 3), 2)
    with pytest.raises(NotGraphical):
        descent_step(LoopyMultigraph(2, [(0, 1, 3)]))
    assert not erdos_gallai((3, 3))
    with pytest.raises(ValueError):
        descent_step(LoopyMultigraph(3, [(0, 1), (1, 2)]))


def test_descent_not_graphical_matches_eg(rng):
    # random loop-free multigraphs: a failed step must come with an EG failure
    for _ in range(400):
        n = int(rng.integers(2, 7))
        g = LoopyMultigraph(n)
        for _ in range(int(rng.integers(2, 10))):
            u, v = rng.choice(n, size=2, replace=False)
            g.add_edge(int(u), int(v))
        if g.is_simple():
            continue
        try:
            _, h = descent_step(g)
        except NotGraphical:
            assert not erdos_gallai(g.degree_sequence())
        else:
            assert graph_less(h, g)


def test_simplify_via_descent(two_swap):
    trace = simplify_via_descent(two_swap)
    check_trace(two_swap, trace, simplify(two_swap, "descent")[1])
    heavy = LoopyMultigraph(3, [(0, 0, 2), (0, 1, 3), (0, 2, 1), (1, 2, 2)])
    with pytest.raises(NotGraphical):
        simplify_via_descent(heavy)


@pytest.mark.parametrize("strategy", ["target", "descent"])
def test_random_loopy_graphs_simplify(strategy):
    rng = np.random.default_rng(99)
    done = 0
    while done < 300:
        n = int(rng.integers(2, 9))
        g = LoopyMultigraph(n)
        for _ in range(int(rng.integers(1, 14))):
            u, v = (int(x) for x in rng.integers(n, size=2))
            g.add_edge(u, v)
        if not erdos_gallai(g.degree_sequence()):
            continue
        for r in (None, rng):
            trace, final = simplify(g, strategy, r)
            check_trace(g, trace, final)
        done += 1


def test_unknown_strategy(two_swap):
    with pytest.raises(ValueError):
        simplify(two_swap, "greedy")


def test_strategy_error_is_runtime_error():
    assert issubclass(StrategyError, RuntimeError)


def test_random_graphical_generator(rng):
    g, h = random_graphical_loopfree(rng)
    assert h.is_simple() and g.degrees() == h.degrees()


def test_sweep_up_to_six_vertices():
    from swapsmith.oracle import degree_sequences, verify_sequence

    bad = []
    for d in degree_sequences(6, 16):
        bad.extend(verify_sequence(d, check_min=False).violations)
    assert bad == []
