from __future__ import annotations

import math

import numpy as np
import pytest

from swapsmith.game import (
    AdversarialDevil,
    GameSolver,
    MaxMultiplicityDevil,
    RandomDevil,
    ScriptedDevil,
    StrategyAssertionFailed,
    distance_bound,
    legal_picks,
    make_devil,
    play_game,
    play_loopfree_game,
    play_loopy_game,
    solve_game_exhaustive,
)
from swapsmith.graphicality import NotGraphical
from swapsmith.multigraph import LoopyMultigraph, replay
from swapsmith.formats import parse_trace
from swapsmith.oracle import StateSpaceExceeded
from swapsmith.strategies import IllegalDevilChoice


def test_solver_examples(two_swap):
    assert solve_game_exhaustive(two_swap, "loopfree")
    assert solve_game_exhaustive(two_swap, "loopy")
    assert not solve_game_exhaustive(LoopyMultigraph(2, [(0, 1, 3)]), "loopfree")
    assert GameSolver().value(LoopyMultigraph(3, [(0, 1)])) == 0
    assert GameSolver("loopy").value(LoopyMultigraph(2, [(0, 0), (1, 1)])) == math.inf
    with pytest.raises(StateSpaceExceeded):
        GameSolver("loopfree", cap=2).value(two_swap)
    with pytest.raises(ValueError):
        GameSolver("loopfree").value(LoopyMultigraph(2, [(0, 0), (1, 1)]))


def test_solver_value_is_minimax(two_swap):
    solver = GameSolver("loopfree")
    v = solver.value(two_swap)
    assert v == max(solver.option_value(two_swap, e) for e in legal_picks(two_swap, "loopfree"))


def test_loopfree_game_two_swap(two_swap):
    rec = play_loopfree_game(two_swap, make_devil("first"))
    assert rec.angel_won and rec.final.is_simple()
    assert len(rec.moves) <= distance_bound(two_swap)
    assert replay(parse_trace(rec.to_text()), two_swap) == rec.final
    for (_, s) in rec.moves:
        (a, b), (c, d) = s.removed
        assert not {a, b} & {c, d}


def test_simple_start_needs_no_moves():
    rec = play_loopfree_game(LoopyMultigraph(3, [(0, 1), (1, 2)]))
    assert rec.angel_won and rec.moves == []


def test_loopy_game_examples():
    g = LoopyMultigraph(4, [(0, 0), (1, 2), (1, 3), (2, 3)])
    for kind in ("first", "max", "random", "adversarial"):
        rec = play_loopy_game(g, make_devil(kind, seed=3))
        assert rec.angel_won
        first_pick, first_swap = rec.moves[0]
        assert first_pick == (0, 0)
        after = g.copy()
        after.swap_inplace(first_swap)
        assert after.loop_count() == 0
    with pytest.raises(NotGraphical):
        play_loopy_game(LoopyMultigraph(3, [(0, 0, 2), (0, 1, 3), (0, 2, 1), (1, 2, 2)]))


def test_loopy_matches_loopfree_on_loopfree_input(two_swap):
    a = play_loopfree_game(two_swap, make_devil("max"))
    b = play_loopy_game(two_swap, make_devil("max"))
    assert a.moves == b.moves


def test_devil_policies(two_swap):
    legal = legal_picks(two_swap, "loopfree")
    assert MaxMultiplicityDevil().pick(two_swap, legal, "loopfree") == (2, 3)
    d1, d2 = RandomDevil(5), RandomDevil(5)
    assert [d1.pick(two_swap, legal, "loopfree") for _ in range(5)] == [d2.pick(two_swap, legal, "loopfree") for _ in range(5)]
    s = ScriptedDevil([(3, 2)])
    assert s.pick(two_swap, legal, "loopfree") == (2, 3)
    assert s.pick(two_swap, legal, "loopfree") == legal[0]
    with pytest.raises(IllegalDevilChoice):
        ScriptedDevil([(0, 1)]).pick(two_swap, legal, "loopfree")
    with pytest.raises(ValueError):
        make_devil("nice")


def test_adversarial_devil_maximizes(two_swap):
    dev = AdversarialDevil()
    legal = legal_picks(two_swap, "loopfree")
    e = dev.pick(two_swap, legal, "loopfree")
    solver = dev.solver("loopfree")
    assert solver.option_value(two_swap, e) == solver.value(two_swap)


def test_move_ceiling_aborts(two_swap):
    rec = play_loopfree_game(two_swap, ceiling=1)
    assert rec.outcome == "aborted" and "ceiling" in rec.reason
    assert rec.to_text().rstrip().endswith("move ceiling 1 reached")


def test_random_devils_against_strategies():
    rng = np.random.default_rng(11)
    played = 0
    while played < 200:
        n = int(rng.integers(3, 7))
        g = LoopyMultigraph(n)
        for _ in range(int(rng.integers(2, 10))):
            u, v = (int(x) for x in rng.integers(n, size=2))
            g.add_edge(u, v)
        if g.is_simple() or not g.degree_sequence().is_graphical():
            continue
        dev = RandomDevil(int(rng.integers(1 << 30)))
        rec = play_game(g, dev)
        assert rec.angel_won
        assert replay(parse_trace(rec.to_text()), g) == rec.final
        if g.is_loop_free():
            assert len(rec.moves) <= distance_bound(g)
        played += 1


def test_strategy_assertion_failed_is_runtime_error():
    assert issubclass(StrategyAssertionFailed, RuntimeError)


def test_loopy_fallback_never_fails_up_to_five_vertices():
    from swapsmith.graphicality import erdos_gallai
    from swapsmith.oracle import degree_sequences, iter_graphs

    for seq in degree_sequences(5, 20):
        if not erdos_gallai(seq):
            continue
        graphs = list(iter_graphs(seq, "loopy", max_n=64, max_sum=10**6))
        solver = GameSolver("loopy")
        solver.add_roots(graphs)
        for g in graphs:
            assert solver.angel_wins(g)
            for devil in (AdversarialDevil(solvers={"loopy": solver}), make_devil("max")):
                assert play_loopy_game(g, devil).angel_won
