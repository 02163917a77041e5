from __future__ import annotations

import pytest

from swapsmith.graphicality import erdos_gallai
from swapsmith.multigraph import LoopyMultigraph, Swap
from swapsmith.oracle import (
    StateSpaceExceeded,
    admissible_neighbors,
    any_swap_neighbors,
    broken_admissible,
    degree_sequences,
    enumerate_graphs,
    min_admissible_swaps,
    swap_distances,
    sweep_verify,
    verify_sequence,
)


def test_enumeration_examples():
    two = enumerate_graphs((2, 2, 1, 1))
    assert len(two) == 2 and all(g.is_simple() for g in two)
    assert len(enumerate_graphs((1, 1, 1, 1))) == 3
    assert enumerate_graphs((2, 2)) == []
    assert enumerate_graphs((3, 3), "loop-free") == [LoopyMultigraph(2, [(0, 1, 3)])]
    assert len(enumerate_graphs((2, 2), "loopy")) == 2
    with pytest.raises(ValueError):
        enumerate_graphs((1, 1, 1))
    with pytest.raises(StateSpaceExceeded):
        enumerate_graphs((1,) * 14)


def test_enumeration_is_complete_and_distinct():
    # loopy graphs on 3 vertices with degrees (2,2,2): count by hand = 5
    # triangle; loop at each vertex + double edge on the other two (3); three loops
    gs = enumerate_graphs((2, 2, 2), "loopy")
    assert len(gs) == 5 and len({g.key() for g in gs}) == 5
    assert all(g.degrees() == [2, 2, 2] for g in gs)


def test_enumeration_nonempty_iff_eg():
    for d in degree_sequences(5, 12):
        assert bool(enumerate_graphs(d)) == bool(erdos_gallai(d))


def test_min_swaps_examples(two_swap):
    assert min_admissible_swaps(two_swap) == 2
    assert min_admissible_swaps(LoopyMultigraph(3, [(0, 1)])) == 0
    assert min_admissible_swaps(LoopyMultigraph(2, [(0, 0), (1, 1)])) is None
    with pytest.raises(StateSpaceExceeded):
        min_admissible_swaps(two_swap, cap=3)


def test_min_swaps_zero_iff_simple():
    for g in enumerate_graphs((3, 2, 2, 1), "loopy"):
        assert (min_admissible_swaps(g) == 0) == g.is_simple()


def test_inadmissible_swaps_never_needed_more():
    # allowing every swap can only shorten the road
    for g in enumerate_graphs((3, 2, 2, 1), "loopy"):
        a = min_admissible_swaps(g)
        b = min_admissible_swaps(g, admissible_only=False)
        assert b is not None and (a is None or b <= a)


def test_neighbors_examples(two_swap):
    nbrs = admissible_neighbors(two_swap)
    assert nbrs
    for s, h in nbrs:
        assert any(h.multiplicity(*p) >= 2 and two_swap.multiplicity(*p) < 2 for p, _ in h.pairs())
    assert admissible_neighbors(LoopyMultigraph(3, [(0, 1), (1, 2)])) == []
    two_loops = LoopyMultigraph(2, [(0, 0), (1, 1)])
    nb = admissible_neighbors(two_loops)
    assert len(nb) == 1 and nb[0][1] == LoopyMultigraph(2, [(0, 1, 2)])
    assert len(any_swap_neighbors(two_loops)) == 1


def test_swap_distances_match_bfs():
    dist = swap_distances((2, 2, 2, 2))
    for g in enumerate_graphs((2, 2, 2, 2), "loopy"):
        assert dist.get(g.key()) == min_admissible_swaps(g)


def test_sweep_small_and_trivial():
    rep = sweep_verify(4, 8, workers=1)
    assert rep.ok() and rep.rows
    assert sweep_verify(1, 0, workers=1).violations == []
    text = rep.to_text()
    assert text.startswith("OK ") and "FAIL" not in text
    assert rep.to_csv().splitlines()[0] == "sequence,graph,check,status,detail"


def test_mutant_is_caught():
    rep = sweep_verify(4, 8, admissible=broken_admissible, workers=1)
    assert any(r[2] == "no-new-loops" for r in rep.violations)
    assert "FAIL" in rep.to_text()


def test_verify_sequence_reports_non_graphical():
    rep = verify_sequence((2, 2))
    assert rep.ok() and [r[2] for r in rep.rows] == ["eg-realizability"]


def test_witness_swaps_are_real(two_swap):
    for s, h in admissible_neighbors(two_swap):
        g = two_swap.copy()
        g.swap_inplace(Swap(*s))
        assert g == h
