"""
Angel and Devil
===============

Solve small games exhaustively, then pit the constructive Angel against the
Devil that always stretches the game the most.
"""

import numpy as np

from swapsmith import LoopyMultigraph, load_graph
from swapsmith.game import AdversarialDevil, GameSolver, play_loopfree_game, play_loopy_game, distance_bound
from swapsmith.oracle import enumerate_graphs, min_admissible_swaps

g = load_graph("two_swap.graph")
solver = GameSolver("loopfree")
print("optimal game length from the two-swap example:", solver.value(g))
print(play_loopfree_game(g, AdversarialDevil()).to_text())

# a triple edge on two vertices: the Angel has no legal move at all
print(GameSolver("loopfree").value(LoopyMultigraph(2, [(0, 1, 3)])))

# loopy game from a loop next to a triangle
start = LoopyMultigraph(4, [(0, 0), (1, 2), (1, 3), (2, 3)])
print(play_loopy_game(start, AdversarialDevil()).to_text())

# optimal game value vs shortest path vs the strategy's guarantee, d = (3,3,2,2,2)
d = (3, 3, 2, 2, 2)
solver = GameSolver("loopfree")
rows = []
for h in enumerate_graphs(d, "loop-free"):
    rows.append((min_admissible_swaps(h), solver.value(h), distance_bound(h),
                 len(play_loopfree_game(h, AdversarialDevil(solvers={"loopfree": solver})).moves)))
rows = np.array(rows, dtype=float)
print("graphs:", len(rows))
print("columns: shortest path, game value, distance/2, strategy vs adversary")
print("means ", rows.mean(axis=0).round(2))
print("maxima", rows.max(axis=0))
# the game is never shorter than the shortest path
print(bool((rows[:, 1] >= rows[:, 0]).all()))
