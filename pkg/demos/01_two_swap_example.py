"""
The two-swap example
====================

A five-vertex loop-free multigraph with one double edge. Every admissible
swap out of it creates a new multiple edge, yet two swaps make it simple.
"""

import numpy as np

import swapsmith as ss
from swapsmith.oracle import admissible_neighbors, graph_label

g = ss.load_graph("two_swap.graph")
print(ss.format_graph(g))
print("degrees", g.degrees(), "sorted", tuple(g.degree_sequence()))

# every admissible move creates some new multiple edge
for s, h in admissible_neighbors(g):
    new = [p for p, m in h.pairs() if m >= 2 and g.multiplicity(*p) < 2]
    print(tuple(s), "->", graph_label(h), " new multiple:", new)

# the bundled trace does it in two
trace = ss.load_trace("two_swap.trace")
print("replayed:", graph_label(ss.replay(trace, g)))
print("fewest admissible swaps:", ss.min_admissible_swaps(g))

# both strategies, deterministic and seeded
for strategy in ("target", "descent"):
    t, final = ss.simplify(g, strategy)
    print(strategy, [tuple(s) for s in t.swaps], graph_label(final))

lengths = {s: [] for s in ("target", "descent")}
for seed in range(200):
    for s in lengths:
        lengths[s].append(len(ss.simplify(g, s, np.random.default_rng(seed))[0]))
for s, xs in lengths.items():
    print(s, "trace length over 200 seeds: min", min(xs), "mean", np.mean(xs), "max", max(xs))
