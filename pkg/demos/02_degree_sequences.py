"""
Graphical degree sequences
==========================

Erdős–Gallai against brute force, and what Havel–Hakimi builds.
"""

import numpy as np

from swapsmith import erdos_gallai, realize_simple, realize_loopfree_multigraph, format_graph
from swapsmith.oracle import degree_sequences, enumerate_graphs

for d in [(4, 4, 3, 3, 2), (3, 3, 1, 1), (3, 2, 2), (8, 5, 3)]:
    print(d, erdos_gallai(d).describe())

print(format_graph(realize_simple((4, 4, 3, 3, 2))))
# a double edge is the best a loop-free graph can do here
print(format_graph(realize_loopfree_multigraph((4, 4, 2))))

# fraction of even-sum sequences that are graphical, by length
for n in range(2, 8):
    seqs = list(degree_sequences(n, 2 * n, min_n=n))
    ok = np.array([bool(erdos_gallai(d)) for d in seqs])
    print(f"n={n}: {ok.sum()}/{ok.size} graphical ({ok.mean():.2f})")

# how many labelled simple graphs per sequence (n = 5)
counts = {d: len(enumerate_graphs(d)) for d in degree_sequences(5, 10, min_n=5) if erdos_gallai(d)}
for d, c in sorted(counts.items(), key=lambda kv: -kv[1])[:8]:
    print(d, c)
