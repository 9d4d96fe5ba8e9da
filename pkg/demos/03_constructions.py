"""Seeded probabilistic constructions and their defining properties.

Both classic examples are pattern hypergraphs: the tournament construction
keeps cyclic orientation patterns, the colour-disagreement construction keeps
patterns whose first two coordinates differ.
"""

from unidense import hypergraph as hg
from unidense import roedl_hypergraph, tournament_hypergraph
from unidense.construct import tournament_hypergraph_direct

n, seed = 50, 2026

T = tournament_hypergraph(n, seed)
print(f"tournament n={n} seed={seed}: {T.edge_count} edges, density {float(T.density()):.4f}")
print(f"  contains K4-: {hg.contains_clique4_minus(T)}   (provably never)")
direct = tournament_hypergraph_direct(n, seed)
print(f"  independent cyclic-triangle oracle agrees edge-for-edge: {T == direct}")

R = roedl_hypergraph(n, seed)
print(f"disagreement n={n} seed={seed}: {R.edge_count} edges, density {float(R.density()):.4f}")
print(f"  contains K4: {hg.contains_clique4(R)}   (provably never)")

print()
print("density across seeds (expect ~1/4 and ~1/2):")
for s in range(5):
    t = tournament_hypergraph(n, s).density()
    r = roedl_hypergraph(n, s).density()
    print(f"  seed {s}: tournament {float(t):.4f}   disagreement {float(r):.4f}")
