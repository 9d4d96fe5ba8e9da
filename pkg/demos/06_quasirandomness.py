"""Bipartite quasirandomness, the triangle counting lemma, and relative
density of a hypergraph against a triad.
"""

from fractions import Fraction

from unidense import (
    BipartiteGraph,
    TripartiteGraph,
    audit_quasirandom,
    check_counting_lemma,
    relative_density,
    triangle_count,
)
from unidense import builtin, reduced as rd
from unidense.construct import lift_reduced

G = BipartiteGraph.random(12, 12, 0.5, seed=5)
rep = audit_quasirandom(G, Fraction(1, 5), Fraction(1, 2))
print(f"random 12x12 graph at p=1/2: exact max deviation {rep.max_deviation}"
      f" vs delta=1/5 -> {'pass' if rep.ok else 'FAIL'}")
print(f"  worst witness: |A|={len(rep.witness_A)}, |B|={len(rep.witness_B)}")

P = TripartiteGraph.random((10, 10, 10), 0.5, seed=3)
delta = max(
    audit_quasirandom(L, 1, Fraction(1, 2)).max_deviation for L in (P.xy, P.xz, P.yz)
)
dev = check_counting_lemma(P, delta, Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
print(f"triangle count {triangle_count(P)} on 10x10x10 layers;"
      f" normalized deviation {float(dev):+.4f} within 3*delta = {float(3 * delta):.4f}")

# colour classes of a lifted reduced hypergraph are themselves quasirandom
A = rd.from_palette(builtin("tournament"), 4)
lift = lift_reduced(A, 32, seed=11)
cls = lift.coloring.class_graph(0, 1, 0)
rep = audit_quasirandom(cls, Fraction(15, 100), Fraction(1, 2), exact_bits=0, samples=80, seed=1)
print(f"lift colour class (32x32, target density 1/2): sampled max deviation "
      f"{float(rep.max_deviation):.4f} -> {'pass' if rep.ok else 'FAIL'}")

# relative density of the lift against one colour triad
tri = TripartiteGraph(
    (tuple(range(32)), tuple(range(32, 64)), tuple(range(64, 96))),
    lift.coloring.class_graph(0, 1, 0),
    lift.coloring.class_graph(0, 2, 0),
    lift.coloring.class_graph(1, 2, 1),
)
d = relative_density(lift.hypergraph, tri)
print(f"relative density of the lift w.r.t. the (0,0,1) colour triad: {d} "
      f"(0 or 1 by construction: triads are all-or-nothing here: {d in (0, 1)})")
