"""Seeded generators for the probabilistic constructions: random pair
colourings, pattern hypergraphs, the tournament and colour-disagreement
hypergraphs, and the lift of a reduced hypergraph to a concrete one.

All randomness flows through numpy's PCG64 so that identical seeds reproduce
identical objects on every platform; the algorithm identifier is recorded in
generated reports.  Generators are single-threaded per seed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .hypergraph import Hypergraph3
from .palette import Palette, PaletteError, WeightedColorSet, roedl_palette, tournament_palette
from .quasirandom import BipartiteGraph
from .reduced import ReducedHypergraph

RNG_ALGORITHM = "numpy-pcg64"


def make_rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def pair_rank(n: int, x: int, y: int) -> int:
    """Rank of the pair (x, y), x < y, in lexicographic order over all pairs."""
    return x * (2 * n - x - 1) // 2 + (y - x - 1)


@dataclass
class PairColoring:
    """Total colouring of all pairs {x, y} of 0..n-1 by colours of a weighted set."""

    n: int
    base: WeightedColorSet
    codes: np.ndarray  # colour indices, length C(n, 2), pair-rank order

    def __post_init__(self):
        want = self.n * (self.n - 1) // 2
        if len(self.codes) != want:
            raise PaletteError(f"expected {want} pair colours, got {len(self.codes)}")
        if len(self.codes) and int(self.codes.max(initial=0)) >= len(self.base.colors):
            raise PaletteError("colour code out of range")

    def code(self, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        return int(self.codes[pair_rank(self.n, x, y)])

    def color(self, x: int, y: int) -> str:
        return self.base.colors[self.code(x, y)]

    def items(self):
        for x, y in itertools.combinations(range(self.n), 2):
            yield (x, y), self.color(x, y)

    @classmethod
    def from_map(cls, n: int, base: WeightedColorSet, mapping) -> "PairColoring":
        codes = np.zeros(n * (n - 1) // 2, dtype=np.int64)
        seen = 0
        for (x, y), color in mapping.items():
            if x > y:
                x, y = y, x
            codes[pair_rank(n, x, y)] = base.index(color)
            seen += 1
        if seen != len(codes):
            raise PaletteError(f"mapping covers {seen} of {len(codes)} pairs")
        return cls(n, base, codes)

    def fraction_of(self, color: str) -> Fraction:
        if len(self.codes) == 0:
            return Fraction(0)
        idx = self.base.index(color)
        return Fraction(int((self.codes == idx).sum()), len(self.codes))


def random_pair_coloring(n: int, base: WeightedColorSet, seed) -> PairColoring:
    """Each pair independently receives colour c with probability weight(c)."""
    if n < 1:
        raise PaletteError(f"need n >= 1, got {n}")
    m = n * (n - 1) // 2
    rng = make_rng(seed)
    u = rng.random(m)
    cum = np.cumsum([float(w) for w in base.weights])
    cum[-1] = 1.0
    codes = np.searchsorted(cum, u, side="right")
    return PairColoring(n, base, np.minimum(codes, len(base.colors) - 1))


def build_H(phi: PairColoring, P: Palette) -> Hypergraph3:
    """Edges are the triples x < y < z whose pair colours, read as
    (smallest pair, outer pair, largest pair), form a palette pattern."""
    for c in phi.base.colors:
        if c not in P.base.colors:
            raise PaletteError(f"colouring colour {c!r} unknown to the palette")
    n = phi.n
    K = len(P.base.colors)
    translate = np.array([P.base.index(c) for c in phi.base.colors], dtype=np.int64)
    codes = translate[phi.codes]
    allowed = np.zeros(K * K * K, dtype=bool)
    for a, b, c in P.pattern_codes():
        allowed[(a * K + b) * K + c] = True
    if n < 3:
        return Hypergraph3(n, [])
    triples = np.array(list(itertools.combinations(range(n), 3)), dtype=np.int64)
    x, y, z = triples[:, 0], triples[:, 1], triples[:, 2]
    c1 = codes[x * (2 * n - x - 1) // 2 + (y - x - 1)]
    c2 = codes[x * (2 * n - x - 1) // 2 + (z - x - 1)]
    c3 = codes[y * (2 * n - y - 1) // 2 + (z - y - 1)]
    mask = allowed[(c1 * K + c2) * K + c3]
    return Hypergraph3(n, (tuple(t) for t in triples[mask]))


def tournament_hypergraph(n: int, seed) -> Hypergraph3:
    """Cyclic-triangle hypergraph of a uniformly random tournament, realized as
    the pattern hypergraph of the two cyclic orientation patterns."""
    if n < 3:
        raise PaletteError(f"need n >= 3, got {n}")
    P = tournament_palette()
    return build_H(random_pair_coloring(n, P.base, seed), P)


def tournament_hypergraph_direct(n: int, seed) -> Hypergraph3:
    """Independent oracle: orient each pair by the same colouring ('fwd' on
    (x, y) means the arc x -> y) and list triples where every vertex beats
    exactly one other."""
    P = tournament_palette()
    phi = random_pair_coloring(n, P.base, seed)
    beats = np.zeros((n, n), dtype=bool)
    for x, y in itertools.combinations(range(n), 2):
        if phi.code(x, y) == 0:  # fwd
            beats[x, y] = True
        else:
            beats[y, x] = True
    edges = []
    for t in itertools.combinations(range(n), 3):
        x, y, z = t
        wins = (
            beats[x, y] + beats[x, z],
            beats[y, x] + beats[y, z],
            beats[z, x] + beats[z, y],
        )
        if wins == (1, 1, 1):
            edges.append(t)
    return Hypergraph3(n, edges)


def roedl_hypergraph(n: int, seed) -> Hypergraph3:
    """Triples x < y < z whose pairs xy and xz received different colours."""
    if n < 3:
        raise PaletteError(f"need n >= 3, got {n}")
    P = roedl_palette(2)
    return build_H(random_pair_coloring(n, P.base, seed), P)


# -- lifting reduced hypergraphs ---------------------------------------------------


@dataclass
class PartitionedColoring:
    """Colouring of the crossing pairs of an equipartition by class vertices.

    Vertex v lives in block v // block_size; the pair of x in block i and y in
    block j (i < j) receives a local vertex of class (i, j).
    """

    block_size: int
    class_sizes: dict
    codes: dict  # (i, j) -> ndarray of shape (h, h): codes[i,j][x%h, y%h]

    @property
    def indices(self) -> tuple:
        return tuple(sorted({i for pair in self.class_sizes for i in pair}))

    @property
    def n(self) -> int:
        return self.block_size * len(self.indices)

    def block(self, v: int) -> int:
        return self.indices[v // self.block_size]

    def color(self, x: int, y: int):
        """(class pair, local vertex) for a crossing pair; None for internal pairs."""
        if x > y:
            x, y = y, x
        h = self.block_size
        i, j = self.block(x), self.block(y)
        if i == j:
            return None
        return (i, j), int(self.codes[(i, j)][x % h, y % h])

    def items(self):
        for x, y in itertools.combinations(range(self.n), 2):
            col = self.color(x, y)
            if col is not None:
                yield (x, y), col

    def class_graph(self, i: int, j: int, local: int) -> BipartiteGraph:
        """Bipartite graph between blocks i and j formed by one colour class."""
        arr = self.codes[(i, j)] == local
        rows = tuple(
            int(sum(1 << y for y in range(arr.shape[1]) if arr[x, y])) for x in range(arr.shape[0])
        )
        return BipartiteGraph(arr.shape[0], arr.shape[1], rows)


def random_partitioned_coloring(A: ReducedHypergraph, h: int, seed) -> PartitionedColoring:
    """Every crossing pair independently receives a uniform vertex of its class."""
    if h < 1:
        raise PaletteError(f"block size must be positive, got {h}")
    rng = make_rng(seed)
    codes = {}
    for pair in sorted(A.class_sizes):
        codes[pair] = rng.integers(0, A.class_sizes[pair], size=(h, h))
    return PartitionedColoring(h, dict(A.class_sizes), codes)


@dataclass
class LiftResult:
    hypergraph: Hypergraph3
    coloring: PartitionedColoring


def lift_hypergraph(A: ReducedHypergraph, pc: PartitionedColoring) -> Hypergraph3:
    """Edges are crossing triples whose three pair colours form a constituent edge."""
    h = pc.block_size
    m = len(A.indices)
    n = h * m
    offset = {idx: t * h for t, idx in enumerate(A.indices)}
    edges = []
    for ijk in sorted(A.constituents):
        i, j, k = ijk
        cons = A.constituents[ijk]
        if not cons:
            continue
        s0, s1, s2 = A.role_sizes(ijk)
        cube = np.zeros((s0, s1, s2), dtype=bool)
        for a, b, c in cons:
            cube[a, b, c] = True
        cij = pc.codes[(i, j)]
        cik = pc.codes[(i, k)]
        cjk = pc.codes[(j, k)]
        mask = cube[
            cij[:, :, None],
            cik[:, None, :],
            cjk[None, :, :],
        ]
        oi, oj, ok = offset[i], offset[j], offset[k]
        for x, y, z in np.argwhere(mask):
            edges.append((oi + int(x), oj + int(y), ok + int(z)))
    return Hypergraph3(n, edges)


def lift_reduced(A: ReducedHypergraph, h: int, seed, coloring: PartitionedColoring | None = None) -> LiftResult:
    """Concrete hypergraph on h*|I| vertices built from a reduced hypergraph.

    Crossing pairs get uniformly random class vertices (or the supplied
    colouring); only crossing triples can become edges.  Quasirandomness of the
    sampled colour classes is audited separately, never enforced by resampling.
    """
    if coloring is None:
        coloring = random_partitioned_coloring(A, h, seed)
    elif coloring.block_size != h or coloring.class_sizes != A.class_sizes:
        raise PaletteError("supplied colouring does not match the reduced hypergraph")
    return LiftResult(lift_hypergraph(A, coloring), coloring)
