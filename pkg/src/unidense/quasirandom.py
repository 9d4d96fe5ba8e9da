"""Bipartite quasirandomness audits, triangle counting over tripartite graphs,
and the relative density of a hypergraph with respect to a triad.

The exact quasirandom audit enumerates one side exhaustively; the worst subset
of the other side is computed analytically per enumerated subset, so the audit
covers every (A, B) pair.  All verdicts use exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .hypergraph import Hypergraph3


class GraphError(ValueError):
    """Malformed bipartite/tripartite graph input."""


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with sides of size nx, ny; rows[x] is a bitmask over Y."""

    nx: int
    ny: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nx:
            raise GraphError("one row bitmask per X vertex required")
        mask = (1 << self.ny) - 1
        if any(r & ~mask for r in self.rows):
            raise GraphError("row bitmask exceeds Y side")

    @classmethod
    def from_edges(cls, nx_: int, ny_: int, edges) -> "BipartiteGraph":
        rows = [0] * nx_
        for x, y in edges:
            if not (0 <= x < nx_ and 0 <= y < ny_):
                raise GraphError(f"edge ({x}, {y}) outside {nx_}x{ny_} sides")
            rows[x] |= 1 << y
        return cls(nx_, ny_, tuple(rows))

    @classmethod
    def random(cls, nx_: int, ny_: int, p: float, seed) -> "BipartiteGraph":
        rng = np.random.Generator(np.random.PCG64(seed))
        m = rng.random((nx_, ny_)) < p
        rows = tuple(int(sum(1 << y for y in range(ny_) if m[x, y])) for x in range(nx_))
        return cls(nx_, ny_, rows)

    @classmethod
    def complete(cls, nx_: int, ny_: int) -> "BipartiteGraph":
        return cls(nx_, ny_, tuple([(1 << ny_) - 1] * nx_))

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def e(self, A, B) -> int:
        """Edges between vertex subsets A of X and B of Y."""
        bmask = 0
        for y in B:
            bmask |= 1 << y
        return sum((self.rows[x] & bmask).bit_count() for x in A)

    def complement(self) -> "BipartiteGraph":
        mask = (1 << self.ny) - 1
        return BipartiteGraph(self.nx, self.ny, tuple(r ^ mask for r in self.rows))

    def transpose(self) -> "BipartiteGraph":
        cols = [0] * self.ny
        for x, r in enumerate(self.rows):
            while r:
                y = (r & -r).bit_length() - 1
                cols[y] |= 1 << x
                r &= r - 1
        return BipartiteGraph(self.ny, self.nx, tuple(cols))


@dataclass
class QuasirandomReport:
    mode: str  # "exact" | "sampled"
    delta: Fraction
    d: Fraction
    ok: bool
    max_deviation: Fraction  # max over audited (A, B) of |e(A,B) - d|A||B|| / (|X||Y|)
    slack: Fraction  # delta - max_deviation; >= 0 iff ok
    witness_A: tuple[int, ...]
    witness_B: tuple[int, ...]
    samples: int | None = None
    seed: int | None = None

    def to_dict(self) -> dict:
        from .io import format_fraction

        return {
            "mode": self.mode,
            "delta": format_fraction(self.delta),
            "d": format_fraction(self.d),
            "ok": self.ok,
            "max_deviation": format_fraction(self.max_deviation),
            "slack": format_fraction(self.slack),
            "witness_A": list(self.witness_A),
            "witness_B": list(self.witness_B),
            "samples": self.samples,
            "seed": self.seed,
        }


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


def _worst_B_for_A(G: BipartiteGraph, counts, a_size: int, d: Fraction):
    """Largest |e(A,B) - d|A||B|| over all B, given per-column counts for A.

    The positive direction is maximised by B = {y : c_y > d|A|} and the
    negative one by its strict complement, so the scan is linear in |Y|.
    """
    p, q = d.numerator, d.denominator
    hi = lo = 0
    hi_mask = lo_mask = 0
    for y in range(G.ny):
        v = q * counts[y] - p * a_size  # q * (c_y - d|A|)
        if v > 0:
            hi += v
            hi_mask |= 1 << y
        elif v < 0:
            lo -= v
            lo_mask |= 1 << y
    if hi >= lo:
        return Fraction(hi, q), hi_mask
    return Fraction(lo, q), lo_mask


def audit_quasirandom(
    G: BipartiteGraph,
    delta,
    d,
    exact_bits: int = 20,
    samples: int = 2000,
    seed: int = 0,
) -> QuasirandomReport:
    """Check |e(A,B) - d|A||B|| <= delta |X||Y| over side subsets.

    Exact whenever the smaller side has at most ``exact_bits`` vertices: that
    side is enumerated by Gray code and the extremal B is found analytically,
    covering all (A, B) pairs.  Otherwise random subsets plus single-flip
    descent are audited and the mode is recorded as sampled.
    """
    delta = Fraction(delta)
    d = Fraction(d)
    budget = delta * G.nx * G.ny

    transposed = G.ny < G.nx
    W = G.transpose() if transposed else G

    def finish(mode, max_dev_abs, wa, wb, nsamples=None):
        max_dev = Fraction(max_dev_abs, G.nx * G.ny)
        if transposed:
            wa, wb = wb, wa
        return QuasirandomReport(
            mode=mode,
            delta=delta,
            d=d,
            ok=max_dev_abs <= budget,
            max_deviation=max_dev,
            slack=delta - max_dev,
            witness_A=_bits(wa),
            witness_B=_bits(wb),
            samples=nsamples,
            seed=seed if mode == "sampled" else None,
        )

    if W.nx <= exact_bits:
        counts = [0] * W.ny
        worst = (Fraction(-1), 0, 0)
        a_mask = 0
        a_size = 0
        # Gray-code walk over subsets of X
        for g in range(1, 1 << W.nx):
            x = (g & -g).bit_length() - 1
            bit = 1 << x
            sign = -1 if a_mask & bit else 1
            a_mask ^= bit
            a_size += sign
            r = W.rows[x]
            while r:
                y = (r & -r).bit_length() - 1
                counts[y] += sign
                r &= r - 1
            dev, b_mask = _worst_B_for_A(W, counts, a_size, d)
            if dev > worst[0]:
                worst = (dev, a_mask, b_mask)
        # empty A gives deviation 0; cover it for the degenerate n=0 loop
        if worst[0] < 0:
            worst = (Fraction(0), 0, 0)
        return finish("exact", worst[0], worst[1], worst[2])

    rng = np.random.Generator(np.random.PCG64(seed))
    worst = (Fraction(-1), 0, 0)

    def eval_mask(a_mask):
        counts = [0] * W.ny
        m = a_mask
        size = 0
        while m:
            x = (m & -m).bit_length() - 1
            size += 1
            r = W.rows[x]
            while r:
                y = (r & -r).bit_length() - 1
                counts[y] += 1
                r &= r - 1
            m &= m - 1
        return _worst_B_for_A(W, counts, size, d)

    candidates = []
    full = (1 << W.nx) - 1
    for density in (0.25, 0.5, 0.75):
        for _ in range(max(1, samples // 3)):
            bits = rng.random(W.nx) < density
            candidates.append(sum(1 << x for x in range(W.nx) if bits[x]))
    candidates.append(full)
    candidates.extend(1 << x for x in range(min(W.nx, 32)))
    candidates.extend(full ^ (1 << x) for x in range(min(W.nx, 32)))

    for a_mask in candidates:
        dev, b_mask = eval_mask(a_mask)
        if dev > worst[0]:
            worst = (dev, a_mask, b_mask)

    # single-flip descent (ascent in deviation) from the worst sample
    improved = True
    while improved:
        improved = False
        for x in range(W.nx):
            cand = worst[1] ^ (1 << x)
            dev, b_mask = eval_mask(cand)
            if dev > worst[0]:
                worst = (dev, cand, b_mask)
                improved = True
    return finish("sampled", worst[0], worst[1], worst[2], nsamples=len(candidates))


# -- tripartite graphs ---------------------------------------------------------


@dataclass(frozen=True)
class TripartiteGraph:
    """Three disjoint vertex parts (global labels) plus three bipartite layers.

    Layers are indexed by local positions within the parts: xy between parts
    0 and 1, xz between 0 and 2, yz between 1 and 2.
    """

    parts: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    xy: BipartiteGraph
    xz: BipartiteGraph
    yz: BipartiteGraph

    def __post_init__(self):
        X, Y, Z = self.parts
        if len(set(X) | set(Y) | set(Z)) != len(X) + len(Y) + len(Z):
            raise GraphError("parts must be disjoint")
        if (self.xy.nx, self.xy.ny) != (len(X), len(Y)):
            raise GraphError("xy layer does not match part sizes")
        if (self.xz.nx, self.xz.ny) != (len(X), len(Z)):
            raise GraphError("xz layer does not match part sizes")
        if (self.yz.nx, self.yz.ny) != (len(Y), len(Z)):
            raise GraphError("yz layer does not match part sizes")

    @classmethod
    def random(cls, sizes, p: float, seed, first_label: int = 0) -> "TripartiteGraph":
        a, b, c = sizes
        parts = (
            tuple(range(first_label, first_label + a)),
            tuple(range(first_label + a, first_label + a + b)),
            tuple(range(first_label + a + b, first_label + a + b + c)),
        )
        return cls(
            parts,
            BipartiteGraph.random(a, b, p, (seed, 0)),
            BipartiteGraph.random(a, c, p, (seed, 1)),
            BipartiteGraph.random(b, c, p, (seed, 2)),
        )


def triangle_count(P: TripartiteGraph) -> int:
    """Exact number of triangles with one vertex per part."""
    total = 0
    for x in range(P.xy.nx):
        row_xy = P.xy.rows[x]
        row_xz = P.xz.rows[x]
        while row_xy:
            y = (row_xy & -row_xy).bit_length() - 1
            total += (row_xz & P.yz.rows[y]).bit_count()
            row_xy &= row_xy - 1
    return total


def triangles(P: TripartiteGraph):
    """Yield triangles as local-index triples (x, y, z)."""
    for x in range(P.xy.nx):
        row_xy = P.xy.rows[x]
        row_xz = P.xz.rows[x]
        while row_xy:
            y = (row_xy & -row_xy).bit_length() - 1
            common = row_xz & P.yz.rows[y]
            while common:
                z = (common & -common).bit_length() - 1
                yield (x, y, z)
                common &= common - 1
            row_xy &= row_xy - 1


def check_counting_lemma(P: TripartiteGraph, delta, dXY, dXZ, dYZ) -> Fraction:
    """Signed normalized triangle-count deviation; |result| <= 3*delta is the
    expectation when each layer is (delta, d)-quasirandom."""
    sizes = len(P.parts[0]) * len(P.parts[1]) * len(P.parts[2])
    if sizes == 0:
        return Fraction(0)
    expected = Fraction(dXY) * Fraction(dXZ) * Fraction(dYZ) * sizes
    return Fraction(triangle_count(P) - expected, sizes)


def relative_density(H: Hypergraph3, P: TripartiteGraph) -> Fraction:
    """Fraction of the triangles of P that are edges of H (0 when triangle-free)."""
    X, Y, Z = P.parts
    for part in P.parts:
        if any(v < 0 or v >= H.n for v in part):
            raise GraphError("tripartite parts must be subsets of V(H)")
    total = 0
    hits = 0
    for x, y, z in triangles(P):
        total += 1
        if H.has_edge(X[x], Y[y], Z[z]):
            hits += 1
    if total == 0:
        return Fraction(0)
    return Fraction(hits, total)


@dataclass
class TriadRegularityReport:
    """Sampled (heuristic) audit of hypergraph regularity against one triad.

    The defining condition quantifies over all subgraphs Q of P; only randomly
    subsampled subgraphs are checked here, so a pass is evidence, not proof.
    """

    delta3: Fraction
    d3: Fraction
    ok: bool
    max_deviation: Fraction  # max over sampled Q of |E_H cap K3(Q)| - d3|K3(Q)|, / |K3(P)|
    samples: int
    seed: int
    mode: str = "sampled-heuristic"


def audit_triad_regular(
    H: Hypergraph3,
    P: TripartiteGraph,
    delta3,
    d3=None,
    samples: int = 40,
    rates=(0.25, 0.5, 0.75, 1.0),
    seed: int = 0,
) -> TriadRegularityReport:
    """Edge-subsample subgraphs Q of P and compare |E_H cap K3(Q)| to d3 |K3(Q)|."""
    delta3 = Fraction(delta3)
    d3 = relative_density(H, P) if d3 is None else Fraction(d3)
    k3_p = triangle_count(P)
    if k3_p == 0:
        return TriadRegularityReport(delta3, d3, True, Fraction(0), 0, seed)
    rng = np.random.Generator(np.random.PCG64(seed))
    X, Y, Z = P.parts

    def subsample(G: BipartiteGraph, rate: float) -> BipartiteGraph:
        if rate >= 1.0:
            return G
        rows = []
        for x in range(G.nx):
            r = G.rows[x]
            keep = 0
            while r:
                y = (r & -r).bit_length() - 1
                if rng.random() < rate:
                    keep |= 1 << y
                r &= r - 1
            rows.append(keep)
        return BipartiteGraph(G.nx, G.ny, tuple(rows))

    worst = Fraction(0)
    drawn = 0
    for rate in rates:
        for _ in range(max(1, samples // len(rates))):
            Q = TripartiteGraph(
                P.parts, subsample(P.xy, rate), subsample(P.xz, rate), subsample(P.yz, rate)
            )
            drawn += 1
            hits = 0
            total = 0
            for x, y, z in triangles(Q):
                total += 1
                if H.has_edge(X[x], Y[y], Z[z]):
                    hits += 1
            dev = abs(Fraction(hits) - d3 * total) / k3_p
            worst = max(worst, dev)
            if rate >= 1.0:
                break
    return TriadRegularityReport(delta3, d3, worst <= delta3, worst, drawn, seed)
