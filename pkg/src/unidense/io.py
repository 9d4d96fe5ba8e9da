"""File formats: hypergraph text/JSON, palette JSON, reduced-hypergraph JSON,
pair-colouring dumps, bipartite/tripartite graphs, and DIMACS CNF export.

Rationals travel as "p/q" strings everywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .hypergraph import Hypergraph3, HypergraphError
from .palette import Palette, PaletteError, WeightedColorSet


def parse_fraction(s) -> Fraction:
    """Parse "p/q" or an integer string; floats are rejected."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    text = str(s).strip()
    if any(ch in text for ch in ".eE") and not text.lstrip("+-").isdigit():
        raise ValueError(f"rational expected (p/q), got {s!r}")
    return Fraction(text)


def format_fraction(f: Fraction) -> str:
    f = Fraction(f)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


# -- hypergraphs -------------------------------------------------------------


def hypergraph_to_text(H: Hypergraph3) -> str:
    lines = [f"{H.n} {len(H.edges)}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in H.edges)
    return "\n".join(lines) + "\n"


def hypergraph_from_text(text: str) -> Hypergraph3:
    rows = [ln for ln in (ln.strip() for ln in text.splitlines()) if ln and not ln.startswith("#")]
    if not rows:
        raise HypergraphError("empty hypergraph file")
    head = rows[0].split()
    if len(head) != 2:
        raise HypergraphError(f"expected header 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise HypergraphError(f"header promises {m} edges, file has {len(rows) - 1}")
    triples = [tuple(int(x) for x in ln.split()) for ln in rows[1:]]
    return Hypergraph3(n, triples)


def hypergraph_to_json(H: Hypergraph3) -> dict:
    return {"n": H.n, "edges": [list(e) for e in H.edges]}


def hypergraph_from_json(obj: dict) -> Hypergraph3:
    return Hypergraph3(int(obj["n"]), [tuple(e) for e in obj["edges"]])


def write_hypergraph(H: Hypergraph3, path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(hypergraph_to_json(H), indent=2) + "\n")
    else:
        path.write_text(hypergraph_to_text(H))


def read_hypergraph(path) -> Hypergraph3:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        return hypergraph_from_json(json.loads(text))
    return hypergraph_from_text(text)


# -- palettes ----------------------------------------------------------------


def palette_to_json(P: Palette) -> dict:
    obj = {
        "colors": list(P.base.colors),
        "patterns": sorted([list(p) for p in P.patterns]),
    }
    if not P.base.is_uniform:
        obj["weights"] = [format_fraction(w) for w in P.base.weights]
    if P.name:
        obj["name"] = P.name
    return obj


def palette_from_json(obj: dict) -> Palette:
    colors = tuple(obj["colors"])
    if "weights" in obj:
        base = WeightedColorSet(colors, tuple(parse_fraction(w) for w in obj["weights"]))
    else:
        base = WeightedColorSet.uniform(colors)
    pats = frozenset(tuple(p) for p in obj.get("patterns", []))
    return Palette(base, pats, name=obj.get("name", ""))


def write_palette(P: Palette, path) -> None:
    Path(path).write_text(json.dumps(palette_to_json(P), indent=2) + "\n")


def read_palette(path) -> Palette:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise PaletteError(f"palette file {path}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    return palette_from_json(obj)


# -- pair colourings -----------------------------------------------------------


def coloring_to_text(pc) -> str:
    """One 'x y colour' line per pair, pairs in lexicographic order."""
    lines = [f"{x} {y} {color}" for (x, y), color in pc.items()]
    return "\n".join(lines) + ("\n" if lines else "")


# -- reduced hypergraphs -------------------------------------------------------


def reduced_to_json(A) -> dict:
    classes = {f"{i},{j}": A.class_sizes[(i, j)] for (i, j) in sorted(A.class_sizes)}
    constituents = {
        f"{i},{j},{k}": sorted([list(e) for e in A.constituents[(i, j, k)]])
        for (i, j, k) in sorted(A.constituents)
    }
    return {"indices": len(A.indices), "classes": classes, "constituents": constituents}


def reduced_from_json(obj: dict):
    from .reduced import ReducedHypergraph

    m = int(obj["indices"])
    classes = {}
    for key, size in obj["classes"].items():
        i, j = (int(x) for x in key.split(","))
        classes[(i, j)] = int(size)
    constituents = {}
    for key, edges in obj.get("constituents", {}).items():
        i, j, k = (int(x) for x in key.split(","))
        constituents[(i, j, k)] = frozenset(tuple(e) for e in edges)
    return ReducedHypergraph(tuple(range(m)), classes, constituents)


def write_reduced(A, path) -> None:
    Path(path).write_text(json.dumps(reduced_to_json(A), indent=2) + "\n")


def read_reduced(path):
    return reduced_from_json(json.loads(Path(path).read_text()))


# -- bipartite / tripartite graphs ---------------------------------------------
#
# Text format mirrors the hypergraph convention with a part-assignment header:
#   n m
#   p_0 p_1 ... p_{n-1}      (part id per vertex: 0/1 bipartite, 0/1/2 tripartite)
#   u v                      (m edge lines, global vertex labels)


def partite_to_text(parts, layers) -> str:
    """Serialize a partite graph given global part tuples and local-index layers.

    layers maps (part_i, part_j) with i < j to a BipartiteGraph.
    """
    labels = [v for part in parts for v in part]
    n = len(labels)
    part_of = {}
    for pi, part in enumerate(parts):
        for v in part:
            part_of[v] = pi
    edge_lines = []
    for (pi, pj), G in sorted(layers.items()):
        for x in range(G.nx):
            row = G.rows[x]
            while row:
                y = (row & -row).bit_length() - 1
                edge_lines.append(f"{parts[pi][x]} {parts[pj][y]}")
                row &= row - 1
    head = [f"{n} {len(edge_lines)}", " ".join(str(part_of[v]) for v in sorted(labels))]
    return "\n".join(head + edge_lines) + "\n"


def bipartite_to_text(G) -> str:
    parts = (tuple(range(G.nx)), tuple(range(G.nx, G.nx + G.ny)))
    return partite_to_text(parts, {(0, 1): G})


def tripartite_to_text(P) -> str:
    return partite_to_text(P.parts, {(0, 1): P.xy, (0, 2): P.xz, (1, 2): P.yz})


class PartiteFormatError(ValueError):
    """Text-format parse error for partite graphs."""


def _partite_from_text(text: str, want_parts: int):
    rows = [ln for ln in (ln.strip() for ln in text.splitlines()) if ln and not ln.startswith("#")]
    n, m = (int(x) for x in rows[0].split())
    assignment = [int(x) for x in rows[1].split()]
    if len(assignment) != n:
        raise PartiteFormatError(f"part header lists {len(assignment)} vertices, expected {n}")
    if sorted(set(assignment)) != list(range(want_parts)):
        raise PartiteFormatError(f"expected {want_parts} parts in the header")
    parts = tuple(
        tuple(v for v in range(n) if assignment[v] == p) for p in range(want_parts)
    )
    local = {}
    for part in parts:
        for i, v in enumerate(part):
            local[v] = i
    edges = {}
    for ln in rows[2 : 2 + m]:
        u, v = (int(x) for x in ln.split())
        pu, pv = assignment[u], assignment[v]
        if pu == pv:
            raise PartiteFormatError(f"edge {u} {v} inside one part")
        if pu > pv:
            u, v, pu, pv = v, u, pv, pu
        edges.setdefault((pu, pv), []).append((local[u], local[v]))
    return parts, edges


def bipartite_from_text(text: str):
    from .quasirandom import BipartiteGraph

    parts, edges = _partite_from_text(text, 2)
    return BipartiteGraph.from_edges(len(parts[0]), len(parts[1]), edges.get((0, 1), []))


def tripartite_from_text(text: str):
    from .quasirandom import BipartiteGraph, TripartiteGraph

    parts, edges = _partite_from_text(text, 3)
    sizes = tuple(len(p) for p in parts)
    return TripartiteGraph(
        parts,
        BipartiteGraph.from_edges(sizes[0], sizes[1], edges.get((0, 1), [])),
        BipartiteGraph.from_edges(sizes[0], sizes[2], edges.get((0, 2), [])),
        BipartiteGraph.from_edges(sizes[1], sizes[2], edges.get((1, 2), [])),
    )


def read_bipartite(path):
    path = Path(path)
    if path.suffix == ".json":
        return bipartite_from_json(json.loads(path.read_text()))
    return bipartite_from_text(path.read_text())


def read_tripartite(path):
    path = Path(path)
    if path.suffix == ".json":
        return tripartite_from_json(json.loads(path.read_text()))
    return tripartite_from_text(path.read_text())


def bipartite_to_json(G) -> dict:
    edges = [[x, y] for x in range(G.nx) for y in range(G.ny) if G.rows[x] >> y & 1]
    return {"sides": [G.nx, G.ny], "edges": edges}


def bipartite_from_json(obj: dict):
    from .quasirandom import BipartiteGraph

    nx_, ny_ = obj["sides"]
    return BipartiteGraph.from_edges(int(nx_), int(ny_), [tuple(e) for e in obj["edges"]])


def tripartite_to_json(P) -> dict:
    def layer_edges(G):
        return [[x, y] for x in range(G.nx) for y in range(G.ny) if G.rows[x] >> y & 1]

    return {
        "parts": [list(p) for p in P.parts],
        "xy": layer_edges(P.xy),
        "xz": layer_edges(P.xz),
        "yz": layer_edges(P.yz),
    }


def tripartite_from_json(obj: dict):
    from .quasirandom import BipartiteGraph, TripartiteGraph

    parts = tuple(tuple(p) for p in obj["parts"])
    nx_, ny_, nz_ = (len(p) for p in parts)
    return TripartiteGraph(
        parts,
        BipartiteGraph.from_edges(nx_, ny_, [tuple(e) for e in obj["xy"]]),
        BipartiteGraph.from_edges(nx_, nz_, [tuple(e) for e in obj["xz"]]),
        BipartiteGraph.from_edges(ny_, nz_, [tuple(e) for e in obj["yz"]]),
    )


# -- DIMACS -------------------------------------------------------------------


def write_dimacs(path, num_vars: int, clauses, varmap=None, meta=None) -> None:
    """Write a CNF plus a sidecar <path>.vars.json with the variable meaning."""
    path = Path(path)
    lines = [f"p cnf {num_vars} {len(clauses)}"]
    lines.extend(" ".join(str(lit) for lit in cl) + " 0" for cl in clauses)
    path.write_text("\n".join(lines) + "\n")
    if varmap is not None:
        sidecar = {"variables": {str(v): info for v, info in sorted(varmap.items())}}
        if meta:
            sidecar["meta"] = meta
        path.with_suffix(path.suffix + ".vars.json").write_text(
            json.dumps(sidecar, indent=2, sort_keys=True) + "\n"
        )
