"""Weighted colour sets, palettes, exact pattern densities, and the
representability search deciding whether a pattern hypergraph can contain F.

All densities are exact rationals.  A palette is a set of ordered colour
triples; a hypergraph built from a pair colouring phi has edge {x,y,z}
(x < y < z) exactly when (phi(x,y), phi(x,z), phi(y,z)) is one of the
patterns, i.e. pattern coordinates follow the lexicographic order of the
three pairs.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

import numpy as np

from .hypergraph import Hypergraph3


class PaletteError(ValueError):
    """Malformed palette input (weights not summing to 1, unknown colour, ...)."""


@dataclass(frozen=True)
class WeightedColorSet:
    """Finite colour list with rational weights summing exactly to one."""

    colors: tuple[str, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.colors:
            raise PaletteError("colour set must be nonempty")
        if len(set(self.colors)) != len(self.colors):
            raise PaletteError("duplicate colour names")
        if len(self.weights) != len(self.colors):
            raise PaletteError("one weight per colour required")
        for w in self.weights:
            if not 0 <= w <= 1:
                raise PaletteError(f"weight {w} outside [0, 1]")
        if sum(self.weights, Fraction(0)) != 1:
            raise PaletteError("weights must sum to 1 exactly")
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.colors)})

    @classmethod
    def uniform(cls, colors) -> "WeightedColorSet":
        colors = tuple(colors)
        w = Fraction(1, len(colors)) if colors else None
        return cls(colors, tuple(w for _ in colors))

    @classmethod
    def weighted(cls, colors, weights) -> "WeightedColorSet":
        return cls(tuple(colors), tuple(Fraction(w) for w in weights))

    def index(self, color: str) -> int:
        try:
            return self._index[color]
        except KeyError:
            raise PaletteError(f"unknown colour {color!r}") from None

    def weight(self, color: str) -> Fraction:
        return self.weights[self.index(color)]

    @property
    def is_uniform(self) -> bool:
        w = Fraction(1, len(self.colors))
        return all(x == w for x in self.weights)

    def __len__(self):
        return len(self.colors)


_PERMS3 = tuple(itertools.permutations(range(3)))


@dataclass(frozen=True)
class Palette:
    """A set of ordered colour triples over a weighted colour set.

    claims optionally records documented bounds as (notion, density, target)
    triples: non-representability of the target certifies that the notion's
    generalized Turan density is at least the claimed value.
    """

    base: WeightedColorSet
    patterns: frozenset
    name: str = ""
    claims: tuple = ()

    def __post_init__(self):
        pats = frozenset(tuple(p) for p in self.patterns)
        object.__setattr__(self, "patterns", pats)
        known = set(self.base.colors)
        for p in pats:
            if len(p) != 3:
                raise PaletteError(f"pattern {p!r} is not a triple")
            for c in p:
                if c not in known:
                    raise PaletteError(f"pattern {p!r} uses unknown colour {c!r}")
        symmetric = all(
            tuple(p[s] for s in perm) in pats for p in pats for perm in _PERMS3
        )
        object.__setattr__(self, "symmetric", symmetric)

    # -- exact densities ----------------------------------------------------

    def density_vvv(self) -> Fraction:
        """Total weighted pattern mass: the largest d making the palette (d, vvv)-dense."""
        w = self.base.weight
        return sum((w(a) * w(b) * w(c) for a, b, c in self.patterns), Fraction(0))

    def density_ev(self) -> Fraction:
        """Min over coordinate positions and colours of the conditional pattern mass.

        For uniform weights this is min over fixed coordinates of
        (#completions) / |colours|^2.
        """
        w = self.base.weight
        best = Fraction(1)
        for pos in range(3):
            others = [o for o in range(3) if o != pos]
            for c in self.base.colors:
                mass = sum(
                    (w(p[others[0]]) * w(p[others[1]]) for p in self.patterns if p[pos] == c),
                    Fraction(0),
                )
                best = min(best, mass)
        return best

    def density_ee(self) -> Fraction:
        """Min over coordinate pairs and colour pairs of the completing-colour mass."""
        w = self.base.weight
        best = Fraction(1)
        for rest in range(3):
            fixed = [o for o in range(3) if o != rest]
            for c1 in self.base.colors:
                for c2 in self.base.colors:
                    mass = sum(
                        (
                            w(p[rest])
                            for p in self.patterns
                            if p[fixed[0]] == c1 and p[fixed[1]] == c2
                        ),
                        Fraction(0),
                    )
                    best = min(best, mass)
        return best

    def density(self, star: str) -> Fraction:
        return {"vvv": self.density_vvv, "ev": self.density_ev, "ee": self.density_ee}[star]()

    # -- helpers ------------------------------------------------------------

    def pattern_codes(self) -> frozenset:
        idx = self.base.index
        return frozenset((idx(a), idx(b), idx(c)) for a, b, c in self.patterns)

    def expand_weights(self) -> "Palette":
        """Equivalent uniform-weight palette obtained by splitting colours into shades.

        A colour of weight p/q becomes p*L/q shades for L the common denominator;
        densities under all three notions are preserved exactly.  Zero-weight
        colours disappear.
        """
        if self.base.is_uniform:
            return self
        L = lcm(*(w.denominator for w in self.base.weights))
        shades: dict[str, list[str]] = {}
        flat: list[str] = []
        for c, w in zip(self.base.colors, self.base.weights):
            k = int(w * L)
            shades[c] = [f"{c}#{i}" for i in range(k)]
            flat.extend(shades[c])
        pats = set()
        for a, b, c in self.patterns:
            for sa in shades[a]:
                for sb in shades[b]:
                    for sc in shades[c]:
                        pats.add((sa, sb, sc))
        return Palette(
            WeightedColorSet.uniform(flat),
            frozenset(pats),
            name=f"{self.name}-unweighted" if self.name else "",
        )


def symmetric_closure(generators, base: WeightedColorSet, name: str = "") -> Palette:
    """Inclusion-wise minimal palette containing the generators and closed under
    all six coordinate permutations."""
    pats = set()
    for g in generators:
        g = tuple(g)
        for perm in _PERMS3:
            pats.add(tuple(g[s] for s in perm))
    return Palette(base, frozenset(pats), name=name)


# -- built-in palettes -----------------------------------------------------

_ROEDL_RE = re.compile(r"^roedl(?:\((\d+)\))?$")


def builtin(spec: str) -> Palette:
    """Palettes named in the literature, with their claimed densities as metadata.

    Known names: rainbow, tournament, star4, roedl / roedl(r), ramsey6,
    cycle5, ee5, ee6, ee11.
    """
    s = spec.strip().lower()
    m = _ROEDL_RE.match(s)
    if m:
        r = int(m.group(1)) if m.group(1) else 2
        return roedl_palette(r)
    try:
        factory = _BUILTINS[s]
    except KeyError:
        raise PaletteError(f"unknown builtin palette {spec!r}") from None
    return factory()


def rainbow_palette() -> Palette:
    base = WeightedColorSet.uniform(("red", "blue", "green"))
    claims = (("vvv", Fraction(1, 27), "zero-density criterion"),)
    return Palette(base, frozenset({("red", "blue", "green")}), name="rainbow", claims=claims)


def tournament_palette() -> Palette:
    # "fwd" on pair (x, y) with x < y means the arc x -> y; the two patterns
    # below are exactly the cyclic orientations of an ordered triple.
    base = WeightedColorSet.uniform(("fwd", "back"))
    pats = frozenset({("fwd", "back", "fwd"), ("back", "fwd", "back")})
    claims = (("vvv", Fraction(1, 4), "k4minus"), ("ev", Fraction(1, 4), "k4minus"))
    return Palette(base, pats, name="tournament", claims=claims)


def star4_palette() -> Palette:
    base = WeightedColorSet.uniform(("1", "2", "3"))
    pats = frozenset(
        {
            ("1", "2", "1"),
            ("1", "3", "1"),
            ("2", "1", "2"),
            ("2", "3", "2"),
            ("3", "1", "3"),
            ("3", "2", "3"),
            ("1", "2", "3"),
            ("2", "3", "1"),
            ("3", "1", "2"),
        }
    )
    claims = (("vvv", Fraction(1, 3), "star4"), ("ev", Fraction(1, 3), "star4"))
    return Palette(base, pats, name="star4", claims=claims)


def roedl_palette(r: int = 2) -> Palette:
    """All patterns whose first two coordinates differ, over r colours."""
    if r < 2:
        raise PaletteError(f"roedl palette needs r >= 2, got {r}")
    colors = ("red", "green") if r == 2 else tuple(f"c{i + 1}" for i in range(r))
    base = WeightedColorSet.uniform(colors)
    pats = frozenset(
        (a, b, c)
        for a in colors
        for b in colors
        for c in colors
        if a != b
    )
    claims = (
        ("vvv", Fraction(r - 1, r), f"k{r + 2}"),
        ("ev", Fraction(r - 1, r), f"k{r + 2}"),
    )
    return Palette(base, pats, name=f"roedl({r})" if r != 2 else "roedl", claims=claims)


def ramsey6_palette() -> Palette:
    """All six two-colour patterns using both colours (works because 6 -> (3)^2_2)."""
    base = WeightedColorSet.uniform(("red", "green"))
    pats = frozenset(
        p
        for p in itertools.product(("red", "green"), repeat=3)
        if len(set(p)) == 2
    )
    return Palette(base, pats, name="ramsey6", claims=(("vvv", Fraction(3, 4), "k6"),))


def cycle5_palette() -> Palette:
    base = WeightedColorSet.weighted(("red", "green"), (Fraction(2, 3), Fraction(1, 3)))
    claims = (("vvv", Fraction(4, 27), "cycle5"),)
    return Palette(base, frozenset({("red", "red", "green")}), name="cycle5", claims=claims)


def ee5_palette() -> Palette:
    base = WeightedColorSet.uniform(("1", "2", "3"))
    P = symmetric_closure(
        [("1", "1", "2"), ("2", "2", "3"), ("3", "3", "1")], base, name="ee5"
    )
    return Palette(P.base, P.patterns, name="ee5", claims=(("ee", Fraction(1, 3), "k5"),))


def ee6_palette() -> Palette:
    base = WeightedColorSet.uniform(("1", "2"))
    P = symmetric_closure([("1", "1", "2"), ("1", "2", "2")], base, name="ee6")
    return Palette(P.base, P.patterns, name="ee6", claims=(("ee", Fraction(1, 2), "k6"),))


def ee11_palette() -> Palette:
    base = WeightedColorSet.uniform(("1", "2", "3"))
    P = symmetric_closure(
        [
            ("1", "1", "2"),
            ("1", "1", "3"),
            ("2", "2", "1"),
            ("2", "2", "3"),
            ("3", "3", "1"),
            ("3", "3", "2"),
        ],
        base,
        name="ee11",
    )
    return Palette(P.base, P.patterns, name="ee11", claims=(("ee", Fraction(2, 3), "k11"),))


_BUILTINS = {
    "rainbow": rainbow_palette,
    "tournament": tournament_palette,
    "star4": star4_palette,
    "ramsey6": ramsey6_palette,
    "cycle5": cycle5_palette,
    "ee5": ee5_palette,
    "ee6": ee6_palette,
    "ee11": ee11_palette,
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS)) + ("roedl(r)",)


# -- representability -------------------------------------------------------


@dataclass
class RepresentabilityCertificate:
    """A vertex ordering plus shadow colouring witnessing representability.

    ordering[r] is the vertex placed at rank r; coloring maps each shadow pair
    (u, v) with u < v to a colour name.
    """

    ordering: tuple[int, ...]
    coloring: dict


@dataclass
class RepresentabilityResult:
    status: str  # "certificate" | "free" | "inconclusive"
    certificate: RepresentabilityCertificate | None
    space: int  # nominal (orderings x colourings) assignment space covered
    nodes: int  # search nodes actually explored

    @property
    def found(self) -> bool:
        return self.status == "certificate"


def check_certificate(F: Hypergraph3, palette: Palette, cert) -> bool:
    """Independent validator: re-evaluates the pattern condition edge by edge."""
    if sorted(cert.ordering) != list(range(F.n)):
        return False
    rank = {v: r for r, v in enumerate(cert.ordering)}
    pats = palette.patterns
    col = cert.coloring
    pairs = set(F.shadow())
    if set(col) != pairs:
        return False
    known = set(palette.base.colors)
    if any(c not in known for c in col.values()):
        return False
    for e in F.edges:
        x, y, z = sorted(e, key=rank.__getitem__)
        trip = (
            col[tuple(sorted((x, y)))],
            col[tuple(sorted((x, z)))],
            col[tuple(sorted((y, z)))],
        )
        if trip not in pats:
            return False
    return True


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _automorphisms(F: Hypergraph3) -> list[tuple[int, ...]]:
    """Brute-force automorphism group; intended for |V(F)| <= 8."""
    edges = F._edge_set
    degs = [F.degree(v) for v in range(F.n)]
    autos = []
    for perm in itertools.permutations(range(F.n)):
        if any(degs[perm[v]] != degs[v] for v in range(F.n)):
            continue
        if all(tuple(sorted((perm[a], perm[b], perm[c]))) in edges for a, b, c in F.edges):
            autos.append(perm)
    return autos


def _canonical_orderings(F: Hypergraph3):
    """One ordering per orbit under vertex relabelling by Aut(F).

    Representability under sigma is equivalent under a o sigma for any
    automorphism a, so exhausting one representative per orbit is exhaustive.
    Falls back to all orderings when the group is too large for the orbit
    filter to pay off.
    """
    autos = _automorphisms(F) if F.n <= 8 else [tuple(range(F.n))]
    if len(autos) == 1 or len(autos) * factorial(F.n) > 2 * 10**7:
        yield from itertools.permutations(range(F.n))
        return
    for sigma in itertools.permutations(range(F.n)):
        if min(tuple(a[v] for v in sigma) for a in autos) == sigma:
            yield sigma


class _Csp:
    """Pair-colouring CSP for one fixed vertex ordering, with forward checking."""

    def __init__(self, pairs, edge_slots, K, pattern_codes, value_order):
        self.pairs = pairs
        self.K = K
        self.value_order = value_order
        self.full = (1 << K) - 1
        npairs = len(pairs)
        pidx = {p: i for i, p in enumerate(pairs)}
        self.edges = [tuple(pidx[p] for p in slots) for slots in edge_slots]
        self.edges_of_var: list[list[int]] = [[] for _ in range(npairs)]
        for ei, e in enumerate(self.edges):
            for p in e:
                self.edges_of_var[p].append(ei)
        # variable order: pairs by number of incident edges, descending
        self.var_order = sorted(
            range(npairs), key=lambda p: (-len(self.edges_of_var[p]), p)
        )
        # propagation tables over colour codes
        self.allowed = set(pattern_codes)
        comp2: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
        proj1: dict[tuple[int, int], dict[int, int]] = {}
        for i, j in itertools.combinations(range(3), 2):
            k = 3 - i - j
            d: dict[tuple[int, int], int] = {}
            for p in pattern_codes:
                key = (p[i], p[j])
                d[key] = d.get(key, 0) | (1 << p[k])
            comp2[(i, j)] = d
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                d2: dict[int, int] = {}
                for p in pattern_codes:
                    d2[p[i]] = d2.get(p[i], 0) | (1 << p[j])
                proj1[(i, j)] = d2
        self.comp2 = comp2
        self.proj1 = proj1

    def search(self, counter, budget):
        """Return (status, assignment) with status in {sat, unsat, budget}."""
        npairs = len(self.pairs)
        domains = [self.full] * npairs
        assign = [-1] * npairs
        edges = self.edges
        comp2 = self.comp2
        proj1 = self.proj1

        def propagate(var, trail):
            for ei in self.edges_of_var[var]:
                e = edges[ei]
                vals = [assign[p] for p in e]
                free = [s for s in range(3) if vals[s] < 0]
                if not free:
                    if tuple(vals) not in self.allowed:
                        return False
                elif len(free) == 1:
                    s = free[0]
                    i, j = [t for t in range(3) if t != s]
                    mask = comp2[(i, j)].get((vals[i], vals[j]), 0)
                    p = e[s]
                    nd = domains[p] & mask
                    if not nd:
                        return False
                    if nd != domains[p]:
                        trail.append((p, domains[p]))
                        domains[p] = nd
                else:
                    s = [t for t in range(3) if assign[e[t]] >= 0][0]
                    for t in free:
                        mask = proj1[(s, t)].get(vals[s], 0)
                        p = e[t]
                        nd = domains[p] & mask
                        if not nd:
                            return False
                        if nd != domains[p]:
                            trail.append((p, domains[p]))
                            domains[p] = nd
            return True

        def bt(depth):
            if depth == npairs:
                return "sat"
            var = self.var_order[depth]
            dom = domains[var]
            for c in self.value_order:
                if not dom & (1 << c):
                    continue
                counter[0] += 1
                if budget is not None and counter[0] > budget:
                    return "budget"
                assign[var] = c
                trail: list[tuple[int, int]] = []
                if propagate(var, trail):
                    res = bt(depth + 1)
                    if res != "unsat":
                        return res
                for p, old in trail:
                    domains[p] = old
                assign[var] = -1
            return "unsat"

        status = bt(0)
        return status, (list(assign) if status == "sat" else None)


def _edge_slots_for_ordering(F: Hypergraph3, ordering) -> list[tuple]:
    rank = {v: r for r, v in enumerate(ordering)}
    slots = []
    for e in F.edges:
        x, y, z = sorted(e, key=rank.__getitem__)
        slots.append((_pair(x, y), _pair(x, z), _pair(y, z)))
    return slots


def _min_conflicts_probe(pairs, edge_slots, K, pattern_codes, seed, steps):
    """Randomized certificate finder for symmetric palettes; never proves absence."""
    rng = np.random.Generator(np.random.PCG64(seed))
    npairs = len(pairs)
    pidx = {p: i for i, p in enumerate(pairs)}
    edges = [tuple(pidx[p] for p in slots) for slots in edge_slots]
    eov: list[list[int]] = [[] for _ in range(npairs)]
    for ei, e in enumerate(edges):
        for p in e:
            eov[p].append(ei)
    allowed = set(pattern_codes)

    assign = rng.integers(0, K, size=npairs).tolist()

    def edge_ok(ei):
        a, b, c = edges[ei]
        return (assign[a], assign[b], assign[c]) in allowed

    bad = {ei for ei in range(len(edges)) if not edge_ok(ei)}
    used = 0
    while bad and used < steps:
        used += 1
        pool = sorted(bad)  # sorted for cross-platform determinism
        ei = pool[rng.integers(0, len(pool))]
        var = edges[ei][rng.integers(0, 3)]
        best_val, best_cnt = None, None
        for c in range(K):
            assign[var] = c
            cnt = sum(0 if edge_ok(e2) else 1 for e2 in eov[var])
            if best_cnt is None or cnt < best_cnt:
                best_val, best_cnt = c, cnt
        if rng.random() < 0.08:  # occasional random walk to escape plateaus
            best_val = int(rng.integers(0, K))
        assign[var] = best_val
        for e2 in eov[var]:
            if edge_ok(e2):
                bad.discard(e2)
            else:
                bad.add(e2)
    return (assign, used) if not bad else (None, used)


def representable(
    F: Hypergraph3,
    palette: Palette,
    fixed_ordering=None,
    budget: int | None = None,
    probe_seed: int = 0,
    probe_steps: int = 400_000,
) -> RepresentabilityResult:
    """Decide whether some pattern hypergraph over this palette contains F.

    Searches for an ordering of V(F) plus a shadow colouring sending every
    edge's pattern into the palette.  For symmetric palettes pattern membership
    is ordering-invariant, so the ordering loop collapses to the identity.
    A "free" verdict is only ever reported after full exhaustion; certificates
    are re-validated by :func:`check_certificate` before being returned.
    """
    colors = palette.base.colors
    K = len(colors)
    pairs = sorted(F.shadow())
    s = len(pairs)

    if not F.edges:
        cert = RepresentabilityCertificate(tuple(range(F.n)), {})
        return RepresentabilityResult("certificate", cert, 1, 0)

    if fixed_ordering is not None:
        ordering = tuple(fixed_ordering)
        if sorted(ordering) != list(range(F.n)):
            raise PaletteError("fixed_ordering must be a permutation of V(F)")
        orderings = iter([ordering])
        space = K**s
    elif palette.symmetric:
        orderings = iter([tuple(range(F.n))])
        space = K**s
    else:
        orderings = _canonical_orderings(F)
        space = factorial(F.n) * K**s

    codes = palette.pattern_codes()
    freq = [0] * K
    for p in codes:
        for c in p:
            freq[c] += 1
    value_order = sorted(range(K), key=lambda c: (-freq[c], c))

    counter = [0]

    def to_cert(ordering, assign):
        coloring = {p: colors[assign[i]] for i, p in enumerate(pairs)}
        cert = RepresentabilityCertificate(tuple(ordering), coloring)
        if not check_certificate(F, palette, cert):  # pragma: no cover - safety net
            raise AssertionError("internal error: produced certificate failed validation")
        return cert

    # randomized probe for large symmetric instances (certificate-only)
    if palette.symmetric and fixed_ordering is None and K**s > 10**7:
        if budget is not None:
            probe_steps = min(probe_steps, budget // 2)
        slots = _edge_slots_for_ordering(F, tuple(range(F.n)))
        for attempt in range(6):
            assign, used = _min_conflicts_probe(
                pairs, slots, K, codes, seed=(probe_seed, attempt), steps=probe_steps // 6
            )
            counter[0] += used
            if assign is not None:
                cert = to_cert(tuple(range(F.n)), assign)
                return RepresentabilityResult("certificate", cert, space, counter[0])

    for ordering in orderings:
        slots = _edge_slots_for_ordering(F, ordering)
        csp = _Csp(pairs, slots, K, codes, value_order)
        status, assign = csp.search(counter, budget)
        if status == "sat":
            cert = to_cert(ordering, assign)
            return RepresentabilityResult("certificate", cert, space, counter[0])
        if status == "budget":
            return RepresentabilityResult("inconclusive", None, space, counter[0])
    return RepresentabilityResult("free", None, space, counter[0])


def zero_density_certificate(F: Hypergraph3, budget: int | None = None) -> RepresentabilityResult:
    """Certificate search against the single rainbow pattern (red, blue, green).

    A certificate exists exactly when F admits the vertex enumeration plus
    position-determined 3-colouring of its shadow characterising vanishing
    vvv-density.
    """
    return representable(F, rainbow_palette(), budget=budget)


# -- CNF export --------------------------------------------------------------


def cnf_encoding(F: Hypergraph3, palette: Palette, ordering=None):
    """DIMACS-style encoding of the colouring search for one fixed ordering.

    Variable x_{p,c} means "shadow pair p receives colour c".  Clauses are
    exactly-one per pair plus, for every edge and every non-pattern colour
    triple, a blocking clause.  For symmetric palettes the single exported
    ordering covers all orderings; otherwise unsatisfiability certifies only
    the recorded ordering.
    """
    if ordering is None:
        ordering = tuple(range(F.n))
    ordering = tuple(ordering)
    pairs = sorted(F.shadow())
    pidx = {p: i for i, p in enumerate(pairs)}
    K = len(palette.base.colors)

    def var(p: int, c: int) -> int:
        return p * K + c + 1

    clauses: list[tuple[int, ...]] = []
    for p in range(len(pairs)):
        clauses.append(tuple(var(p, c) for c in range(K)))
        for c1, c2 in itertools.combinations(range(K), 2):
            clauses.append((-var(p, c1), -var(p, c2)))
    codes = palette.pattern_codes()
    forbidden = [t for t in itertools.product(range(K), repeat=3) if t not in codes]
    for p1, p2, p3 in _edge_slots_for_ordering(F, ordering):
        i1, i2, i3 = pidx[p1], pidx[p2], pidx[p3]
        for a, b, c in forbidden:
            clauses.append((-var(i1, a), -var(i2, b), -var(i3, c)))
    varmap = {
        var(i, c): {"pair": list(p), "color": palette.base.colors[c]}
        for i, p in enumerate(pairs)
        for c in range(K)
    }
    meta = {
        "ordering": list(ordering),
        "colors": list(palette.base.colors),
        "num_pairs": len(pairs),
        "symmetric_palette": palette.symmetric,
        "covers_all_orderings": bool(palette.symmetric),
    }
    return len(pairs) * K, clauses, varmap, meta
