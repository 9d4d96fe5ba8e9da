"""Tests for the core hypergraph type, named families, and embedding search."""

import itertools

import pytest

from unidense import hypergraph as hg


class TestMake:
    def test_k4_minus_shape(self):
        H = hg.make(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
        assert H.n == 4
        assert H.edge_count == 3

    def test_empty(self):
        H = hg.make(3, [])
        assert H.edges == ()
        assert H.shadow() == set()

    def test_canonicalization(self):
        H = hg.make(4, [(2, 1, 0)])
        assert H.edges == ((0, 1, 2),)

    def test_duplicates_collapse(self):
        H = hg.make(4, [(0, 1, 2), (2, 0, 1), (1, 2, 0)])
        assert H.edge_count == 1

    def test_out_of_range(self):
        with pytest.raises(hg.HypergraphError):
            hg.make(3, [(0, 1, 3)])

    def test_repeated_vertex(self):
        with pytest.raises(hg.HypergraphError):
            hg.make(4, [(0, 1, 1)])


class TestShadow:
    def test_k4_minus_covers_all_pairs(self):
        # oracle: union of pairs of each edge
        H = hg.clique_minus4()
        want = set()
        for e in H.edges:
            want.update(itertools.combinations(e, 2))
        assert hg.shadow(H) == want == set(itertools.combinations(range(4), 2))

    def test_single_edge(self):
        H = hg.make(3, [(0, 1, 2)])
        assert hg.shadow(H) == {(0, 1), (0, 2), (1, 2)}

    def test_cycle5_covers_all_pairs(self):
        # {i, i+1, i+2} covers distances 1 and 2, which is every pair mod 5
        assert hg.shadow(hg.cycle5()) == set(itertools.combinations(range(5), 2))

    def test_shadow_size_bound(self):
        for H in (hg.clique(5), hg.cycle5(), hg.fano(), hg.star(4)):
            assert len(hg.shadow(H)) <= 3 * H.edge_count


class TestNamed:
    def test_clique4(self):
        H = hg.clique(4)
        assert (H.n, H.edge_count) == (4, 4)

    def test_star3_isomorphic_to_k4_minus(self):
        S3 = hg.star(3)
        assert hg.find_embedding(S3, hg.clique_minus4()) is not None
        assert hg.find_embedding(hg.clique_minus4(), S3) is not None

    def test_fano_pair_coverage(self):
        # every one of the 21 pairs covered exactly once
        F = hg.fano()
        assert (F.n, F.edge_count) == (7, 7)
        coverage = {p: 0 for p in itertools.combinations(range(7), 2)}
        for e in F.edges:
            for p in itertools.combinations(e, 2):
                coverage[p] += 1
        assert set(coverage.values()) == {1}

    def test_star_k_shape(self):
        S4 = hg.star(4)
        assert S4.n == 5
        assert S4.edge_count == 6
        assert all(4 in e for e in S4.edges)

    def test_named_parser(self):
        assert hg.named("k5") == hg.clique(5)
        assert hg.named("k4minus") == hg.clique_minus4()
        assert hg.named("star4") == hg.star(4)
        with pytest.raises(hg.HypergraphError):
            hg.named("mystery")

    def test_bad_params(self):
        with pytest.raises(hg.HypergraphError):
            hg.clique(2)
        with pytest.raises(hg.HypergraphError):
            hg.star(1)


def brute_force_embedding(F, H):
    """Oracle: try every injection."""
    for img in itertools.permutations(range(H.n), F.n):
        if all(H.has_edge(img[a], img[b], img[c]) for a, b, c in F.edges):
            return img
    return None


class TestFindEmbedding:
    def test_single_edge(self):
        F = hg.make(3, [(0, 1, 2)])
        H = hg.make(5, [(1, 3, 4)])
        emb = hg.find_embedding(F, H)
        assert emb is not None
        assert hg.check_embedding(F, H, emb)

    def test_k4_not_in_k4_minus(self):
        assert hg.find_embedding(hg.clique(4), hg.clique_minus4()) is None

    def test_identity_always_embeds(self):
        for F in (hg.clique(5), hg.cycle5(), hg.fano(), hg.star(4)):
            emb = hg.find_embedding(F, F)
            assert emb is not None and hg.check_embedding(F, F, emb)

    def test_monotone_under_edge_addition(self):
        F = hg.cycle5()
        H = hg.make(7, [(i, (i + 1) % 5, (i + 2) % 5) for i in range(5)])
        assert hg.find_embedding(F, H) is not None
        bigger = hg.make(7, list(H.edges) + [(0, 5, 6), (1, 4, 6)])
        assert hg.find_embedding(F, bigger) is not None

    def test_agrees_with_brute_force(self):
        import numpy as np

        rng = np.random.default_rng(5)
        for _ in range(40):
            fn, hn = 4, 5
            fe = [t for t in itertools.combinations(range(fn), 3) if rng.random() < 0.5]
            he = [t for t in itertools.combinations(range(hn), 3) if rng.random() < 0.45]
            F, H = hg.make(fn, fe), hg.make(hn, he)
            got = hg.find_embedding(F, H)
            want = brute_force_embedding(F, H)
            assert (got is None) == (want is None)
            if got is not None:
                assert hg.check_embedding(F, H, got)


class TestFastContainment:
    def test_matches_literal_4_subset_scan(self):
        import numpy as np

        rng = np.random.default_rng(11)
        for trial in range(30):
            n = 8
            edges = [t for t in itertools.combinations(range(n), 3) if rng.random() < 0.3]
            H = hg.make(n, edges)
            has_k4 = has_k4m = False
            for q in itertools.combinations(range(n), 4):
                cnt = sum(H.has_edge(*tr) for tr in itertools.combinations(q, 3))
                if cnt == 4:
                    has_k4 = True
                if cnt >= 3:
                    has_k4m = True
            assert hg.contains_clique4(H) == has_k4
            assert hg.contains_clique4_minus(H) == has_k4m
