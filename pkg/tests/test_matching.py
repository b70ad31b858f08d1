import pytest

import oracles
from conftest import random_graphs
from kegraph.budget import Budget
from kegraph.errors import BudgetExceeded, GraphError, GraphMismatchError, NotMaximumError
from kegraph.generators import complete, complete_bipartite, cycle, empty, fixture, gnm, path
from kegraph.graph import Graph
from kegraph.matching import (Matching, certify_maximum, deficiency, enumerate_maximum_matchings,
                              exposed_vertices, gallai_edmonds, matching_number, maximum_matching,
                              maximum_matchings, mu_critical_vertices, mu_report, tutte_berge_bound)


class TestMatchingType:
    def test_rejects_shared_vertex(self):
        with pytest.raises(GraphError):
            Matching(path(3), [(0, 1), (1, 2)])

    def test_rejects_non_edge(self):
        with pytest.raises(GraphError):
            Matching(path(3), [(0, 2)])

    def test_labels_and_mate(self):
        g = fixture("fig1")
        m = Matching(g, g.eset(["au", "cv", "xy"]))
        assert m.partner("a") == g.vertex("u")
        assert not m.saturates("b")
        assert ("u", "a") in m

    def test_foreign_edge_set(self):
        g = cycle(4)
        with pytest.raises(GraphMismatchError):
            Matching(g, cycle(5).eset([(0, 1)]))


class TestMaximumMatching:
    def test_examples(self):
        g = fixture("fig1")
        assert len(maximum_matching(g)) == 3
        assert len(maximum_matching(empty(4))) == 0
        assert len(maximum_matching(cycle(5))) == 2
        assert len(maximum_matching(Graph(0))) == 0

    def test_exhaustive_small(self):
        for n in range(0, 7):
            for edges in oracles.labeled_graphs(n):
                g = Graph(n, edges)
                m = maximum_matching(g)
                assert len(m) == oracles.mu(g), edges

    def test_random_against_brute_force(self):
        for g in random_graphs(500, 1, 10, seed=11):
            m = maximum_matching(g)
            assert len(m) == oracles.mu(g)
            assert not oracles.has_augmenting_path(g, list(m))

    def test_warm_start(self):
        g = cycle(6)
        m = maximum_matching(g, Matching(g, [(1, 2)]))
        assert len(m) == 3

    def test_certificate(self):
        for g in random_graphs(200, 1, 30, seed=3):
            m = maximum_matching(g)
            barrier = certify_maximum(g, m)
            assert tutte_berge_bound(g, barrier) == len(m)

    def test_certificate_rejects_non_maximum(self):
        g = path(4)
        with pytest.raises(NotMaximumError) as info:
            certify_maximum(g, Matching(g, [(1, 2)]))
        assert info.value.path is not None

    def test_large_sparse(self):
        g = gnm(3000, 9000, seed=5)
        m = maximum_matching(g)
        certify_maximum(g, m)


class TestExposedAndDeficiency:
    def test_c4(self):
        g = cycle(4)
        assert len(exposed_vertices(g, Matching(g, [(0, 1), (2, 3)]))) == 0
        assert deficiency(g) == 0

    def test_c5(self):
        for m in maximum_matchings(cycle(5)):
            assert len(exposed_vertices(cycle(5), m)) == 1
        assert deficiency(cycle(5)) == 1

    def test_fig1(self):
        g = fixture("fig1")
        m = Matching(g, g.eset(["au", "cv", "xy"]))
        assert exposed_vertices(g, m).names() == ["b"]
        assert deficiency(g) == 1

    def test_invariant(self):
        for g in random_graphs(100, 1, 9, seed=4):
            for m in maximum_matchings(g):
                assert len(exposed_vertices(g, m)) == g.n - 2 * matching_number(g) == deficiency(g)

    def test_foreign_matching(self):
        with pytest.raises(GraphMismatchError):
            exposed_vertices(cycle(5), Matching(cycle(4), [(0, 1)]))

    def test_report(self):
        r = mu_report(fixture("fig1"))
        assert (r.mu, r.deficiency, len(r.exposed)) == (3, 1, 1)
        assert r.to_json()["mu"] == 3


class TestMuCritical:
    def test_examples(self):
        assert list(mu_critical_vertices(complete(2))) == [0, 1]
        assert list(mu_critical_vertices(path(3))) == [1]

    def test_fig222_g3(self):
        g = fixture("fig222_G3")
        crit = mu_critical_vertices(g)
        assert all(u not in crit or v not in crit for u, v in g.sorted_edges)

    @pytest.mark.parametrize("method", ["gallai-edmonds", "deletion"])
    def test_against_definition(self, method):
        for g in random_graphs(150, 1, 10, seed=5):
            assert list(mu_critical_vertices(g, method)) == oracles.mu_critical(g)

    def test_equals_saturated_by_all(self):
        for g in random_graphs(150, 1, 12, seed=6):
            ms = maximum_matchings(g)
            every = [v for v in g.vertices if all(m.saturates(v) for m in ms)]
            assert list(mu_critical_vertices(g, "deletion")) == every

    def test_gallai_edmonds_partition(self):
        g = fixture("fig1")
        ge = gallai_edmonds(g)
        assert set(ge.even) | set(ge.odd) | set(ge.rest) == set(g.vertices)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            mu_critical_vertices(path(3), "magic")


class TestEnumerate:
    def test_p3(self):
        ms = maximum_matchings(path(3))
        assert [list(m.edges) for m in ms] == [[(0, 1)], [(1, 2)]]

    def test_c4(self):
        assert len(maximum_matchings(cycle(4))) == 2

    def test_fig22_g3(self):
        g = fixture("fig22_G3")
        found = {m.edges for m in maximum_matchings(g)}
        assert g.eset(["xu", "yz"]) in found
        assert g.eset(["xu", "vz"]) in found

    @pytest.mark.parametrize("small", [True, False])
    def test_against_brute_force(self, small, monkeypatch):
        import kegraph.matching.enumerate as enum
        if not small:
            monkeypatch.setattr(enum, "_SMALL", -1)
        for g in random_graphs(200, 0, 10, seed=7):
            got = sorted(tuple(m.edges) for m in enumerate_maximum_matchings(g))
            assert got == oracles.maximum_matchings(g)
            assert len(set(got)) == len(got)

    def test_large_graph_path(self):
        g = complete_bipartite(8, 8)
        assert sum(1 for _ in enumerate_maximum_matchings(g, Budget(max_items=50000))) == 40320

    def test_budget(self):
        g = complete(8)  # 105 perfect matchings
        with pytest.raises(BudgetExceeded) as info:
            list(enumerate_maximum_matchings(g, Budget(max_items=10)))
        assert info.value.produced == 10
        assert len(list(enumerate_maximum_matchings(g, Budget(max_items=105)))) == 105
