import pytest

import oracles
from conftest import random_graphs
from kegraph.analysis import (Analysis, CHECKS, bounds_check, check_core_structure,
                              check_identities, check_prop3, check_saturation_prop,
                              check_star_decomposition, check_theorem1, is_ke,
                              ke_decomposition, run_check)
from kegraph.budget import Budget
from kegraph.generators import (FIXTURES, bipartite_gnp, complete, complete_bipartite, cycle,
                                empty, fixture, path)
from kegraph.graph import Graph, delete_vertices, is_independent
from kegraph.matching import maximum_matchings, mu_critical_vertices

KE_FIXTURES = {"fig1", "fig22_G1", "fig22_G2"}


def labels(g, vs):
    return {g.label(v) for v in vs}


class TestIsKE:
    def test_fig1(self):
        r = is_ke(fixture("fig1"))
        assert (r.n, r.alpha, r.mu, r.deficiency) == (7, 4, 3, 1)
        assert r.verdicts == dict.fromkeys(("definition", "theorem1", "sterboul", "larson"), True)
        assert r.witness is None and r.decomposition is not None
        assert r.d == 1 and labels(fixture("fig1"), r.core) == set("abc")

    def test_fig22_g3(self):
        g = fixture("fig22_G3")
        r = is_ke(g)
        assert r.verdict is False and not any(r.verdicts.values())
        v = r.theorem1_violation
        assert labels(g, v.s) == {"u", "v"}
        assert {frozenset(g.edge_label(e)) for e in v.matching} == {frozenset("xu"), frozenset("yz")}
        assert frozenset(g.edge_label(v.edge)) == frozenset("yz")
        assert r.witness is not None and r.decomposition is None

    @pytest.mark.parametrize("name", FIXTURES)
    def test_fixture_verdicts(self, name):
        g = fixture(name)
        assert is_ke(g).verdict == (name in KE_FIXTURES) == oracles.is_ke(g)

    def test_single_methods(self):
        g = cycle(5)
        for m in ("definition", "theorem1", "sterboul", "larson"):
            r = is_ke(g, m)
            assert r.verdicts == {m: False}
        assert is_ke(g, "sterboul").alpha is None
        assert is_ke(cycle(6), "sterboul").alpha == 3
        with pytest.raises(ValueError):
            is_ke(g, "nope")

    def test_bipartite(self):
        for seed in range(40):
            g = bipartite_gnp(7, 9, 0.3, seed=seed)
            assert is_ke(g).verdict is True

    def test_empty_graphs(self):
        assert is_ke(Graph(0)).verdict is True
        assert is_ke(empty(4)).verdict is True
        assert is_ke(complete(1)).verdict is True

    def test_budget_indeterminate(self):
        g = Graph(20, [(2 * i, 2 * i + 1) for i in range(10)])
        r = is_ke(g, budget=Budget(max_items=50))
        assert set(r.indeterminate) == {"theorem1", "larson"}
        assert r.verdicts["theorem1"] is None and r.verdicts["definition"] is True
        assert r.verdicts["sterboul"] is True and r.verdict is True

    def test_random_agreement(self):
        for g in random_graphs(200, 1, 11, seed=31):
            assert is_ke(g).verdict == oracles.is_ke(g)

    def test_json(self):
        out = is_ke(fixture("fig1")).to_json()
        assert set(out) == {"n", "alpha", "mu", "deficiency", "d", "core", "verdicts", "witness",
                            "decomposition", "theorem1Violation", "indeterminate"}
        assert out["decomposition"]["S"] and out["witness"] is None


class TestTheorem1:
    @pytest.mark.parametrize("name", ["fig22_G1", "fig22_G2"])
    def test_ke_fixtures(self, name):
        r = check_theorem1(fixture(name))
        assert r.holds_for_some_s and r.holds_for_all and r.exists_s_per_matching
        assert r.status == "pass" and r.violation is None

    def test_g3(self):
        g = fixture("fig22_G3")
        r = check_theorem1(g)
        assert not r.holds_for_some_s and not r.holds_for_all and r.status == "pass"
        s = {g.vertex("u"), g.vertex("v")}
        m2 = {frozenset((g.vertex("x"), g.vertex("u"))), frozenset((g.vertex("v"), g.vertex("z")))}
        found = [m for m in maximum_matchings(g) if {frozenset(e) for e in m} == m2]
        assert found and all((a in s) != (b in s) for a, b in found[0])

    def test_k2(self):
        r = check_theorem1(complete(2))
        assert r.holds_for_all and r.matchings == 1 and r.omega == 2

    def test_collapse_on_ke_graphs(self):
        for g in random_graphs(150, 1, 10, seed=32):
            r = check_theorem1(g)
            assert r.status == "pass"
            if oracles.is_ke(g):
                assert r.holds_for_some_s == r.holds_for_every_s is True

    def test_budget(self):
        g = Graph(20, [(2 * i, 2 * i + 1) for i in range(10)])
        assert check_theorem1(g, Budget(max_items=50)).status == "indeterminate"


class TestDecomposition:
    def test_fig1(self):
        g = fixture("fig1")
        dec = ke_decomposition(g)
        assert len(dec.s) == 4 and labels(g, dec.s) >= set("abc")
        assert len(dec.m) == dec.h.n == 3
        assert check_star_decomposition(g, dec.s, dec.h, dec.m)

    def test_c4_and_k3(self):
        dec = ke_decomposition(cycle(4))
        assert list(dec.s) in ([0, 2], [1, 3]) and dec.h.n == 2 and len(dec.m) == 2
        assert ke_decomposition(complete(3)) is None

    def test_rejects_bad_certificates(self):
        g = cycle(4)
        dec = ke_decomposition(g)
        assert not check_star_decomposition(g, [0, 1], delete_vertices(g, [0, 1]), [(1, 2), (0, 3)])
        assert not check_star_decomposition(g, dec.s, dec.h, [(0, 1)])
        assert not check_star_decomposition(g, dec.s, path(2), dec.m)

    def test_soundness(self):
        for g in random_graphs(200, 1, 12, seed=33):
            dec = ke_decomposition(g)
            assert (dec is not None) == oracles.is_ke(g)
            if dec is not None:
                assert is_independent(g, dec.s)
                assert check_star_decomposition(g, dec.s, dec.h, dec.m)


class TestCoreStructure:
    def test_fig1(self):
        g = fixture("fig1")
        r = check_core_structure(g)
        assert r.status == "pass"
        assert set(r.details["neighborhood"]) == {"u", "v"}
        assert set(r.details["H"]["vertices"]) == {"x", "y"}
        assert r.details["H"]["perfectMatching"] and r.details["extensions"]

    def test_c4(self):
        r = check_core_structure(cycle(4))
        assert r.status == "pass" and r.details["core"] == [] and len(r.details["H"]["vertices"]) == 4

    def test_not_ke(self):
        assert check_core_structure(cycle(5)).status == "inapplicable"

    def test_bipartite(self):
        for seed in range(30):
            assert check_core_structure(bipartite_gnp(5, 6, 0.35, seed=seed)).status == "pass"


class TestProp3:
    def test_fig1(self):
        r = check_prop3(fixture("fig1"))
        assert r.status == "pass" and r.details["exposedInCore"] and r.details["criticalEndpoint"]

    @pytest.mark.parametrize("name", ["fig33_W", "fig33_H"])
    def test_converse_fails(self, name):
        r = check_prop3(fixture(name))
        assert r.status == "inapplicable" and r.details["exposedInCore"]
        assert not oracles.is_ke(fixture(name))

    def test_fig222(self):
        g1 = check_prop3(fixture("fig222_G1"))
        assert g1.status == "inapplicable" and g1.details["criticalEndpoint"]
        g2 = fixture("fig222_G2")
        crit = mu_critical_vertices(g2)
        assert g2.vertex("a") not in crit and g2.vertex("b") not in crit
        assert "ab" in check_prop3(g2).details["edgesWithoutCriticalEndpoint"] or \
            "ba" in check_prop3(g2).details["edgesWithoutCriticalEndpoint"]
        g3 = fixture("fig222_G3")
        assert len(mu_critical_vertices(g3)) == 0

    def test_ke_samples(self):
        for g in random_graphs(150, 1, 10, seed=34):
            if oracles.is_ke(g):
                assert check_prop3(g).status == "pass"


class TestSaturation:
    def test_fig1_core_vertex_always_saturated(self):
        g = fixture("fig1")
        c = g.vertex("c")
        assert c in Analysis(g).core
        assert all(m.mate[c] != -1 for m in maximum_matchings(g))
        assert check_saturation_prop(g, "c").status == "inapplicable"
        assert not oracles.is_ke(delete_vertices(g, [c]))

    def test_star_leaf(self):
        g = complete_bipartite(1, 3)
        r = check_saturation_prop(g, 1)
        assert r.status == "pass" and r.details["inCore"] and r.details["unsaturated"]

    def test_c4(self):
        for v in range(4):
            r = check_saturation_prop(cycle(4), v)
            assert r.status == "pass" and not r.details["inCore"] and not r.details["unsaturated"]

    def test_bipartite_every_vertex(self):
        for seed in range(20):
            g = bipartite_gnp(5, 6, 0.4, seed=seed)
            for v in g.vertices:
                assert check_saturation_prop(g, v).status == "pass"


class TestBounds:
    def test_k1(self):
        r = bounds_check(complete(1))
        assert r.status == "pass" and r.details["alpha"] + r.details["mu"] == 1

    def test_g2(self):
        r = bounds_check(fixture("fig22_G2"))
        assert r.status == "pass" and r.details["checks"]["perfectMatchingEquivalence"]
        assert r.details["alpha"] == r.details["mu"]

    def test_c5(self):
        r = bounds_check(cycle(5))
        assert r.status == "pass" and r.details["alpha"] + r.details["mu"] == 4
        assert "alphaAtLeastMu" not in r.details["checks"]

    def test_empty(self):
        assert bounds_check(Graph(0)).status == "pass"


class TestIdentities:
    def test_fig1(self):
        r = check_identities(fixture("fig1"))
        assert r.status == "pass" and set(r.details["values"].values()) == {1}

    def test_c5(self):
        r = check_identities(cycle(5))
        assert r.status == "pass" and not r.details["allOmegaCritical"]

    def test_random(self):
        for g in random_graphs(200, 1, 10, seed=35):
            assert check_identities(g).status == "pass"


class TestRunCheck:
    @pytest.mark.parametrize("name", FIXTURES)
    def test_all_checks_pass_on_fixtures(self, name):
        out = run_check(fixture(name), "all")
        assert [r.property for r in out] == list(CHECKS)
        assert all(r.passed for r in out), [r.to_json() for r in out if not r.passed]

    def test_unknown(self):
        with pytest.raises(ValueError):
            run_check(cycle(4), "nope")
