"""Randomized cross-checks driven by hypothesis."""

import itertools

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from kegraph.analysis import (bounds_check, check_identities, check_prop3,
                              check_star_decomposition, is_ke, ke_decomposition)
from kegraph.graph import Graph, delete_vertices, is_independent, parse_graph, serialize_graph
from kegraph.independence import (core, critical_difference, critical_independence_number,
                                  independence_number, is_critical, maximum_independent_sets)
from kegraph.matching import (deficiency, exposed_vertices, find_flower_or_posy,
                              find_forbidden_configuration, maximum_matching,
                              maximum_matchings, validate_witness)

PROFILE = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, n_max=9):
    n = draw(st.integers(0, n_max))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@PROFILE
@given(graphs())
def test_roundtrip(g):
    for fmt in ("edge-list", "dimacs"):
        h = parse_graph(serialize_graph(g, fmt), fmt)
        assert h.n == g.n and h.sorted_edges == g.sorted_edges


@PROFILE
@given(graphs())
def test_matching_is_maximum(g):
    m = maximum_matching(g)
    assert len(m) == oracles.mu(g)
    assert len(exposed_vertices(g, m)) == g.n - 2 * len(m) == deficiency(g)
    assert not oracles.has_augmenting_path(g, list(m))


@PROFILE
@given(graphs())
def test_recognizers_agree_with_definition(g):
    assert is_ke(g).verdict == oracles.is_ke(g)


@PROFILE
@given(graphs())
def test_independence_oracles(g):
    assert independence_number(g) == oracles.alpha(g)
    assert list(core(g)) == oracles.core(g)
    assert critical_difference(g) == oracles.critical_difference(g)
    assert critical_independence_number(g) == oracles.alpha_c(g)


@PROFILE
@given(graphs())
def test_larson_and_omega_criticality(g):
    ke = oracles.is_ke(g)
    assert critical_independence_number(g) <= independence_number(g)
    assert (critical_independence_number(g) == independence_number(g)) == ke
    d = critical_difference(g)
    assert all(is_critical(g, s, d) for s in maximum_independent_sets(g)) == ke


@PROFILE
@given(graphs())
def test_witnesses(g):
    ke = oracles.is_ke(g)
    for m in maximum_matchings(g)[:6]:
        for w in (find_flower_or_posy(g, m), find_forbidden_configuration(g, m)):
            assert (w is None) == ke
            assert w is None or validate_witness(w)
    dec = ke_decomposition(g)
    assert (dec is not None) == ke
    if dec is not None:
        assert is_independent(g, dec.s) and check_star_decomposition(g, dec.s, dec.h, dec.m)


@PROFILE
@given(graphs())
def test_checkers(g):
    assert bounds_check(g).status == "pass"
    assert check_identities(g).status == "pass"
    assert check_prop3(g).status in ("pass", "inapplicable")


@PROFILE
@given(graphs(8), st.data())
def test_vertex_deletion_keeps_mu_monotone(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    mu, mu_v = len(maximum_matching(g)), len(maximum_matching(delete_vertices(g, [v])))
    assert mu - 1 <= mu_v <= mu
