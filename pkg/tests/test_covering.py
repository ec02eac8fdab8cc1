from itertools import combinations

import pytest
from hypothesis import assume, given, strategies as st

from cover_switch.core import Graph
from cover_switch.counting import binomial, count_cliques, count_independent_sets
from cover_switch.covering import (
    associated_hypergraph,
    check_observation,
    cl_clique_count,
    complete_graph,
    disjoint_union,
    edge_critical_reduction,
    induction_step_audit,
    is_edge_critical,
    is_kn_covered,
    make_cl,
    make_split,
)

from conftest import graphs
from oracles import brute_covered

K3 = complete_graph(3)
K4 = complete_graph(4)
BOWTIE = Graph(5, frozenset({(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)}))


def test_is_kn_covered_examples():
    assert is_kn_covered(complete_graph(5), 5)
    assert is_kn_covered(make_split(6, 2), 3)
    assert not is_kn_covered(Graph(3, frozenset({(0, 1), (1, 2)})), 3)
    assert is_kn_covered(Graph(4), 1)


@given(graphs(max_vertices=8), st.integers(1, 4))
def test_covered_matches_brute_force(g, n):
    assert is_kn_covered(g, n) == brute_covered(g, n)


@given(graphs(max_vertices=8), st.integers(1, 4))
def test_covered_iff_assoc_has_no_isolated_vertex(g, n):
    assoc = associated_hypergraph(g, n)
    assert all(len(e) == n for e in assoc.edges)
    assert is_kn_covered(g, n) == all(d > 0 for d in assoc.degrees())


def test_associated_hypergraph_examples():
    assert associated_hypergraph(make_split(6, 2), 3).edges == tuple((0, 1, x) for x in range(2, 6))
    assert len(associated_hypergraph(K4, 3).edges) == 4
    assert associated_hypergraph(Graph(4, frozenset({(0, 1), (1, 2), (2, 3)})), 3).edges == ()


def test_reduction_examples():
    split = make_split(7, 2)
    assert edge_critical_reduction(split, 3) == split
    # K4: (0,1) goes first, after which nothing else can be removed
    red = edge_critical_reduction(K4, 3)
    assert red.sorted_edges() == [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    m = Graph(6, frozenset({(0, 1), (2, 3), (4, 5)}))
    assert edge_critical_reduction(m, 2) == m


def test_reduction_rejects_uncovered():
    with pytest.raises(ValueError):
        edge_critical_reduction(Graph(3, frozenset({(0, 1)})), 2)


def test_k4_reduction_result_is_one_of_the_critical_subgraphs():
    # exhaust all spanning subgraphs of K4 that are critical K3-covered
    pairs = sorted(K4.edges)
    critical = set()
    for r in range(len(pairs) + 1):
        for sub in combinations(pairs, r):
            g = Graph(4, frozenset(sub))
            if is_edge_critical(g, 3):
                critical.add(g)
    assert len(critical) == 6
    assert edge_critical_reduction(K4, 3) in critical


@given(graphs(max_vertices=7), st.integers(1, 4))
def test_reduction_is_minimal_spanning_and_covered(g, n):
    assume(is_kn_covered(g, n))
    red = edge_critical_reduction(g, n)
    assert red.vertex_count == g.vertex_count
    assert red.edges <= g.edges
    assert is_edge_critical(red, n)
    for t in range(2, 5):
        assert count_independent_sets(red, t) >= count_independent_sets(g, t)


def test_criticality_report_on_split():
    rep = check_observation(make_split(8, 2), 3, 3)
    assert rep.all_hold and rep.min_degree == 2


def test_criticality_report_on_k4():
    rep = check_observation(K4, 3, 3)
    assert rep.is_covered and not rep.is_edge_critical


def test_criticality_report_on_two_triangles():
    rep = check_observation(disjoint_union(K3, K3), 3, 3)
    assert rep.all_hold and rep.min_degree == 2


@given(graphs(max_vertices=7), st.integers(1, 4), st.integers(2, 4))
def test_criticality_properties_on_every_edge_critical_graph(g, n, t):
    assume(is_edge_critical(g, n))
    rep = check_observation(g, n, t)
    assert rep.shadow_equals_graph and rep.it_equals and rep.min_degree_ok


def test_hyperedge_removal_need_not_isolate():
    # four triangles; 035 is covered by the other three, yet every edge is
    # needed, so the graph is edge-critical without the isolation property
    g = Graph(6, frozenset({(0, 1), (0, 3), (1, 3), (0, 4), (0, 5), (4, 5),
                            (2, 3), (2, 5), (3, 5)}))
    assert associated_hypergraph(g, 3).edges == ((0, 1, 3), (0, 3, 5), (0, 4, 5), (2, 3, 5))
    rep = check_observation(g, 3, 3)
    assert rep.is_edge_critical and rep.min_degree_ok
    assert not rep.hyperedge_removal_isolates


def test_make_split_examples():
    s = make_split(6, 2)
    assert len(s.edges) == 9 and count_independent_sets(s, 3) == 4
    assert make_split(5, 0) == Graph(5)
    assert make_split(5, 5) == complete_graph(5)
    with pytest.raises(ValueError):
        make_split(3, 4)


@pytest.mark.parametrize("N, n", [(N, n) for n in range(1, 5) for N in range(n, 9)])
def test_split_is_critical_and_attains_bound(N, n):
    s = make_split(N, n - 1)
    assert is_edge_critical(s, n)
    for t in range(2, 6):
        assert count_independent_sets(s, t) == binomial(N - n + 1, t)


def test_make_cl_examples():
    g = make_cl(3, 2, 1)
    assert g.vertex_count == 7
    assert associated_hypergraph(g, 3).edges == ((0, 1, 2), (1, 2, 3), (4, 5, 6))
    assert count_cliques(g, 3) == 3
    g = make_cl(3, 2, 0)
    assert g == disjoint_union(K3, K3) and count_cliques(g, 3) == 2
    path_plus = make_cl(2, 3, 1)
    assert path_plus.sorted_edges() == [(0, 1), (1, 2), (3, 4), (5, 6)]
    with pytest.raises(ValueError):
        make_cl(3, 1, 3)


@pytest.mark.parametrize("n, q, r", [(n, q, r) for n in range(1, 6) for q in range(1, 4) for r in range(n)])
def test_make_cl_is_covered_with_closed_form_counts(n, q, r):
    g = make_cl(n, q, r)
    assert g.vertex_count == q * n + r
    assert is_kn_covered(g, n)
    for t in range(2, n + 1):
        assert count_cliques(g, t) == cl_clique_count(n, q, r, t)


def test_induction_audit_on_split():
    a = induction_step_audit(make_split(9, 2), 3, 4)
    assert a.s == 1 and a.bound_holds and a.i_t == binomial(7, 4) == 35


def test_induction_audit_on_three_triangles():
    a = induction_step_audit(disjoint_union(K3, K3, K3), 3, 4)
    assert a.s == 3 and a.bound_holds and a.i_t == 0


def test_induction_audit_on_bowtie_plus_triangle():
    a = induction_step_audit(disjoint_union(BOWTIE, K3), 3, 4)
    assert a.bound_holds
    assert a.S == (1, 2)


def test_induction_audit_preconditions():
    with pytest.raises(ValueError):
        induction_step_audit(make_split(9, 2), 3, 3)
    with pytest.raises(ValueError):
        induction_step_audit(K4, 3, 4)
