from math import prod

import pytest
from hypothesis import assume, given

from cover_switch.core import Hypergraph, is_connected, potential_f
from cover_switch.covering import associated_hypergraph, make_split
from cover_switch.iso import are_isomorphic
from cover_switch.switching import (
    default_ordering,
    edge_switch,
    has_full_degree_vertex,
    is_stable,
    majorization_witness,
    partition_audit,
    pivot_degree_sequences,
    preserves_support,
    stabilize,
    switch_keeps_connected,
)

from conftest import hypergraph_with_pivot, hypergraphs
from oracles import brute_independent, brute_switch


def H(n, *edges):
    return Hypergraph(n, tuple(edges))


# the six-vertex example, relabelled from 1..6 to 0..5
SIX = H(6, (0, 1, 2), (1, 3, 4), (2, 3, 5))


def test_switch_six_vertex_example():
    out = edge_switch(SIX, (0, 1, 2))
    assert out.result == H(6, (0, 1, 2), (0, 3, 4), (0, 3, 5))
    assert (out.f_before, out.f_after) == (8, 6)
    assert (out.i3_before, out.i3_after) == (brute_independent(SIX, 3), brute_independent(out.result, 3)) == (1, 2)
    assert out.changed and out.merged_duplicates == 0


def test_switch_single_edge_is_identity():
    h = H(3, (0, 1, 2))
    out = edge_switch(h, (0, 1, 2))
    assert out.result == h and not out.changed
    assert out.f_before == out.f_after == 1


def test_switch_merges_colliding_edges():
    h = H(6, (0, 1, 2, 3), (2, 3, 4, 5), (0, 1, 4, 5))
    out = edge_switch(h, (0, 1, 2, 3))
    assert out.result == H(6, (0, 1, 2, 3), (0, 1, 4, 5))
    assert out.merged_duplicates == 1
    assert (out.f_before, out.f_after) == (64, 4)


def test_switch_rejects_non_edge():
    with pytest.raises(ValueError):
        edge_switch(SIX, (0, 1, 3))
    with pytest.raises(ValueError):
        edge_switch(SIX, (0, 0, 1))


def test_default_ordering_examples():
    assert default_ordering(SIX, (0, 1, 2)) == (1, 2, 0)
    assert default_ordering(H(3, (0, 1, 2)), (0, 1, 2)) == (0, 1, 2)
    assert default_ordering(H(3, (0, 1), (1, 2)), (1, 2)) == (1, 2)


def test_stabilize_already_stable():
    res = stabilize(H(5, (0, 1, 2), (2, 3, 4)))
    assert res.steps == 0 and res.f_trace == [2]


@pytest.mark.parametrize("N, n", [(6, 3), (7, 3), (8, 4), (5, 2)])
def test_split_hypergraph_is_stable(N, n):
    h = associated_hypergraph(make_split(N, n - 1), n)
    assert is_stable(h)
    assert stabilize(h).steps == 0


def test_stabilize_six_vertex_example():
    res = stabilize(SIX)
    assert res.steps >= 1
    assert all(b < a for a, b in zip(res.f_trace, res.f_trace[1:]))
    assert is_stable(res.result) and has_full_degree_vertex(res.result)
    assert potential_f(res.result) == min(res.f_trace)


def test_is_stable_examples():
    assert is_stable(H(3, (0, 1, 2)))
    assert not is_stable(SIX)


def test_stabilize_with_isolated_vertex_terminates():
    # f is 0 throughout, so the trace cannot decrease; termination still holds
    res = stabilize(H(7, (0, 1, 2), (1, 3, 4), (2, 3, 5)))
    assert is_stable(res.result)
    assert set(res.f_trace) == {0}


def test_partition_audit_isolated_pivot():
    a = partition_audit(H(6, (0, 1, 2), (3, 4), (4, 5)), (0, 1, 2))
    assert a.t_counts == a.t_prime_counts and a.ok


def test_partition_audit_six_vertex_example():
    a = partition_audit(SIX, (0, 1, 2))
    # S covers every vertex, so only T1 and T4 can be nonempty
    assert a.t_counts == (0, 0, 0, 1)
    assert a.t_prime_counts == (0, 0, 0, 2)
    assert a.ok


def test_partition_audit_with_isolated_vertex():
    a = partition_audit(H(6, (0, 1, 2), (2, 3, 4)), (0, 1, 2))
    assert a.t_counts[1] == a.t_prime_counts[1] == 0
    assert a.ok


def test_partition_audit_third_class_can_grow():
    # vertex 4 lies in two edges meeting the pivot in different places; the
    # third class then gains a set after switching
    h = H(8, (0,), (0, 2, 3, 5), (0, 4, 7), (0, 5, 6), (2, 4, 5))
    a = partition_audit(h, (5, 6, 0))
    assert a.t_counts == (3, 0, 5, 3)
    assert a.t_prime_counts == (3, 0, 6, 3)
    assert a.per_class_ok == (True, True, False, True)
    assert a.i3_before < a.i3_after


def test_majorization_examples():
    w = majorization_witness((2, 2, 1), (3, 1, 1))
    assert w.steps == ((0, 1),) and w.products == (4, 3)
    w = majorization_witness((3, 2, 2), (3, 2, 2))
    assert w.steps == () and w.products == (12,)
    with pytest.raises(ValueError):
        majorization_witness((3, 1, 1), (1, 3, 1))


def test_majorization_six_vertex_example():
    before, after = pivot_degree_sequences(SIX, (0, 1, 2))
    assert (before, after) == ([2, 2, 1], [3, 1, 1])


@given(hypergraph_with_pivot())
def test_switch_matches_set_transcription(hp):
    h, e0 = hp
    out = edge_switch(h, e0, with_i3=False)
    assert {frozenset(e) for e in out.result.edges} == brute_switch(h, e0)


@given(hypergraph_with_pivot())
def test_switch_monotone(hp):
    h, e0 = hp
    out = edge_switch(h, e0)
    assert out.i3_after >= out.i3_before
    assert out.f_after <= out.f_before
    if not out.changed:
        assert out.i3_after == out.i3_before and out.f_after == out.f_before


@given(hypergraph_with_pivot())
def test_f_equality_iff_isomorphic_without_isolated_vertices(hp):
    h, e0 = hp
    assume(potential_f(h) > 0)
    out = edge_switch(h, e0, with_i3=False)
    assert (out.f_after == out.f_before) == (not out.changed)


@given(hypergraph_with_pivot())
def test_switch_preserves_vertex_count_support_and_connectivity(hp):
    h, e0 = hp
    assert edge_switch(h, e0, with_i3=False).result.vertex_count == h.vertex_count
    assert preserves_support(h, e0)
    if is_connected(h):
        assert switch_keeps_connected(h, e0)


@given(hypergraph_with_pivot())
def test_partition_classes(hp):
    h, e0 = hp
    a = partition_audit(h, e0)
    assert a.sums_ok
    assert a.t_counts[0] == a.t_prime_counts[0]
    assert a.t_counts[1] == a.t_prime_counts[1]
    assert a.t_counts[2] <= a.t_prime_counts[2]
    assert a.t_counts[3] <= a.t_prime_counts[3]


@given(hypergraph_with_pivot())
def test_majorization_witness_on_real_switches(hp):
    h, e0 = hp
    # merged duplicates lower the degree total; the unit-transfer chain needs equal totals
    assume(edge_switch(h, e0, with_i3=False).merged_duplicates == 0)
    before, after = pivot_degree_sequences(h, e0)
    w = majorization_witness(before, after)
    assert w.products[0] == prod(before) and w.products[-1] == prod(after)
    assert all(b < a for a, b in zip(w.products, w.products[1:]))
    assert (len(w.steps) == 0) == (sorted(before) == sorted(after))
    assert len(w.steps) == sum(abs(a - b) for a, b in zip(after, before)) // 2


@given(hypergraphs(max_vertices=7, max_edges=5))
def test_stabilize_reaches_stable_hypergraph(h):
    res = stabilize(h)
    assert is_stable(res.result)
    if potential_f(h) > 0:
        assert all(b < a for a, b in zip(res.f_trace, res.f_trace[1:]))
        assert res.steps <= res.f_trace[0]
    if is_connected(h):
        assert is_connected(res.result)
        assert has_full_degree_vertex(res.result)


@given(hypergraphs(max_vertices=7, max_edges=5))
def test_switch_result_is_not_isomorphic_when_f_drops(h):
    for e in h.edges:
        out = edge_switch(h, default_ordering(h, e), with_i3=False)
        if out.f_after < out.f_before:
            assert not are_isomorphic(out.result, h)

