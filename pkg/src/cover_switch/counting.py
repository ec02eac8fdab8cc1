"""Exact independent-set, clique and triple counts."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import Graph, Hypergraph, popcount


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n or either argument is negative."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _count_independent(adj: tuple[int, ...], cand: int, t: int) -> int:
    if t == 0:
        return 1
    if popcount(cand) < t:
        return 0
    if t == 1:
        return popcount(cand)
    total = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        # only higher-numbered vertices remain in cand, so each set is counted once
        total += _count_independent(adj, cand & ~adj[v], t - 1)
    return total


def _count_cliques(adj: tuple[int, ...], cand: int, t: int) -> int:
    if t == 0:
        return 1
    if popcount(cand) < t:
        return 0
    if t == 1:
        return popcount(cand)
    total = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        total += _count_cliques(adj, cand & adj[v], t - 1)
    return total


def count_independent_sets(x: Graph | Hypergraph, t: int) -> int:
    """i_t: number of t-sets meeting every edge in at most one vertex."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    adj = x.adj if isinstance(x, Graph) else x.shadow_adj
    return _count_independent(adj, (1 << x.vertex_count) - 1, t)


def count_cliques(g: Graph, t: int) -> int:
    """k_t: number of t-vertex complete subgraphs."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return _count_cliques(g.adj, g.full_mask, t)


def iter_cliques(adj: tuple[int, ...], cand: int, t: int, base: int = 0):
    """Yield every t-clique inside ``cand`` as a bitmask (unioned with ``base``)."""
    if t == 0:
        yield base
        return
    while cand:
        if popcount(cand) < t:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        yield from iter_cliques(adj, cand & adj[v], t - 1, base | low)


@dataclass(frozen=True)
class TripleCensus:
    """Vertex triples grouped by how many edges they induce."""

    tau0: int
    tau1: int
    tau2: int
    tau3: int

    @property
    def total(self) -> int:
        return self.tau0 + self.tau1 + self.tau2 + self.tau3

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.tau0, self.tau1, self.tau2, self.tau3)


def triple_census(g: Graph) -> TripleCensus:
    n = g.vertex_count
    adj = g.adj
    tau = [0, 0, 0, 0]
    for u in range(n):
        for v in range(u + 1, n):
            uv = adj[u] >> v & 1
            higher = g.full_mask >> (v + 1) << (v + 1)
            both = popcount(adj[u] & adj[v] & higher)
            one = popcount((adj[u] ^ adj[v]) & higher)
            none = popcount(higher) - both - one
            tau[uv + 2] += both
            tau[uv + 1] += one
            tau[uv] += none
    return TripleCensus(*tau)


def degree_sum_mixed_triples(g: Graph) -> int:
    """Half of sum_v d(v)(N-1-d(v)), which counts triples inducing one or two edges."""
    n = g.vertex_count
    s = sum(d * (n - 1 - d) for d in g.degrees())
    assert s % 2 == 0
    return s // 2
