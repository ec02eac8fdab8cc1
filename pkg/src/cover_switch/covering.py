"""K_n-covered graphs, their clique hypergraphs, and the named constructions."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, Hypergraph, popcount, two_shadow
from .counting import binomial, count_independent_sets, iter_cliques


@dataclass(frozen=True)
class CoverParams:
    n: int
    N: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.N < 0:
            raise ValueError("N must be nonnegative")

    @property
    def q(self) -> int:
        return self.N // self.n

    @property
    def r(self) -> int:
        return self.N % self.n


def covered_mask(g: Graph, n: int) -> int:
    """Bitmask of vertices that lie in at least one n-clique."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return g.full_mask
    out = 0
    adj = g.adj
    for v in range(g.vertex_count):
        if popcount(adj[v]) < n - 1:
            continue
        for _ in iter_cliques(adj, adj[v], n - 1):
            out |= 1 << v
            break
    return out


def is_kn_covered(g: Graph, n: int) -> bool:
    return covered_mask(g, n) == g.full_mask


def associated_hypergraph(g: Graph, n: int) -> Hypergraph:
    """n-uniform hypergraph whose edges are the n-cliques of ``g``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Hypergraph.from_masks(g.vertex_count, iter_cliques(g.adj, g.full_mask, n))


def is_edge_critical(g: Graph, n: int) -> bool:
    if not is_kn_covered(g, n):
        return False
    return all(not is_kn_covered(g.remove_edge(u, v), n) for u, v in g.edges)


def edge_critical_reduction(g: Graph, n: int) -> Graph:
    """Delete edges in increasing (u, v) order while coverage survives.

    The scan restarts from the smallest edge after every successful deletion,
    which makes the output a deterministic function of the labelled input.
    """
    if not is_kn_covered(g, n):
        raise ValueError(f"graph is not K_{n}-covered")
    cur = g
    progress = True
    while progress:
        progress = False
        for u, v in cur.sorted_edges():
            cand = cur.remove_edge(u, v)
            if is_kn_covered(cand, n):
                cur = cand
                progress = True
                break
    return cur


@dataclass(frozen=True)
class CriticalityReport:
    n: int
    t: int
    is_covered: bool
    is_edge_critical: bool
    shadow_equals_graph: bool
    it_equals: bool
    hyperedge_removal_isolates: bool
    min_degree: int
    vertex_count: int = -1

    @property
    def min_degree_ok(self) -> bool:
        # min_degree is reported as 0 for the empty graph, where the claim is vacuous
        return self.min_degree == self.n - 1 or self.min_degree == 0 and self.vertex_count == 0

    @property
    def all_hold(self) -> bool:
        return (self.is_covered and self.is_edge_critical and self.shadow_equals_graph
                and self.it_equals and self.hyperedge_removal_isolates and self.min_degree_ok)


def check_observation(g: Graph, n: int, t: int) -> CriticalityReport:
    """Evaluate the four structural properties of an edge-critical K_n-covered graph.

    Violations are reported, never raised, so this also serves as a test of
    the properties themselves on arbitrary inputs. The hyperedge-isolation
    property can fail on edge-critical graphs: the triangles 013, 035, 045 and
    235 cover 035 without making it removable.
    """
    covered = is_kn_covered(g, n)
    critical = covered and all(not is_kn_covered(g.remove_edge(u, v), n) for u, v in g.edges)
    assoc = associated_hypergraph(g, n)
    shadow_ok = two_shadow(assoc) == g
    it_ok = count_independent_sets(g, t) == count_independent_sets(assoc, t)
    deg = assoc.degrees()
    # removing edge e leaves some vertex of e with no edge at all
    isolates = all(any(deg[v] == 1 for v in e) for e in assoc.edges)
    return CriticalityReport(
        n=n, t=t, is_covered=covered, is_edge_critical=critical,
        shadow_equals_graph=shadow_ok, it_equals=it_ok,
        hyperedge_removal_isolates=isolates, min_degree=g.min_degree(), vertex_count=g.vertex_count,
    )


def complete_graph(n: int) -> Graph:
    return make_split(n, n)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = set()
    off = 0
    for g in graphs:
        edges.update((u + off, v + off) for u, v in g.edges)
        off += g.vertex_count
    return Graph(off, frozenset(edges))


def make_split(N: int, k: int) -> Graph:
    """S_{N,k}: a k-clique on 0..k-1 joined to an independent set on k..N-1."""
    if not 0 <= k <= N:
        raise ValueError(f"need 0 <= k <= N, got k={k}, N={N}")
    return Graph(N, frozenset((u, v) for u in range(k) for v in range(u + 1, N)))


def _clique_on(vertices: range) -> set[tuple[int, int]]:
    vs = list(vertices)
    return {(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]}


def make_cl(n: int, q: int, r: int) -> Graph:
    """Two K_n sharing n-r vertices plus q-1 disjoint K_n, on q*n + r vertices.

    With r = 0 the two copies coincide, giving q disjoint copies of K_n.
    """
    if n < 1 or q < 1 or not 0 <= r <= n - 1:
        raise ValueError(f"invalid parameters n={n}, q={q}, r={r}")
    edges = _clique_on(range(0, n)) | _clique_on(range(r, n + r))
    base = n + r
    for i in range(q - 1):
        edges |= _clique_on(range(base + i * n, base + (i + 1) * n))
    return Graph(q * n + r, frozenset(edges))


def cl_clique_count(n: int, q: int, r: int, t: int) -> int:
    """k_t of the two-overlapping-cliques construction."""
    if r == 0:
        return q * binomial(n, t)
    return (q + 1) * binomial(n, t) - binomial(n - r, t)


@dataclass(frozen=True)
class InductionAudit:
    v: int
    S: tuple[int, ...]
    s: int
    S_is_clique: bool
    S_in_unique_kn: bool
    rest_covered: bool
    i_t: int
    A: int
    B: int
    i_t_rest: int
    i_t1_rest: int
    bound: int
    chain: tuple[int, ...]
    bound_holds: bool


def induction_step_audit(g: Graph, n: int, t: int) -> InductionAudit:
    """Recompute the low-degree-clique split used in the t >= 4 induction step.

    Let v be the smallest vertex of degree n-1 and S the vertices of N[v] with
    degree n-1. Independent t-sets split into A (missing S) and B (one vertex
    of S); the audit checks |A| = i_t(G-S), |B| <= s i_{t-1}(G-S) and the
    chain of binomial bounds ending at C(N-n+1, t).
    """
    if t < 4:
        raise ValueError("the induction step needs t >= 4")
    if not is_edge_critical(g, n):
        raise ValueError(f"graph is not edge-critical K_{n}-covered")
    deg = g.degrees()
    v = next((x for x in range(g.vertex_count) if deg[x] == n - 1), None)
    if v is None:
        raise ValueError(f"no vertex of degree {n - 1}")
    S = tuple(sorted(u for u in g.closed_neighborhood(v) if deg[u] == n - 1))
    s = len(S)
    smask = sum(1 << u for u in S)
    is_clique = all(smask & ~(g.adj[u] | 1 << u) == 0 for u in S)
    holders = [c for c in iter_cliques(g.adj, g.full_mask, n) if c & smask == smask]
    rest = g.remove_vertices(S)
    rest_covered = is_kn_covered(rest, n)

    A = B = 0
    for I in _independent_sets(g, t):
        k = popcount(I & smask)
        if k == 0:
            A += 1
        elif k == 1:
            B += 1
    i_t = count_independent_sets(g, t)
    it_rest = count_independent_sets(rest, t)
    it1_rest = count_independent_sets(rest, t - 1)
    N = g.vertex_count
    m = N - s - n + 1
    chain = (
        i_t,
        it_rest + s * it1_rest,
        binomial(m, t) + s * binomial(m, t - 1),
        binomial(m, t) + sum(binomial(m + i, t - 1) for i in range(s)),
        binomial(N - n + 1, t),
    )
    ok = (
        is_clique and len(holders) == 1 and rest_covered
        and A + B == i_t and A == it_rest and B <= s * it1_rest
        and it_rest <= binomial(m, t) and it1_rest <= binomial(m, t - 1)
        and all(a <= b for a, b in zip(chain, chain[1:-1]))
        and chain[3] == chain[4]
    )
    return InductionAudit(
        v=v, S=S, s=s, S_is_clique=is_clique, S_in_unique_kn=len(holders) == 1,
        rest_covered=rest_covered, i_t=i_t, A=A, B=B, i_t_rest=it_rest,
        i_t1_rest=it1_rest, bound=binomial(N - n + 1, t), chain=chain, bound_holds=ok,
    )


def _independent_sets(g: Graph, t: int):
    def rec(cand: int, k: int, base: int):
        if k == 0:
            yield base
            return
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            yield from rec(cand & ~g.adj[v], k - 1, base | low)

    yield from rec(g.full_mask, t, 0)
