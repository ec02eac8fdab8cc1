"""Canonical forms and isomorphism tests for small graphs and hypergraphs.

The labeler is a small individualization-refinement search: refine an
ordered vertex partition to an equitable one, branch on the first
non-singleton cell, and keep the lexicographically smallest relabelled
adjacency over all leaves. Automorphisms found along the way prune sibling
branches (orbit pruning) and let the search jump back to the node where the
current path left the first path. Hypergraphs go through their vertex/edge
incidence graph with the two sides kept in separate cells.
"""
from __future__ import annotations

from .core import Graph, Hypergraph, bits

GRAPH_LIMIT = 12
HYPERGRAPH_LIMIT = 10


class SizeLimitError(ValueError):
    pass


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Split cells until every vertex of a cell sees the same count in every cell."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple(bin(adj[v] & m).count("1") for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new.append(c)
                continue
            split = True
            for k in keys:
                new.append([v for v in c if sig[v] == k])
        cells = new
        if not split:
            return cells


class _Search:
    def __init__(self, adj: list[int]):
        self.adj = adj
        self.n = len(adj)
        self.first: tuple | None = None
        self.best: tuple | None = None
        self.autos: list[list[int]] = []

    def certificate(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        cert = []
        for v in order:
            m = 0
            for u in bits(self.adj[v]):
                m |= 1 << pos[u]
            cert.append(m)
        return tuple(cert)

    def orbit_roots(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[a] = b
        return [find(v) for v in range(self.n)]

    def leaf(self, order: list[int], path: list[int]) -> int | None:
        cert = self.certificate(order)
        if self.first is None:
            self.first = self.best = (cert, order, path)
            return None
        for ref in (self.first, self.best):
            if cert == ref[0]:
                # ref order -> this order is an automorphism
                g = [0] * self.n
                for a, b in zip(ref[1], order):
                    g[a] = b
                self.autos.append(g)
                common = 0
                for x, y in zip(ref[2], path):
                    if x != y:
                        break
                    common += 1
                return common
        if cert < self.best[0]:
            self.best = (cert, order, path)
        return None

    def run(self, cells: list[list[int]], path: list[int]) -> int | None:
        cells = _refine(self.adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return self.leaf([c[0] for c in cells], path)
        depth = len(path)
        tried: list[int] = []
        for v in sorted(cells[target]):
            if tried:
                roots = self.orbit_roots(path)
                if any(roots[v] == roots[u] for u in tried):
                    continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            jump = self.run(child, path + [v])
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_order(adj: list[int], cells: list[list[int]]) -> list[int]:
    """Vertices listed in canonical position order, respecting the initial cell order."""
    if not adj:
        return []
    s = _Search(list(adj))
    s.run([list(c) for c in cells if c], [])
    return s.best[1]


def _graph_key(g: Graph) -> bytes:
    n = g.vertex_count
    order = canonical_order(list(g.adj), [list(range(n))])
    pos = {v: i for i, v in enumerate(order)}
    val = 0
    for u, v in g.edges:
        a, b = sorted((pos[u], pos[v]))
        val |= 1 << (a * n + b)
    nbytes = (n * n + 7) // 8
    return b"G" + bytes([n]) + val.to_bytes(nbytes, "big")


def incidence_adjacency(h: Hypergraph) -> list[int]:
    """Bipartite incidence graph: vertices first, then one node per edge."""
    n, m = h.vertex_count, len(h.edges)
    adj = [0] * (n + m)
    for j, e in enumerate(h.edges):
        for v in e:
            adj[v] |= 1 << (n + j)
            adj[n + j] |= 1 << v
    return adj


def _hypergraph_key(h: Hypergraph) -> bytes:
    n, m = h.vertex_count, len(h.edges)
    order = canonical_order(incidence_adjacency(h), [list(range(n)), list(range(n, n + m))])
    pos = {v: i for i, v in enumerate(order[:n])}
    relabelled = sorted(sum(1 << pos[v] for v in e) for e in h.edges)
    width = (n + 7) // 8 or 1
    body = b"".join(x.to_bytes(width, "big") for x in relabelled)
    return b"H" + bytes([n]) + m.to_bytes(2, "big") + body


def canonical_key(x: Graph | Hypergraph, limit: int | None = None) -> bytes:
    """Relabelling-invariant serialization; equal iff the inputs are isomorphic."""
    if isinstance(x, Graph):
        lim = GRAPH_LIMIT if limit is None else limit
        if x.vertex_count > lim:
            raise SizeLimitError(f"graph on {x.vertex_count} vertices exceeds limit {lim}")
        return _graph_key(x)
    lim = HYPERGRAPH_LIMIT if limit is None else limit
    if x.vertex_count > lim:
        raise SizeLimitError(f"hypergraph on {x.vertex_count} vertices exceeds limit {lim}")
    return _hypergraph_key(x)


def are_isomorphic(a: Graph | Hypergraph, b: Graph | Hypergraph, limit: int | None = None) -> bool:
    if type(a) is not type(b):
        return False
    if a.vertex_count != b.vertex_count or len(a.edges) != len(b.edges):
        return False
    return canonical_key(a, limit) == canonical_key(b, limit)


def relabel(x: Graph | Hypergraph, perm: list[int]) -> Graph | Hypergraph:
    """Apply the vertex map ``v -> perm[v]``."""
    if isinstance(x, Graph):
        return Graph(x.vertex_count, frozenset((perm[u], perm[v]) for u, v in x.edges))
    return Hypergraph(x.vertex_count, tuple(tuple(perm[v] for v in e) for e in x.edges))
