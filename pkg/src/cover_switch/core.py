"""Graphs, hypergraphs and the basic quantities defined on them.

Vertices are dense integers ``0..N-1``. Both containers are immutable; edges
are kept in a canonical sorted form so equality and hashing are well defined.
Vertex sets are handled internally as int bitmasks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import prod
from typing import Iterable, Sequence


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for N={self.vertex_count}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> Graph:
        n = len(adj)
        return cls(n, frozenset((u, v) for u in range(n) for v in bits(adj[u] >> (u + 1) << (u + 1))))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask per vertex."""
        a = [0] * self.vertex_count
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def closed_neighborhood(self, v: int) -> set[int]:
        return set(bits(self.adj[v])) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def remove_edge(self, u: int, v: int) -> Graph:
        return Graph(self.vertex_count, self.edges - {(min(u, v), max(u, v))})

    def induced(self, keep: Iterable[int]) -> Graph:
        """``G[S]`` relabelled to ``0..|S|-1`` preserving vertex order."""
        order = sorted(set(keep))
        idx = {v: i for i, v in enumerate(order)}
        return Graph(len(order), frozenset((idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx))

    def remove_vertices(self, drop: Iterable[int]) -> Graph:
        drop = set(drop)
        return self.induced(v for v in range(self.vertex_count) if v not in drop)

    def edges_between(self, s: Iterable[int], t: Iterable[int]) -> set[tuple[int, int]]:
        """``E_G(S, T)``: edges with one end in ``s`` and the other in ``t``."""
        s, t = set(s), set(t)
        return {(u, v) for u, v in self.edges if (u in s and v in t) or (u in t and v in s)}

    def is_connected(self) -> bool:
        """Ordinary graph connectivity (a single vertex is connected)."""
        if self.vertex_count == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def to_hypergraph(self) -> Hypergraph:
        return graph_to_hypergraph(self)


@dataclass(frozen=True)
class Hypergraph:
    """Simple hypergraph; edges are nonempty, pairwise distinct vertex sets.

    ``edges`` is stored as a tuple of sorted tuples in lexicographic order.
    """

    vertex_count: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        norm = []
        for e in self.edges:
            s = tuple(sorted(set(e)))
            if len(s) != len(tuple(e)):
                raise ValueError(f"edge {tuple(e)} repeats a vertex")
            if not s:
                raise ValueError("empty edge")
            if s[0] < 0 or s[-1] >= self.vertex_count:
                raise ValueError(f"edge {s} out of range for N={self.vertex_count}")
            norm.append(s)
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_masks(cls, vertex_count: int, masks: Iterable[int]) -> Hypergraph:
        return cls(vertex_count, tuple(tuple(bits(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def shadow_adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks of the 2-shadow."""
        a = [0] * self.vertex_count
        for m in self.masks:
            for v in bits(m):
                a[v] |= m
        return tuple(x & ~(1 << v) for v, x in enumerate(a))

    def degrees(self) -> list[int]:
        d = [0] * self.vertex_count
        for e in self.edges:
            for v in e:
                d[v] += 1
        return d

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, e: Iterable[int]) -> bool:
        return mask_of(e) in set(self.masks)

    def __len__(self) -> int:
        return len(self.edges)


def graph_to_hypergraph(g: Graph) -> Hypergraph:
    return Hypergraph(g.vertex_count, tuple(g.sorted_edges()))


def hypergraph_to_graph(h: Hypergraph) -> Graph:
    if any(len(e) != 2 for e in h.edges):
        raise ValueError("hypergraph is not 2-uniform")
    return Graph(h.vertex_count, frozenset(h.edges))


def shadow(h: Hypergraph, s: int) -> Hypergraph:
    """The s-shadow: every s-subset of some edge of ``h``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    sets = set()
    for e in h.edges:
        sets.update(combinations(e, s))
    return Hypergraph(h.vertex_count, tuple(sets))


def two_shadow(h: Hypergraph) -> Graph:
    return hypergraph_to_graph(shadow(h, 2))


def set_degree(h: Hypergraph, s: Iterable[int]) -> int:
    """Number of edges of ``h`` containing the vertex set ``s``."""
    m = mask_of(s)
    return sum(1 for e in h.masks if e & m == m)


def degree1(h: Hypergraph, v: int) -> int:
    if not 0 <= v < h.vertex_count:
        raise ValueError(f"vertex {v} out of range for N={h.vertex_count}")
    bit = 1 << v
    return sum(1 for e in h.masks if e & bit)


def min_s_degree(h: Hypergraph, s: int) -> int:
    """delta_s(h); by convention 0 when there are fewer than ``s`` vertices."""
    return min((set_degree(h, c) for c in combinations(range(h.vertex_count), s)), default=0)


def potential_f(h: Hypergraph) -> int:
    """Product of all vertex 1-degrees, as an exact Python int."""
    return prod(h.degrees())


def is_connected(h: Hypergraph) -> bool:
    """Connected with no isolated vertex; the empty hypergraph counts as connected."""
    n = h.vertex_count
    if n == 0:
        return True
    adj = h.shadow_adj
    covered = 0
    for m in h.masks:
        covered |= m
    if covered != (1 << n) - 1:
        return False
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def remove_vertices(h: Hypergraph, a: Iterable[int]) -> Hypergraph:
    """``H - A``: drop the vertices of ``a`` and shrink every edge accordingly.

    Remaining vertices are relabelled in increasing order; edges that become
    empty are dropped and edges that coincide are merged.
    """
    a = set(a)
    if any(not 0 <= v < h.vertex_count for v in a):
        raise ValueError("vertex out of range")
    keep = [v for v in range(h.vertex_count) if v not in a]
    idx = {v: i for i, v in enumerate(keep)}
    edges = {tuple(idx[v] for v in e if v in idx) for e in h.edges}
    edges.discard(())
    return Hypergraph(len(keep), tuple(edges))
