"""Plain-text formats for graphs and hypergraphs.

Graph::

    graph N M
    u v          (M lines, 0 <= u < v < N)

Hypergraph::

    hypergraph N M
    k v1 ... vk  (M lines, k >= 1, strictly increasing ids)

Several objects may follow each other in one stream; blank lines between
blocks are ignored.
"""
from __future__ import annotations

from typing import Iterator

from .core import Graph, Hypergraph


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.vertex_count} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"hypergraph {h.vertex_count} {len(h.edges)}"]
    lines += [" ".join(map(str, (len(e), *e))) for e in h.edges]
    return "\n".join(lines) + "\n"


def format_any(x: Graph | Hypergraph) -> str:
    return format_graph(x) if isinstance(x, Graph) else format_hypergraph(x)


def _ints(lineno: int, parts: list[str]) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(parts)!r}") from None


def iter_objects(text: str) -> Iterator[Graph | Hypergraph]:
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        lineno = i + 1
        head = lines[i].split()
        if len(head) != 3 or head[0] not in ("graph", "hypergraph"):
            raise ParseError(lineno, "expected header 'graph N M' or 'hypergraph N M'")
        N, M = _ints(lineno, head[1:])
        if N < 0 or M < 0:
            raise ParseError(lineno, "N and M must be nonnegative")
        if i + M >= len(lines):
            raise ParseError(len(lines) + 1, f"expected {M} edge lines, file ended")
        body = []
        seen: set[tuple[int, ...]] = set()
        for j in range(i + 1, i + 1 + M):
            ln = j + 1
            vals = _ints(ln, lines[j].split())
            if head[0] == "graph":
                if len(vals) != 2:
                    raise ParseError(ln, "expected 'u v'")
                u, v = vals
                if not 0 <= u < v < N:
                    raise ParseError(ln, f"need 0 <= u < v < {N}, got {u} {v}")
                e = (u, v)
            else:
                if not vals or vals[0] < 1 or len(vals) != vals[0] + 1:
                    raise ParseError(ln, "expected 'k v1 ... vk' with k >= 1")
                vs = vals[1:]
                if any(a >= b for a, b in zip(vs, vs[1:])) or vs[0] < 0 or vs[-1] >= N:
                    raise ParseError(ln, f"vertex ids must be strictly increasing in [0, {N})")
                e = tuple(vs)
            if e in seen:
                raise ParseError(ln, "duplicate edge")
            seen.add(e)
            body.append(e)
        if head[0] == "graph":
            yield Graph(N, frozenset(body))
        else:
            yield Hypergraph(N, tuple(body))
        i += 1 + M


def parse(text: str) -> Graph | Hypergraph:
    objs = list(iter_objects(text))
    if len(objs) != 1:
        raise ParseError(1, f"expected exactly one object, found {len(objs)}")
    return objs[0]
