"""Hypergraph edge-switching and the machinery around it.

Switching at a pivot edge e0 = (v1, ..., vn) moves every edge that meets e0
so that its overlap with e0 becomes an initial segment of the pivot order:
an edge e with |e & e0| = k is replaced by {v1..vk} | (e - e0). The number
of independent 3-sets never drops and the degree product f never grows.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from .core import Hypergraph, bits, is_connected, mask_of, popcount, potential_f
from .counting import count_independent_sets
from .iso import canonical_key


@dataclass(frozen=True)
class SwitchOutcome:
    result: Hypergraph
    pivot: tuple[int, ...]
    f_before: int
    f_after: int
    i3_before: int | None
    i3_after: int | None
    merged_duplicates: int
    changed: bool

    def to_json(self) -> dict:
        return {
            "result": {"vertex_count": self.result.vertex_count, "edges": [list(e) for e in self.result.edges]},
            "pivot": list(self.pivot),
            "f_before": self.f_before,
            "f_after": self.f_after,
            "i3_before": self.i3_before,
            "i3_after": self.i3_after,
            "merged_duplicates": self.merged_duplicates,
            "changed": self.changed,
        }


def _check_pivot(h: Hypergraph, e0: Sequence[int]) -> int:
    m = mask_of(e0)
    if len(set(e0)) != len(e0) or m not in set(h.masks):
        raise ValueError(f"{tuple(e0)} is not an edge of the hypergraph")
    return m


def switch_edges(h: Hypergraph, e0: Sequence[int]) -> tuple[list[int], int]:
    """Edge masks after switching at ``e0``, plus the number of merged duplicates."""
    m0 = _check_pivot(h, e0)
    prefixes = [0]
    for v in e0:
        prefixes.append(prefixes[-1] | 1 << v)
    out = set()
    moved = []
    for e in h.masks:
        if e == m0 or not e & m0:
            out.add(e)
        else:
            moved.append(prefixes[popcount(e & m0)] | (e & ~m0))
    merged = len(moved) - len(set(moved))
    out.update(moved)
    return sorted(out), merged


def edge_switch(h: Hypergraph, e0: Sequence[int], with_i3: bool = True) -> SwitchOutcome:
    masks, merged = switch_edges(h, e0)
    result = Hypergraph.from_masks(h.vertex_count, masks)
    changed = canonical_key(result) != canonical_key(h)
    return SwitchOutcome(
        result=result,
        pivot=tuple(e0),
        f_before=potential_f(h),
        f_after=potential_f(result),
        i3_before=count_independent_sets(h, 3) if with_i3 else None,
        i3_after=count_independent_sets(result, 3) if with_i3 else None,
        merged_duplicates=merged,
        changed=changed,
    )


def default_ordering(h: Hypergraph, e: Sequence[int]) -> tuple[int, ...]:
    """Vertices of ``e`` by decreasing 1-degree, ties by increasing id."""
    _check_pivot(h, tuple(e))
    deg = h.degrees()
    return tuple(sorted(e, key=lambda v: (-deg[v], v)))


@dataclass
class StabilizeResult:
    result: Hypergraph
    steps: int
    f_trace: list[int] = field(default_factory=list)
    pivots: list[tuple[int, ...]] = field(default_factory=list)


def stabilize(h: Hypergraph, max_steps: int | None = None) -> StabilizeResult:
    """Switch until no pivot changes the isomorphism class.

    Edges are scanned in sorted order with the default pivot ordering; the
    scan restarts after each changing switch. ``f_trace`` holds f of the
    input followed by f after each changing switch.
    """
    cur = h
    trace = [potential_f(h)]
    pivots = []
    steps = 0
    while True:
        key = canonical_key(cur)
        for e in cur.edges:
            order = default_ordering(cur, e)
            masks, _ = switch_edges(cur, order)
            nxt = Hypergraph.from_masks(cur.vertex_count, masks)
            if canonical_key(nxt) != key:
                cur = nxt
                steps += 1
                trace.append(potential_f(cur))
                pivots.append(order)
                break
        else:
            return StabilizeResult(cur, steps, trace, pivots)
        if max_steps is not None and steps >= max_steps:
            raise RuntimeError(f"no stable hypergraph after {steps} switches")


def is_stable(h: Hypergraph) -> bool:
    key = canonical_key(h)
    for e in h.edges:
        masks, _ = switch_edges(h, default_ordering(h, e))
        if canonical_key(Hypergraph.from_masks(h.vertex_count, masks)) != key:
            return False
    return True


def has_full_degree_vertex(h: Hypergraph) -> bool:
    return h.max_degree() == len(h.edges)


@dataclass(frozen=True)
class PartitionAudit:
    t_counts: tuple[int, int, int, int]
    t_prime_counts: tuple[int, int, int, int]
    i3_before: int
    i3_after: int

    @property
    def per_class_ok(self) -> tuple[bool, bool, bool, bool]:
        a, b = self.t_counts, self.t_prime_counts
        return (a[0] == b[0], a[1] == b[1], a[2] == b[2], a[3] <= b[3])

    @property
    def sums_ok(self) -> bool:
        return sum(self.t_counts) == self.i3_before and sum(self.t_prime_counts) == self.i3_after

    @property
    def ok(self) -> bool:
        return all(self.per_class_ok) and self.sums_ok

    def to_json(self) -> dict:
        return {
            "t_counts": list(self.t_counts),
            "t_prime_counts": list(self.t_prime_counts),
            "per_class_ok": list(self.per_class_ok),
            "i3_before": self.i3_before,
            "i3_after": self.i3_after,
        }


def _classify_triples(h: Hypergraph, m0: int, outside: int) -> tuple[int, int, int, int]:
    """Split the independent 3-sets by how they meet e0 and the complement of S."""
    adj = h.shadow_adj
    counts = [0, 0, 0, 0]
    n = h.vertex_count
    for a in range(n):
        for b in range(a + 1, n):
            if adj[a] >> b & 1:
                continue
            for c in bits(((1 << n) - 1) >> (b + 1) << (b + 1) & ~adj[a] & ~adj[b]):
                tri = 1 << a | 1 << b | 1 << c
                k0 = popcount(tri & m0)
                if k0 == 0:
                    counts[0] += 1
                    continue
                # an independent set meets the edge e0 at most once
                counts[{2: 1, 1: 2, 0: 3}[popcount(tri & outside)]] += 1
    return tuple(counts)


def partition_audit(h: Hypergraph, e0: Sequence[int]) -> PartitionAudit:
    """Count the four classes of independent 3-sets before and after switching.

    Class 1 avoids e0; classes 2-4 hit e0 once and have 2, 1 or 0 vertices
    outside S, the union of e0 and the edges meeting it.
    """
    m0 = _check_pivot(h, e0)
    union = 0
    for e in h.masks:
        if e & m0:
            union |= e
    outside = ((1 << h.vertex_count) - 1) & ~union
    masks, _ = switch_edges(h, e0)
    after = Hypergraph.from_masks(h.vertex_count, masks)
    return PartitionAudit(
        t_counts=_classify_triples(h, m0, outside),
        t_prime_counts=_classify_triples(after, m0, outside),
        i3_before=count_independent_sets(h, 3),
        i3_after=count_independent_sets(after, 3),
    )


@dataclass(frozen=True)
class MajorizationWitness:
    before: tuple[int, ...]
    after: tuple[int, ...]
    steps: tuple[tuple[int, int], ...]
    products: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "before": list(self.before),
            "after": list(self.after),
            "steps": [list(s) for s in self.steps],
            "products": list(self.products),
        }


def majorization_witness(before: Sequence[int], after: Sequence[int]) -> MajorizationWitness:
    """Transform ``before`` into ``after`` one unit at a time, each step lowering the product.

    ``before`` must be nonincreasing and ``after - before`` must have
    nonnegative prefix sums and zero total. Each step takes the first index m
    where the two differ (there ``after`` is larger) and the first index s where
    ``after`` is smaller, and moves one unit from position s to position m.
    Indices in ``steps`` are 0-based.
    """
    y = list(before)
    target = list(after)
    if len(y) != len(target):
        raise ValueError("sequences differ in length")
    if any(a < b for a, b in zip(y, y[1:])):
        raise ValueError("before must be nonincreasing")
    if any(a < 1 for a in y + target):
        raise ValueError("pivot degrees are at least 1")
    alpha = [a - b for a, b in zip(target, y)]
    run = 0
    for i, a in enumerate(alpha):
        run += a
        if run < 0:
            raise ValueError(f"prefix sum of after - before is negative at index {i}")
    if run != 0:
        raise ValueError("before and after have different totals")

    steps = []
    products = [prod(y)]
    while any(alpha):
        m = next(i for i, a in enumerate(alpha) if a)
        s = next(i for i, a in enumerate(alpha) if a < 0)
        assert alpha[m] > 0 and m < s and y[m] >= y[s]
        y[m] += 1
        y[s] -= 1
        alpha[m] -= 1
        alpha[s] += 1
        steps.append((m, s))
        products.append(prod(y))
        assert products[-1] < products[-2]
    return MajorizationWitness(tuple(before), tuple(after), tuple(steps), tuple(products))


def pivot_degree_sequences(h: Hypergraph, e0: Sequence[int]) -> tuple[list[int], list[int]]:
    """Sorted pivot degrees before switching, and pivot-order degrees after."""
    masks, _ = switch_edges(h, e0)
    after = Hypergraph.from_masks(h.vertex_count, masks)
    d0, d1 = h.degrees(), after.degrees()
    return sorted((d0[v] for v in e0), reverse=True), [d1[v] for v in e0]


def preserves_support(h: Hypergraph, e0: Sequence[int]) -> bool:
    """Whether e0 together with its neighbouring edges covers the same vertices after switching."""
    m0 = mask_of(e0)
    before = after = 0
    for e in h.masks:
        if e & m0:
            before |= e
    masks, _ = switch_edges(h, e0)
    for e in masks:
        if e & m0:
            after |= e
    return before == after


def switch_keeps_connected(h: Hypergraph, e0: Sequence[int]) -> bool:
    masks, _ = switch_edges(h, e0)
    return is_connected(Hypergraph.from_masks(h.vertex_count, masks))
