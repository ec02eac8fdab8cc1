"""Exhaustive and randomized checks of the extremal results at desk scale.

Every verifier returns a :class:`VerifyReport`; ``passed`` is the single
verdict and ``details`` carries whatever evidence the check produced.
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import __version__
from .core import Graph, Hypergraph, bits, is_connected, popcount
from .counting import binomial, count_cliques, count_independent_sets
from .covering import (
    associated_hypergraph,
    edge_critical_reduction,
    induction_step_audit,
    is_edge_critical,
    is_kn_covered,
    make_cl,
    make_split,
)
from .iso import are_isomorphic, canonical_key
from .switching import (
    default_ordering,
    edge_switch,
    has_full_degree_vertex,
    is_stable,
    partition_audit,
    stabilize,
)

MAX_ENUM_N = 9


@dataclass
class VerifyReport:
    command: str
    params: dict
    bound: int | None = None
    achieved: int | None = None
    extremal_count: int | None = None
    witness_edges: list[list[int]] | None = None
    matches_construction: bool | None = None
    passed: bool = False
    instances_scanned: int = 0
    elapsed_ms: int = 0
    seed: int | None = None
    version: str = __version__
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "bound": self.bound,
            "achieved": self.achieved,
            "extremal_count": self.extremal_count,
            "witness_edges": self.witness_edges,
            "matches_construction": self.matches_construction,
            "pass": self.passed,
            "instances_scanned": self.instances_scanned,
            "elapsed_ms": self.elapsed_ms,
            "seed": self.seed,
            "version": self.version,
            "details": self.details,
        }

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        p = " ".join(f"{k}={v}" for k, v in self.params.items())
        extra = ""
        if self.bound is not None:
            extra = f" bound={self.bound} achieved={self.achieved} extremal_count={self.extremal_count}"
        return f"{verdict} {self.command} {p}{extra} scanned={self.instances_scanned}"


def default_jobs() -> int:
    return int(os.environ.get("COVER_SWITCH_JOBS", "1"))


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Order-preserving map, optionally across processes."""
    if jobs <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


# ---------------------------------------------------------------- enumeration

def _all_labelled(N: int) -> Iterable[Graph]:
    pairs = list(combinations(range(N), 2))
    for m in range(1 << len(pairs)):
        yield Graph(N, frozenset(p for i, p in enumerate(pairs) if m >> i & 1))


def enumerate_by_filtering(N: int) -> list[Graph]:
    """One graph per class, by deduplicating all labelled graphs. Feasible for N <= 6."""
    seen: dict[bytes, Graph] = {}
    for g in _all_labelled(N):
        seen.setdefault(canonical_key(g), g)
    return [seen[k] for k in sorted(seen)]


def _extensions(g: Graph) -> list[Graph]:
    """Add a vertex N in every way in which it ends up with minimum degree."""
    N = g.vertex_count
    deg = g.degrees()
    out = []
    for nb in range(1 << N):
        d = popcount(nb)
        if any(deg[u] + (nb >> u & 1) < d for u in range(N)):
            continue
        out.append(Graph(N + 1, g.edges | {(u, N) for u in bits(nb)}))
    return out


def _key_of(g: Graph) -> bytes:
    return canonical_key(g)


@lru_cache(maxsize=None)
def _classes(N: int, jobs: int = 1) -> tuple[Graph, ...]:
    if N <= 6:
        return tuple(enumerate_by_filtering(N))
    seen: dict[bytes, Graph] = {}
    for g in _classes(N - 1, jobs):
        cands = _extensions(g)
        for k, h in zip(_pmap(_key_of, cands, jobs), cands):
            seen.setdefault(k, h)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(N: int, jobs: int = 1) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on N vertices.

    N <= 6 dedups all labelled graphs. Larger N extends every class on N-1
    vertices by a new vertex that has minimum degree in the extension (every
    graph arises this way by deleting a minimum-degree vertex), then dedups by
    canonical key. Output is sorted by canonical key.
    """
    if N < 0 or N > MAX_ENUM_N:
        raise ValueError(f"enumeration supports 0 <= N <= {MAX_ENUM_N}")
    return _classes(N, 1 if jobs < 1 else jobs)


def covered_classes(N: int, n: int, jobs: int = 1) -> list[Graph]:
    return [g for g in enumerate_graphs(N, jobs) if is_kn_covered(g, n)]


def _edges_json(g: Graph | Hypergraph) -> list[list[int]]:
    return [list(e) for e in sorted(g.edges)]


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


# ------------------------------------------------------------- main bound

def _it_of(args):
    g, t = args
    return count_independent_sets(g, t)


def verify_main(n: int, t: int, N: int, bound_shift: int = 0, jobs: int = 1) -> VerifyReport:
    """Maximum of i_t over K_n-covered graphs on N vertices against C(N-n+1, t).

    Passes when the maximum equals the bound and, for N >= n+t-1, exactly one
    class attains it and that class is S_{N,n-1}. ``bound_shift`` adds to the
    top argument of the binomial; it exists only for negative controls.
    """
    if t < 3 or N < n or n < 1:
        raise ValueError("need t >= 3 and N >= n >= 1")
    start = time.perf_counter()
    classes = covered_classes(N, n, jobs)
    values = _pmap(_it_of, [(g, t) for g in classes], jobs)
    bound = binomial(N - n + 1 + bound_shift, t)
    achieved = max(values)
    maximizers = [g for g, v in zip(classes, values) if v == achieved]
    split = make_split(N, n - 1)
    matches = len(maximizers) == 1 and are_isomorphic(maximizers[0], split)
    unique_claimed = N >= n + t - 1
    passed = achieved == bound and (matches or not unique_claimed)
    return VerifyReport(
        command="verify-main",
        params={"n": n, "t": t, "N": N, **({"bound_shift": bound_shift} if bound_shift else {})},
        bound=bound,
        achieved=achieved,
        extremal_count=len(maximizers),
        witness_edges=_edges_json(maximizers[0]),
        matches_construction=matches,
        passed=passed,
        instances_scanned=len(classes),
        elapsed_ms=_ms(start),
        details={"uniqueness_claimed": unique_claimed, "split_value": count_independent_sets(split, t)},
    )


def verify_cl(n: int, t: int, N: int, jobs: int = 1) -> VerifyReport:
    """Minimum of k_t over K_n-covered graphs against the two-overlapping-cliques graph."""
    if not 2 <= t <= n or N < n:
        raise ValueError("need 2 <= t <= n <= N")
    start = time.perf_counter()
    classes = covered_classes(N, n, jobs)
    values = [count_cliques(g, t) for g in classes]
    q, r = divmod(N, n)
    construction = make_cl(n, q, r)
    bound = count_cliques(construction, t)
    achieved = min(values)
    minimizers = [g for g, v in zip(classes, values) if v == achieved]
    matches = len(minimizers) == 1 and are_isomorphic(minimizers[0], construction)
    return VerifyReport(
        command="verify-cl",
        params={"n": n, "t": t, "N": N, "q": q, "r": r},
        bound=bound,
        achieved=achieved,
        extremal_count=len(minimizers),
        witness_edges=_edges_json(minimizers[0]),
        matches_construction=matches,
        passed=achieved == bound and matches,
        instances_scanned=len(classes),
        elapsed_ms=_ms(start),
    )


# ---------------------------------------------------------------- switching

def random_hypergraph(rng: random.Random, max_vertices: int = 9, max_edges: int = 7,
                      max_edge_size: int = 4) -> Hypergraph:
    """Random simple hypergraph with edges of mixed sizes; isolated vertices allowed."""
    N = rng.randint(2, max_vertices)
    m = rng.randint(1, max_edges)
    edges = set()
    for _ in range(m):
        k = rng.randint(1, min(max_edge_size, N))
        edges.add(tuple(sorted(rng.sample(range(N), k))))
    return Hypergraph(N, tuple(edges))


def random_connected_hypergraph(rng: random.Random, max_vertices: int = 8, max_edges: int = 6,
                                max_edge_size: int = 4) -> Hypergraph:
    """Random connected hypergraph without isolated vertices.

    Each new edge meets the union of the earlier ones; the vertex set is
    whatever the edges cover, relabelled densely.
    """
    m = rng.randint(1, max_edges)
    edges: list[frozenset[int]] = []
    used: set[int] = set()
    for _ in range(m):
        k = rng.randint(1, min(max_edge_size, max_vertices))
        if used:
            anchor = rng.choice(sorted(used))
            pool = [v for v in range(max_vertices) if v != anchor]
            e = frozenset([anchor, *rng.sample(pool, k - 1)])
        else:
            e = frozenset(rng.sample(range(max_vertices), k))
        if e in edges:
            continue
        edges.append(e)
        used |= e
    order = sorted(used)
    idx = {v: i for i, v in enumerate(order)}
    return Hypergraph(len(order), tuple(tuple(idx[v] for v in e) for e in edges))


def verify_switching(samples: int, seed: int, max_vertices: int = 9, max_edges: int = 7) -> VerifyReport:
    """Monotonicity and equality cases of switching on random hypergraphs.

    Every edge of every instance is used as pivot twice: with the default
    ordering and with a uniformly random ordering. Counted findings:
    decreases of i3, increases of f, and equality cases that disagree with
    isomorphism in either direction.
    """
    start = time.perf_counter()
    rng = random.Random(seed)
    findings = {
        "i3_decreased": 0, "f_increased": 0,
        "i3_equal_not_isomorphic": 0, "i3_equal_not_isomorphic_with_f_positive": 0,
        "i3_changed_but_isomorphic": 0,
        "f_equal_not_isomorphic": 0, "f_equal_not_isomorphic_with_f_positive": 0,
        "f_changed_but_isomorphic": 0, "merges": 0,
    }
    examples: dict[str, dict] = {}
    switches = 0
    for _ in range(samples):
        h = random_hypergraph(rng, max_vertices, max_edges)
        for e in h.edges:
            shuffled = list(e)
            rng.shuffle(shuffled)
            for order in (default_ordering(h, e), tuple(shuffled)):
                out = edge_switch(h, order)
                switches += 1
                hits = []
                if out.i3_after < out.i3_before:
                    hits.append("i3_decreased")
                if out.f_after > out.f_before:
                    hits.append("f_increased")
                if out.changed and out.i3_after == out.i3_before:
                    hits.append("i3_equal_not_isomorphic")
                    if out.f_before > 0:
                        hits.append("i3_equal_not_isomorphic_with_f_positive")
                if not out.changed and out.i3_after != out.i3_before:
                    hits.append("i3_changed_but_isomorphic")
                if out.changed and out.f_after == out.f_before:
                    hits.append("f_equal_not_isomorphic")
                    if out.f_before > 0:
                        hits.append("f_equal_not_isomorphic_with_f_positive")
                if not out.changed and out.f_after != out.f_before:
                    hits.append("f_changed_but_isomorphic")
                if out.merged_duplicates:
                    hits.append("merges")
                for k in hits:
                    findings[k] += 1
                    if k not in examples or len(h.edges) < len(examples[k]["edges"]):
                        examples[k] = {"vertex_count": h.vertex_count, "edges": _edges_json(h),
                                       "pivot": list(order), "result": _edges_json(out.result),
                                       "i3": [out.i3_before, out.i3_after], "f": [out.f_before, out.f_after]}
    checked = [k for k in findings if k != "merges"]
    return VerifyReport(
        command="verify-switching",
        params={"samples": samples, "max_vertices": max_vertices, "max_edges": max_edges},
        passed=all(findings[k] == 0 for k in checked),
        instances_scanned=samples,
        elapsed_ms=_ms(start),
        seed=seed,
        details={"switches": switches, "findings": findings, "smallest_examples": examples},
    )


def verify_partition(samples: int, seed: int, max_vertices: int = 9, max_edges: int = 7) -> VerifyReport:
    """Class-by-class comparison of independent 3-sets across one switch per instance."""
    start = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    for i in range(samples):
        h = random_hypergraph(rng, max_vertices, max_edges)
        e = rng.choice(h.edges)
        order = list(e)
        rng.shuffle(order)
        audit = partition_audit(h, order)
        if not audit.ok:
            failures.append({"index": i, "edges": _edges_json(h), "pivot": order, **audit.to_json()})
    return VerifyReport(
        command="audit-switch-suite",
        params={"samples": samples, "max_vertices": max_vertices, "max_edges": max_edges},
        passed=not failures,
        instances_scanned=samples,
        elapsed_ms=_ms(start),
        seed=seed,
        details={"failure_count": len(failures), "failures": failures[:10]},
    )


def verify_stable_lemma(samples: int, seed: int, max_vertices: int = 8, max_edges: int = 6) -> VerifyReport:
    """Stabilize random connected hypergraphs and inspect the results.

    Checks per instance: f strictly decreases along the trace, the result is
    stable, still connected, and has a vertex lying in every edge.
    """
    start = time.perf_counter()
    rng = random.Random(seed)
    counts = {"f_not_decreasing": 0, "not_stable": 0, "disconnected": 0, "no_full_degree_vertex": 0}
    examples: dict[str, dict] = {}
    total_steps = 0
    for _ in range(samples):
        h = random_connected_hypergraph(rng, max_vertices, max_edges)
        res = stabilize(h)
        total_steps += res.steps
        hits = []
        if any(b >= a for a, b in zip(res.f_trace, res.f_trace[1:])):
            hits.append("f_not_decreasing")
        if not is_stable(res.result):
            hits.append("not_stable")
        if not is_connected(res.result):
            hits.append("disconnected")
        elif not has_full_degree_vertex(res.result):
            hits.append("no_full_degree_vertex")
        for k in hits:
            counts[k] += 1
            examples.setdefault(k, {"edges": _edges_json(h), "result": _edges_json(res.result),
                                    "f_trace": res.f_trace})
    return VerifyReport(
        command="verify-stable",
        params={"samples": samples, "max_vertices": max_vertices, "max_edges": max_edges},
        passed=not any(counts.values()),
        instances_scanned=samples,
        elapsed_ms=_ms(start),
        seed=seed,
        details={"findings": counts, "examples": examples, "total_steps": total_steps},
    )


# -------------------------------------------------------- base-case algebra

def deficit_poly(n: int, r: int) -> int:
    """r^2 - 3(n-1)r + 3n^2 - 3n - 1."""
    return r * r - 3 * (n - 1) * r + 3 * n * n - 3 * n - 1


def deficit(n: int, q: int, r: int) -> Fraction:
    """Lower bound on C(N-n+1, 3) - i_3(G) for disconnected K_n-covered G, N = qn + r."""
    if n < 3 or q < 2 or not 0 <= r <= n - 1:
        raise ValueError("need n >= 3, q >= 2, 0 <= r <= n-1")
    return Fraction((n ** 3 - n) * (q - 1) + r * deficit_poly(n, r), 6)


def disconnected_upper_bound(n: int, q: int, r: int) -> Fraction:
    """The closed-form bound on i_3 for disconnected K_n-covered graphs on qn + r vertices.

    Equals C(N,3) - (n-1)(N-n)N/2 - k_3 of the two-overlapping-cliques graph.
    """
    N = q * n + r
    return (binomial(N, 3) - Fraction((n - 1) * (N - n) * N, 2)
            - (q + 1) * binomial(n, 3) + binomial(n - r, 3))


def verify_disconnected_bound(n_max: int = 50, q_max: int = 50, N_max: int = 8,
                              jobs: int = 1) -> VerifyReport:
    """Closed-form positivity of the deficit plus an exhaustive look at disconnected graphs.

    For every disconnected K_n-covered class (n >= 3, N <= N_max) the check
    confirms i_3 < C(N-n+1, 3) and that the disconnected maximum stays below
    the connected maximum.
    """
    start = time.perf_counter()
    problems = []
    evaluated = 0
    for n in range(3, n_max + 1):
        vals = [deficit_poly(n, r) for r in range(n)]
        if any(b >= a for a, b in zip(vals, vals[1:])):
            problems.append({"n": n, "issue": "polynomial not decreasing"})
        if vals[-1] != n * n + n - 3 or vals[-1] <= 0:
            problems.append({"n": n, "issue": "value at r=n-1"})
        for q in range(2, q_max + 1):
            for r in range(n):
                evaluated += 1
                d = deficit(n, q, r)
                if d <= 0:
                    problems.append({"n": n, "q": q, "r": r, "issue": "deficit not positive"})
                if binomial(q * n + r - n + 1, 3) - disconnected_upper_bound(n, q, r) != d:
                    problems.append({"n": n, "q": q, "r": r, "issue": "deficit identity"})
    scans = []
    scanned = 0
    for n in range(3, N_max // 2 + 1):
        for N in range(2 * n, N_max + 1):
            conn, disc = [], []
            for g in covered_classes(N, n, jobs):
                (conn if g.is_connected() else disc).append(count_independent_sets(g, 3))
            scanned += len(conn) + len(disc)
            bound = binomial(N - n + 1, 3)
            entry = {"n": n, "N": N, "bound": bound, "max_connected": max(conn, default=None),
                     "max_disconnected": max(disc, default=None), "disconnected_classes": len(disc)}
            scans.append(entry)
            if disc and (max(disc) >= bound or (conn and max(disc) >= max(conn))):
                problems.append({"n": n, "N": N, "issue": "disconnected class reaches bound"})
    return VerifyReport(
        command="verify-disconnected",
        params={"n_max": n_max, "q_max": q_max, "N_max": N_max},
        passed=not problems,
        instances_scanned=evaluated + scanned,
        elapsed_ms=_ms(start),
        details={"problems": problems[:20], "scans": scans},
    )


def leaf_for_recursion(g: Graph) -> int | None:
    """Smallest degree-1 vertex whose neighbour has degree above 1."""
    deg = g.degrees()
    for x in range(g.vertex_count):
        if deg[x] == 1 and deg[bits(g.adj[x])[0]] > 1:
            return x
    return None


def verify_base_recursion(N_max: int = 7, jobs: int = 1) -> VerifyReport:
    """The n = 2 base case on every edge-critical K_2-covered class up to N_max vertices."""
    start = time.perf_counter()
    problems = []
    scanned = recursions = matchings = 0
    for N in range(2, N_max + 1):
        for g in covered_classes(N, 2, jobs):
            if not is_edge_critical(g, 2):
                continue
            scanned += 1
            i3 = count_independent_sets(g, 3)
            if i3 > binomial(N - 1, 3):
                problems.append({"N": N, "edges": _edges_json(g), "issue": "bound"})
            if all(d == 1 for d in g.degrees()):
                matchings += 1
                if i3 != 8 * binomial(N // 2, 3):
                    problems.append({"N": N, "edges": _edges_json(g), "issue": "matching formula"})
                continue
            x = leaf_for_recursion(g)
            if x is None:
                problems.append({"N": N, "edges": _edges_json(g), "issue": "no suitable leaf"})
                continue
            recursions += 1
            rhs = (count_independent_sets(g.remove_vertices([x]), 3)
                   + count_independent_sets(g.remove_vertices(g.closed_neighborhood(x)), 2))
            if rhs != i3:
                problems.append({"N": N, "edges": _edges_json(g), "issue": "recursion"})
    return VerifyReport(
        command="verify-base",
        params={"N_max": N_max},
        passed=not problems,
        instances_scanned=scanned,
        elapsed_ms=_ms(start),
        details={"problems": problems, "recursions_checked": recursions, "matchings_checked": matchings},
    )


def verify_induction_step(n: int = 3, t: int = 4, N_values: Iterable[int] = (7, 8),
                          jobs: int = 1) -> VerifyReport:
    """Run the induction-step audit on every edge-critical K_n-covered class with a degree n-1 vertex."""
    start = time.perf_counter()
    failures = []
    audited = 0
    s_hist: dict[int, int] = {}
    for N in N_values:
        for g in covered_classes(N, n, jobs):
            if n - 1 not in g.degrees() or not is_edge_critical(g, n):
                continue
            audit = induction_step_audit(g, n, t)
            audited += 1
            s_hist[audit.s] = s_hist.get(audit.s, 0) + 1
            if not audit.bound_holds:
                failures.append({"N": N, "edges": _edges_json(g), "chain": list(audit.chain)})
    return VerifyReport(
        command="verify-induction",
        params={"n": n, "t": t, "N_values": list(N_values)},
        passed=not failures and audited > 0,
        instances_scanned=audited,
        elapsed_ms=_ms(start),
        details={"failures": failures[:10], "s_histogram": {str(k): v for k, v in sorted(s_hist.items())}},
    )


def verify_reduction_consistency(n: int, t: int, N: int, jobs: int = 1) -> VerifyReport:
    """i_t never drops under edge-critical reduction, and the reduction is critical."""
    start = time.perf_counter()
    bad = []
    classes = covered_classes(N, n, jobs)
    for g in classes:
        red = edge_critical_reduction(g, n)
        if not is_edge_critical(red, n) or count_independent_sets(red, t) < count_independent_sets(g, t):
            bad.append(_edges_json(g))
    return VerifyReport(
        command="verify-reduction",
        params={"n": n, "t": t, "N": N},
        passed=not bad,
        instances_scanned=len(classes),
        elapsed_ms=_ms(start),
        details={"failures": bad[:10]},
    )


def verify_switching_pipeline(n: int, N: int, jobs: int = 1) -> VerifyReport:
    """For connected edge-critical classes: i_3(G) <= i_3 of the stabilized clique hypergraph."""
    start = time.perf_counter()
    bad = []
    scanned = 0
    for g in covered_classes(N, n, jobs):
        if not g.is_connected() or not is_edge_critical(g, n):
            continue
        scanned += 1
        res = stabilize(associated_hypergraph(g, n))
        if count_independent_sets(g, 3) > count_independent_sets(res.result, 3):
            bad.append(_edges_json(g))
    return VerifyReport(
        command="verify-pipeline",
        params={"n": n, "N": N},
        passed=not bad,
        instances_scanned=scanned,
        elapsed_ms=_ms(start),
        details={"failures": bad[:10]},
    )
