from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cover_switch.core import Graph, Hypergraph

settings.register_profile("default", deadline=None, max_examples=80,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_vertices=0, max_vertices=8):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, c in zip(pairs, chosen) if c))


@st.composite
def hypergraphs(draw, min_vertices=1, max_vertices=7, max_edges=6, max_edge_size=4):
    n = draw(st.integers(min_vertices, max_vertices))
    edge = st.sets(st.integers(0, n - 1), min_size=1, max_size=min(max_edge_size, n))
    edges = draw(st.sets(edge.map(frozenset), min_size=0, max_size=max_edges))
    return Hypergraph(n, tuple(tuple(e) for e in edges))


@st.composite
def hypergraph_with_pivot(draw, **kw):
    h = draw(hypergraphs(**kw).filter(lambda h: len(h.edges) > 0))
    e = draw(st.sampled_from(h.edges))
    order = draw(st.permutations(e))
    return h, tuple(order)


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
