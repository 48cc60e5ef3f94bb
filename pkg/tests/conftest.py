from __future__ import annotations

from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chibound import Graph, disjoint_union, join

DATA = Path(__file__).parent / "data"

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_nx(G: nx.Graph) -> Graph:
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return Graph(G.number_of_nodes(), G.edges())


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [e for k, e in enumerate(pairs) if bits >> k & 1])


def connected_graphs_8():
    text = (DATA / "connected8.g6").read_text().split()
    return [from_nx(nx.from_graph6_bytes(line.encode())) for line in text]


K2 = Graph.complete(2)
TWO_K2 = disjoint_union(K2, K2)
BOWTIE = join(Graph.complete(1), TWO_K2)
P4 = Graph.path(4)
C4 = Graph.cycle(4)
C5 = Graph.cycle(5)


@pytest.fixture(scope="session")
def atlas_graphs():
    """Every unlabelled graph on at most 7 vertices (networkx atlas)."""
    return [from_nx(G) for G in nx.graph_atlas_g()]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
