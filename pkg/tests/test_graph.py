from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chibound import (
    CapacityError,
    ContractError,
    Graph,
    complement,
    disjoint_union,
    exact_chromatic_number,
    exact_clique_number,
    first_fit_coloring,
    induced,
    is_chordal,
    is_proper_coloring,
    join,
)
from conftest import BOWTIE, C4, C5, P4, TWO_K2, K2, graphs, to_nx


# construction ----------------------------------------------------------------


def test_graph_rejects_bad_edges():
    with pytest.raises(IndexError):
        Graph(3, [(0, 3)])
    with pytest.raises(ContractError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_from_rows_checks_symmetry():
    with pytest.raises(ContractError):
        Graph.from_rows([0b10, 0b00])
    with pytest.raises(ContractError):
        Graph.from_rows([0b1])
    assert Graph.from_rows([0b10, 0b01]) == K2


def test_named_graphs():
    assert Graph.complete(4).m == 6
    assert Graph.path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert Graph.cycle(5).m == 5
    assert Graph.star(4).degree(0) == 4
    assert Graph.empty(3).m == 0


def test_edges_are_sorted_and_equality_is_labelled():
    g = Graph(4, [(3, 2), (1, 0), (2, 0)])
    assert g.edges() == [(0, 1), (0, 2), (2, 3)]
    assert g != Graph(4, [(0, 1), (1, 2), (2, 3)])  # isomorphic, different labels
    assert hash(g) == hash(Graph(4, g.edges()))


# operations ------------------------------------------------------------------


def test_disjoint_union_examples():
    assert TWO_K2.n == 4 and TWO_K2.edges() == [(0, 1), (2, 3)]
    assert disjoint_union(C5, Graph(0)) == C5
    p3k1 = disjoint_union(Graph.path(3), Graph(1))
    assert (p3k1.n, p3k1.m) == (4, 2)


def test_join_examples():
    assert (BOWTIE.n, BOWTIE.m) == (5, 6)
    assert join(Graph.complete(2), Graph.complete(3)) == Graph.complete(5)
    assert join(Graph(0), C5) == C5


def test_induced_examples():
    assert induced(C5, [0, 1, 2]) == Graph.path(3)
    assert induced(C5, range(5)) == C5
    assert induced(C5, []) == Graph(0)
    with pytest.raises(IndexError):
        induced(C5, [5])


def test_complement_examples():
    assert complement(C4) == Graph(4, [(0, 2), (1, 3)])
    assert nx.is_isomorphic(to_nx(complement(C4)), to_nx(TWO_K2))
    assert complement(Graph.complete(5)) == Graph.empty(5)


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@given(graphs(max_n=6), graphs(max_n=6))
def test_clique_number_is_additive_under_join(g, h):
    assert exact_clique_number(join(g, h)) == exact_clique_number(g) + exact_clique_number(h)


@given(graphs(max_n=6), graphs(max_n=6))
def test_union_matches_networkx(g, h):
    ours = to_nx(disjoint_union(g, h))
    theirs = nx.disjoint_union(to_nx(g), to_nx(h))
    assert nx.utils.graphs_equal(ours, theirs)


@given(graphs(), st.data())
def test_induced_matches_networkx(g, data):
    verts = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    sub = to_nx(g).subgraph(verts)
    mapping = {v: k for k, v in enumerate(sorted(verts))}
    expected = nx.relabel_nodes(sub, mapping)
    ours = to_nx(induced(g, verts))
    assert nx.utils.graphs_equal(ours, expected)


# oracles ---------------------------------------------------------------------


def test_clique_number_examples():
    assert exact_clique_number(Graph.complete(5)) == 5
    assert exact_clique_number(C5) == 2
    assert exact_clique_number(Graph.empty(4)) == 1
    assert exact_clique_number(Graph(0)) == 0


@given(graphs(max_n=9))
def test_clique_number_matches_networkx(g):
    expected = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert exact_clique_number(g) == expected


def test_chromatic_examples():
    assert exact_chromatic_number(C5) == 3
    assert exact_chromatic_number(Graph.complete(6)) == 6
    assert exact_chromatic_number(P4) == 2
    assert exact_chromatic_number(Graph(0)) == 0


def _brute_chromatic(g):
    for k in range(1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if is_proper_coloring(g, colors):
                return k
    return 0


@given(graphs(max_n=6))
def test_chromatic_matches_brute_force(g):
    assert exact_chromatic_number(g) == _brute_chromatic(g)


def test_oracle_capacity():
    with pytest.raises(CapacityError):
        exact_clique_number(Graph.empty(33))
    with pytest.raises(CapacityError):
        exact_chromatic_number(Graph.empty(15))
    assert exact_clique_number(Graph.empty(40), limit=40) == 1


def test_chordal_examples():
    assert not is_chordal(C4)
    assert is_chordal(Graph.star(5))
    assert is_chordal(Graph.path(6))
    assert is_chordal(TWO_K2)


def _has_chordless_cycle(g):
    # brute force: an induced subgraph that is a cycle of length >= 4
    for k in range(4, g.n + 1):
        for verts in combinations(range(g.n), k):
            h = induced(g, verts)
            if h.m == k and all(h.degree(v) == 2 for v in range(k)):
                if nx.is_connected(to_nx(h)):
                    return True
    return False


def test_chordal_matches_brute_force_up_to_7(atlas_graphs):
    for g in atlas_graphs:
        assert is_chordal(g) == (not _has_chordless_cycle(g)), g


@given(graphs(max_n=10))
def test_chordal_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))


def test_first_fit_examples():
    r = first_fit_coloring(Graph.empty(3), [0, 1, 2])
    assert r.colors == (0, 0, 0)
    assert first_fit_coloring(Graph.complete(3)).colors_used == 3
    assert first_fit_coloring(P4, [0, 1, 2, 3]).colors_used == 2
    with pytest.raises(ContractError):
        first_fit_coloring(P4, [0, 1, 1, 3])


@given(graphs(min_n=1), st.randoms(use_true_random=False))
def test_first_fit_is_proper_within_degree_bound(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    r = first_fit_coloring(g, order)
    assert is_proper_coloring(g, r.colors)
    assert r.colors_used <= g.max_degree() + 1
    assert sorted(set(r.colors)) == list(range(r.colors_used))


def test_is_proper_coloring_rejects_wrong_length():
    assert not is_proper_coloring(K2, [0])
    assert not is_proper_coloring(K2, [1, 1])
