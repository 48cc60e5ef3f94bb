import pytest
from hypothesis import given

from chibound import (
    CliqueLevel,
    ContractError,
    Graph,
    check_conditions,
    clique_level,
    exact_clique_number,
    find_1_improvement,
    find_2_improvement,
    two_maximal_clique,
)
from chibound.clique import _tight_sets
from conftest import BOWTIE, C4, C5, graphs


def test_find_1_improvement_examples():
    assert find_1_improvement(Graph.complete(3), [0]) in (1, 2)
    assert find_1_improvement(C4, [0, 1]) is None
    assert find_1_improvement(Graph.empty(3), []) in (0, 1, 2)
    with pytest.raises(ContractError):
        find_1_improvement(C4, [0, 2])
    with pytest.raises(IndexError):
        find_1_improvement(C4, [7])


def test_find_2_improvement_examples():
    # triangle a,b,c = 0,1,2 plus d = 3 adjacent only to a
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    assert find_2_improvement(g, [0, 3]) == (3, (1, 2))
    assert find_2_improvement(C4, [0, 1]) is None
    assert find_2_improvement(Graph.complete(4), [0, 1, 2, 3]) is None


def test_find_2_improvement_requires_one_maximal():
    with pytest.raises(ContractError):
        find_2_improvement(Graph.complete(3), [0])


def test_two_maximal_clique_examples():
    assert two_maximal_clique(Graph.complete(6)).vertices == tuple(range(6))
    c = two_maximal_clique(C5)
    assert len(c) == 2 and C5.is_clique(c.vertices)
    assert two_maximal_clique(BOWTIE).vertices in {(0, 1, 2), (0, 3, 4)}
    assert two_maximal_clique(Graph(0)).vertices == ()


def test_clique_level():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    assert clique_level(g, [0, 3]) is CliqueLevel.ONE_MAXIMAL
    assert clique_level(g, [0, 1, 2]) is CliqueLevel.TWO_MAXIMAL
    assert clique_level(g, [0]) is CliqueLevel.ARBITRARY
    with pytest.raises(ContractError):
        clique_level(g, [1, 3])


def _tight_sets_by_counting(g, K):
    # literal tightness counters: number of members adjacent to each outsider
    out = []
    for u in K:
        tight = 0
        for v in range(g.n):
            if v in K:
                continue
            count = sum(g.has_edge(v, k) for k in K)
            if count == len(K) - 1 and not g.has_edge(v, u):
                tight |= 1 << v
        out.append((u, tight))
    return out


@given(graphs(max_n=10))
def test_tight_sets_match_counters(g):
    K = two_maximal_clique(g).vertices
    mask = sum(1 << v for v in K)
    assert _tight_sets(g.rows, g.vertex_mask, mask) == _tight_sets_by_counting(g, K)


@given(graphs(max_n=11))
def test_two_maximal_clique_properties(g):
    c = two_maximal_clique(g)
    assert g.is_clique(c.vertices)
    assert check_conditions(g, c.vertices) == (True, True)
    assert c.level is CliqueLevel.TWO_MAXIMAL
    omega = exact_clique_number(g)
    assert len(c) <= omega
    assert c.improvements <= omega
    assert two_maximal_clique(g) == c  # deterministic


@given(graphs(min_n=1, max_n=9))
def test_improvement_moves_are_valid(g):
    c = two_maximal_clique(g).vertices
    # grow from a single vertex to a 1-maximal clique, then inspect moves
    K = [0]
    while (v := find_1_improvement(g, K)) is not None:
        assert v not in K and all(g.has_edge(v, k) for k in K)
        K.append(v)
    swap = find_2_improvement(g, K)
    if swap is None:
        assert check_conditions(g, K) == (True, True)
    else:
        u, (v, w) = swap
        assert u in K and v not in K and w not in K and g.has_edge(v, w)
        rest = [k for k in K if k != u]
        assert all(g.has_edge(x, k) for x in (v, w) for k in rest)
    assert len(c) >= 1
