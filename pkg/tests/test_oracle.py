import pytest
from hypothesis import given

from hallgame.errors import SizeBoundError
from hallgame.graph import BipartiteGraph, neighborhood
from hallgame.oracle import hall_violator_bruteforce, max_deficiency_bruteforce, max_matching

from conftest import bipartite_graphs, k11, star


def complete(n1, n2):
    return BipartiteGraph.from_edges(n1, n2, [(i, j) for i in range(n1) for j in range(n2)])


def test_max_matching_examples():
    assert max_matching(k11()).size == 1
    assert max_matching(star()).size == 1
    assert max_matching(complete(3, 3)).size == 3


def test_hall_violator_examples():
    assert hall_violator_bruteforce(complete(2, 2)) is None
    v = hall_violator_bruteforce(star())
    assert v.subset == {0, 1} and v.witness_neighborhood == {2}
    lonely = BipartiteGraph.from_edges(2, 2, [(0, 0)])
    assert hall_violator_bruteforce(lonely).subset == {1}


def test_bound_refusal():
    with pytest.raises(SizeBoundError):
        hall_violator_bruteforce(complete(3, 1), max_side=2)


@given(bipartite_graphs(max_side=7))
def test_konig_deficiency(g):
    m = max_matching(g)
    used = [x for e in m.edges for x in e]
    assert len(used) == len(set(used))
    assert all(g.graph.has_edge(u, w) for u, w in m.edges)
    assert m.size == g.n1 - max_deficiency_bruteforce(g)
    v = hall_violator_bruteforce(g)
    assert (v is None) == (m.size == g.n1)
    if v is not None:
        assert neighborhood(g.graph, v.subset) == v.witness_neighborhood
        assert len(v.witness_neighborhood) < len(v.subset)
