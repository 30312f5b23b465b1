import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hallgame.errors import InputError, ParseError
from hallgame.graph import (BipartiteGraph, Graph, is_path, neighborhood, parse_bipartite,
                            parse_graph, path_length, render_bipartite, render_graph)

from conftest import bipartite_graphs


def path_abc():
    return Graph.from_edges(3, [(0, 1), (1, 2)], ["a", "b", "c"])


def test_neighborhood_examples():
    g = path_abc()
    assert neighborhood(g, {1}) == {0, 2}
    assert neighborhood(g, set()) == frozenset()
    s = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert neighborhood(s, {1, 2}) == {0}


def test_neighborhood_out_of_range():
    with pytest.raises(InputError):
        neighborhood(path_abc(), {7})


def test_is_path_examples():
    g = path_abc()
    assert is_path(g, [0, 1, 2])
    assert not is_path(g, [0, 1, 0])
    tri = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert is_path(tri, [0, 2, 1])
    assert is_path(g, [])
    diag = []
    assert not is_path(g, [0, 9], diag) and diag


def test_path_length_convention():
    assert path_length([]) == -1
    assert path_length([3]) == 0
    assert path_length([0, 1, 2]) == 2


def test_graph_rejects_bad_matrices():
    with pytest.raises(InputError):
        Graph(np.ones((2, 3), dtype=bool))
    with pytest.raises(InputError):
        Graph(np.eye(2, dtype=bool))
    with pytest.raises(InputError):
        Graph(np.array([[0, 1], [0, 0]], dtype=bool))
    with pytest.raises(InputError):
        Graph(np.zeros((2, 2), dtype=bool), ["x", "x"])


def test_bipartite_rejects_within_side_edge():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(InputError):
        BipartiteGraph(g, [0, 1], [2])


def test_parse_examples():
    g = parse_bipartite("p bip 1 1 1\ne 1 2\n")
    assert (g.n1, g.n2, g.graph.edges()) == (1, 1, [(0, 1)])
    s = parse_bipartite("p bip 2 1 2\ne 1 3\ne 2 3")
    assert s.graph.edges() == [(0, 2), (1, 2)]
    with pytest.raises(ParseError):
        parse_bipartite("p bip 1 1 1\ne 1 1\n")


@pytest.mark.parametrize("text, where", [
    ("p bip 1 1\ne 1 2", 1),
    ("p bip 1 1 1\ne 1 3", 2),
    ("p bip 2 1 2\ne 1 3\ne 3 1", 3),
    ("p bip 2 2 1\ne 1 2", 2),
    ("p bip 1 1 2\ne 1 2", None),
    ("p bip 1 1 1\nx 1 2", 2),
])
def test_parse_errors_name_line(text, where):
    with pytest.raises(ParseError) as exc:
        parse_bipartite(text)
    assert exc.value.line == where


def test_comments_and_blank_lines():
    g = parse_bipartite("# c\n\np bip 1 1 1  # hdr\ne 1 2 # edge\n")
    assert g.graph.edge_count == 1


def test_general_graph_roundtrip():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    g2, v0 = parse_graph(render_graph(g, 0))
    assert g2 == g and v0 == 0
    with pytest.raises(ParseError):
        parse_graph("p graph 2 1\ne 1 1")


@given(bipartite_graphs())
def test_roundtrip(g):
    assert parse_bipartite(render_bipartite(g)) == g


@given(bipartite_graphs(), st.data())
def test_neighborhood_properties(g, data):
    n = g.graph.vertex_count
    s = data.draw(st.sets(st.integers(0, max(n - 1, 0)), max_size=n)) if n else set()
    t = s | (data.draw(st.sets(st.integers(0, n - 1), max_size=n)) if n else set())
    ns, nt = neighborhood(g.graph, s), neighborhood(g.graph, t)
    assert not ns & s
    assert ns <= nt | t
