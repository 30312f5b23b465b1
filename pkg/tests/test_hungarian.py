from itertools import permutations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hallgame.errors import InputError, ParseError
from hallgame.hungarian import (MISSING, WeightedBipartiteGraph, dual_problems,
                                max_weight_matching, parse_weighted, render_weighted)


def brute(w):
    n = len(w)
    return max(sum(int(w[i][p[i]]) for i in range(n)) for p in permutations(range(n)))


def test_examples():
    r = max_weight_matching(WeightedBipartiteGraph([[5]]))
    assert r.matching == ((0, 0),) and r.total_weight == 5
    r = max_weight_matching(WeightedBipartiteGraph([[1, 2], [2, 1]]))
    assert r.total_weight == 4 and r.matching == ((0, 1), (1, 0))


def test_rejects_non_square():
    with pytest.raises(InputError):
        WeightedBipartiteGraph(np.zeros((2, 3)))


def test_missing_edges_avoided():
    g = parse_weighted("p wbip 2\n- 3\n4 -\n")
    assert max_weight_matching(g).total_weight == 7
    assert render_weighted(g) == "p wbip 2\n- 3\n4 -\n"
    assert MISSING < -10**8


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_weighted("p wbip 2\n1 2\n")
    with pytest.raises(ParseError):
        parse_weighted("p wbip 2\n1 2\n3 x\n")


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
def test_matches_bruteforce(w):
    g = WeightedBipartiteGraph(w)
    r = max_weight_matching(g)
    assert r.total_weight == brute(w)
    assert not dual_problems(g, r.matching, r.duals)
    assert r.updates <= g.n ** 2
