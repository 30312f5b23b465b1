"""Instance generators shared by tests, benchmarks and the CLI."""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, combinations_with_replacement, permutations, product

import numpy as np

from .graph import BipartiteGraph
from .hypergraph import Hypergraph


def random_bipartite(rng: np.random.Generator, n1: int, n2: int, density: float) -> BipartiteGraph:
    mask = rng.random((n1, n2)) < density
    return BipartiteGraph.from_edges(n1, n2, [(int(i), int(j)) for i, j in np.argwhere(mask)])


def all_bipartite(max_total: int) -> Iterator[BipartiteGraph]:
    """Every labelled bipartite graph with ``1 <= n1`` and ``n1 + n2 <= max_total``."""
    for total in range(1, max_total + 1):
        for n1 in range(1, total + 1):
            n2 = total - n1
            pairs = [(i, j) for i in range(n1) for j in range(n2)]
            for bits in product((0, 1), repeat=len(pairs)):
                yield BipartiteGraph.from_edges(n1, n2, [p for p, b in zip(pairs, bits) if b])


def _canonical(n: int, edges) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in edges))
        if best is None or key < best:
            best = key
    return best


def all_hypergraphs(max_vertices: int, max_edges: int, include_empty_edges: bool = True,
                    dedupe: bool = True) -> Iterator[Hypergraph]:
    """Hypergraphs with ``|V| <= max_vertices`` and ``|E| <= max_edges``.

    Hyperedges form a multiset (repeats allowed). With ``dedupe`` only one
    representative per isomorphism class is produced.
    """
    for n in range(max_vertices + 1):
        subsets = [c for k in range(0 if include_empty_edges else 1, n + 1)
                   for c in combinations(range(n), k)]
        seen = set()
        for m in range(max_edges + 1):
            for edges in combinations_with_replacement(subsets, m):
                if dedupe:
                    key = _canonical(n, edges)
                    if key in seen:
                        continue
                    seen.add(key)
                yield Hypergraph.from_edges(n, edges)


def random_hypergraph(rng: np.random.Generator, n: int, m: int, density: float = 0.5) -> Hypergraph:
    inc = rng.random((m, n)) < density
    return Hypergraph.from_edges(n, [np.flatnonzero(row).tolist() for row in inc])


def relabel_hypergraph(h: Hypergraph, perm) -> Hypergraph:
    """Vertex ``v`` becomes ``perm[v]``; hyperedge order is kept."""
    return Hypergraph.from_edges(h.n_vertices, [[perm[v] for v in e] for e in h.members])
