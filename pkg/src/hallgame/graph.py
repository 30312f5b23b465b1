"""Finite simple undirected graphs, bipartite graphs, paths and the text formats.

Vertices are dense 0-based indices. The adjacency matrix is the canonical
representation; neighbor lists are derived caches.

File formats (1-based, ``#`` starts a comment)::

    p bip <n1> <n2> <m>        p graph <n> <m>
    e <i> <j>   (m lines)      e <i> <j>   (m lines)
                               v0 <i>      (optional start vertex)

In the bipartite format ``1 <= i <= n1 < j <= n1 + n2``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from .errors import InputError, ParseError


class Graph:
    """Immutable simple undirected graph backed by a boolean adjacency matrix."""

    __slots__ = ("adjacency", "labels", "_neighbors")

    def __init__(self, adjacency, labels: Sequence[str] | None = None):
        adj = np.array(adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InputError(f"adjacency must be square, got shape {adj.shape}")
        if adj.diagonal().any():
            raise InputError(f"self-loop at vertex {int(np.flatnonzero(adj.diagonal())[0])}")
        if not np.array_equal(adj, adj.T):
            raise InputError("adjacency matrix is not symmetric")
        adj.setflags(write=False)
        n = adj.shape[0]
        if labels is None:
            labels = tuple(str(i + 1) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise InputError(f"{len(labels)} labels for {n} vertices")
            if len(set(labels)) != n:
                raise InputError("vertex labels must be distinct")
        self.adjacency = adj
        self.labels = labels
        self._neighbors = tuple(tuple(int(u) for u in np.flatnonzero(row)) for row in adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj, labels)

    @property
    def vertex_count(self) -> int:
        return self.adjacency.shape[0]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbors of ``v``."""
        return self._neighbors[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adjacency))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown vertex label {label!r}") from None

    def is_bipartite(self) -> bool:
        color = [-1] * self.vertex_count
        for s in range(self.vertex_count):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._neighbors[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacency, other.adjacency) and self.labels == other.labels

    def __hash__(self):
        return hash((self.adjacency.tobytes(), self.labels))

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


class BipartiteGraph:
    """A graph together with a partition ``side1 | side2`` of its vertices.

    Every edge must join ``side1`` to ``side2``.
    """

    __slots__ = ("graph", "side1", "side2")

    def __init__(self, graph: Graph, side1: Iterable[int], side2: Iterable[int]):
        side1 = tuple(sorted(side1))
        side2 = tuple(sorted(side2))
        n = graph.vertex_count
        if sorted(side1 + side2) != list(range(n)):
            raise InputError("side1 and side2 must partition the vertex set")
        in1 = np.zeros(n, dtype=bool)
        in1[list(side1)] = True
        inner = graph.adjacency & (in1[:, None] == in1[None, :])
        if inner.any():
            u, v = (int(x) for x in np.argwhere(inner)[0])
            raise InputError(f"edge ({u}, {v}) lies within one side")
        self.graph = graph
        self.side1 = side1
        self.side2 = side2

    @classmethod
    def from_edges(cls, n1: int, n2: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        """Build from ``(i, j)`` pairs with ``i`` in ``range(n1)`` and ``j`` in ``range(n2)``.

        Side 1 gets indices ``0..n1-1`` and labels ``u1..``; side 2 gets
        ``n1..n1+n2-1`` and labels ``w1..``.
        """
        pairs = []
        for i, j in edges:
            if not (0 <= i < n1 and 0 <= j < n2):
                raise InputError(f"edge ({i}, {j}) out of range for sides {n1}x{n2}")
            pairs.append((i, n1 + j))
        labels = [f"u{i + 1}" for i in range(n1)] + [f"w{j + 1}" for j in range(n2)]
        g = Graph.from_edges(n1 + n2, pairs, labels)
        return cls(g, range(n1), range(n1, n1 + n2))

    @property
    def n1(self) -> int:
        return len(self.side1)

    @property
    def n2(self) -> int:
        return len(self.side2)

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.graph == other.graph and self.side1 == other.side1
                and self.side2 == other.side2)

    def __hash__(self):
        return hash((self.graph, self.side1, self.side2))

    def __repr__(self):
        return f"BipartiteGraph(n1={self.n1}, n2={self.n2}, m={self.graph.edge_count})"


def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = list(vertices)
    for v in vs:
        if not (0 <= v < g.vertex_count):
            raise InputError(f"vertex {v} out of range for {g.vertex_count} vertices")
    return vs


def neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``s`` adjacent to some vertex of ``s``."""
    vs = _check_vertices(g, s)
    if not vs:
        return frozenset()
    hit = g.adjacency[vs].any(axis=0)
    hit[vs] = False
    return frozenset(int(v) for v in np.flatnonzero(hit))


def path_length(seq: Sequence[int]) -> int:
    """Number of vertices minus one; the empty sequence has length -1."""
    return len(seq) - 1


def is_path(g: Graph, seq: Sequence[int], diagnostics: list[str] | None = None) -> bool:
    """True iff ``seq`` is a path of ``g`` (distinct vertices, consecutive ones adjacent).

    Out-of-range indices give ``False``; a reason is appended to
    ``diagnostics`` when a list is supplied.
    """
    def fail(msg):
        if diagnostics is not None:
            diagnostics.append(msg)
        return False

    n = g.vertex_count
    for v in seq:
        if not (0 <= v < n):
            return fail(f"vertex {v} out of range")
    if len(set(seq)) != len(seq):
        return fail("repeated vertex")
    for a, b in zip(seq, seq[1:]):
        if not g.adjacency[a, b]:
            return fail(f"{g.labels[a]} and {g.labels[b]} are not adjacent")
    return True


# -- text formats -----------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens, lineno, count):
    if len(tokens) != count:
        raise ParseError(f"expected {count} integers, got {' '.join(tokens)!r}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer field in {' '.join(tokens)!r}", lineno) from None


def parse_bipartite(text: str) -> BipartiteGraph:
    lines = list(_content_lines(text))
    if not lines or lines[0][1][:2] != ["p", "bip"]:
        raise ParseError("missing 'p bip <n1> <n2> <m>' header", lines[0][0] if lines else None)
    lineno, toks = lines[0]
    n1, n2, m = _ints(toks[2:], lineno, 3)
    if min(n1, n2, m) < 0:
        raise ParseError("negative count in header", lineno)
    seen = set()
    edges = []
    for lineno, toks in lines[1:]:
        if toks[0] != "e":
            raise ParseError(f"unexpected record {toks[0]!r}", lineno)
        i, j = _ints(toks[1:], lineno, 2)
        if not (1 <= i <= n1 + n2 and 1 <= j <= n1 + n2):
            raise ParseError(f"vertex index out of range in 'e {i} {j}'", lineno)
        if not (i <= n1 < j):
            raise ParseError(f"edge 'e {i} {j}' does not join side 1 to side 2", lineno)
        if (i, j) in seen:
            raise ParseError(f"duplicate edge 'e {i} {j}'", lineno)
        seen.add((i, j))
        edges.append((i - 1, j - 1 - n1))
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return BipartiteGraph.from_edges(n1, n2, edges)


def render_bipartite(g: BipartiteGraph) -> str:
    pos = {v: k + 1 for k, v in enumerate(g.side1 + g.side2)}
    edges = sorted(
        (pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u]) for u, v in g.graph.edges())
    out = [f"p bip {g.n1} {g.n2} {len(edges)}"]
    out += [f"e {i} {j}" for i, j in edges]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> tuple[Graph, int | None]:
    """Parse the general format; returns the graph and the optional ``v0`` index."""
    lines = list(_content_lines(text))
    if not lines or lines[0][1][:2] != ["p", "graph"]:
        raise ParseError("missing 'p graph <n> <m>' header", lines[0][0] if lines else None)
    lineno, toks = lines[0]
    n, m = _ints(toks[2:], lineno, 2)
    if min(n, m) < 0:
        raise ParseError("negative count in header", lineno)
    seen = set()
    v0 = None
    for lineno, toks in lines[1:]:
        if toks[0] == "v0":
            (i,) = _ints(toks[1:], lineno, 1)
            if not 1 <= i <= n:
                raise ParseError(f"start vertex {i} out of range", lineno)
            if v0 is not None:
                raise ParseError("start vertex given twice", lineno)
            v0 = i - 1
            continue
        if toks[0] != "e":
            raise ParseError(f"unexpected record {toks[0]!r}", lineno)
        i, j = _ints(toks[1:], lineno, 2)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"vertex index out of range in 'e {i} {j}'", lineno)
        if i == j:
            raise ParseError(f"self-loop 'e {i} {j}'", lineno)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(f"duplicate edge 'e {i} {j}'", lineno)
        seen.add(key)
    if len(seen) != m:
        raise ParseError(f"header announces {m} edges, found {len(seen)}")
    return Graph.from_edges(n, [(i - 1, j - 1) for i, j in sorted(seen)]), v0


def render_graph(g: Graph, v0: int | None = None) -> str:
    edges = g.edges()
    out = [f"p graph {g.vertex_count} {len(edges)}"]
    out += [f"e {u + 1} {v + 1}" for u, v in edges]
    if v0 is not None:
        out.append(f"v0 {v0 + 1}")
    return "\n".join(out) + "\n"
