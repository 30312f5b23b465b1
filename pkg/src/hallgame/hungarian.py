"""Maximum-weight perfect matching with the assignment algorithm as feasibility test.

The Hungarian method keeps integer dual potentials ``y1`` (rows) and ``y2``
(columns) with ``y1[u] + y2[v] >= w[u, v]``. Each round looks for a matching
covering the rows inside the equality subgraph of tight pairs. If
:func:`~hallgame.assign.compute_assignment` finds one, it is optimal.
Otherwise the Hall violator ``S`` it certifies drives the dual update
``y1[S] -= delta``, ``y2[N(S)] += delta``.

Weighted instance format::

    p wbip <n>
    <n rows of n integers; '-' marks a missing edge>
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .assign import MatchingCert, augment, compute_assignment, extract_certificate
from .errors import InputError, InternalInvariantError, ParseError
from .graph import BipartiteGraph

MISSING = -(10**9)
"""Weight standing in for an absent edge; large enough to never be chosen when avoidable."""


@dataclass(frozen=True, eq=False)
class WeightedBipartiteGraph:
    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=np.int64, copy=True)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise InputError(f"weight matrix must be square, got shape {w.shape}")
        if w.shape[0] < 1:
            raise InputError("weighted instance needs n >= 1")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True)
class DualPair:
    y1: tuple[int, ...]
    y2: tuple[int, ...]


@dataclass(frozen=True)
class WeightedMatching:
    matching: tuple[tuple[int, int], ...]
    duals: DualPair
    total_weight: int
    updates: int


def dual_problems(g: WeightedBipartiteGraph, matching, duals: DualPair) -> list[str]:
    """Feasibility and complementary-slackness failures, empty when optimal."""
    w = g.weights
    y1 = np.array(duals.y1, dtype=np.int64)
    y2 = np.array(duals.y2, dtype=np.int64)
    slack = y1[:, None] + y2[None, :] - w
    out = []
    for u, v in np.argwhere(slack < 0):
        out.append(f"dual infeasible at ({u}, {v})")
    rows = sorted(u for u, _ in matching)
    cols = sorted(v for _, v in matching)
    if rows != list(range(g.n)) or cols != list(range(g.n)):
        out.append("matching is not perfect")
    for u, v in matching:
        if slack[u, v] != 0:
            out.append(f"matched pair ({u}, {v}) is not tight")
    return out


def max_weight_matching(g: WeightedBipartiteGraph) -> WeightedMatching:
    """Perfect matching of maximum total weight, with certifying duals."""
    if not isinstance(g, WeightedBipartiteGraph):
        raise InputError("max_weight_matching expects a WeightedBipartiteGraph")
    n = g.n
    w = g.weights
    y1 = w.max(axis=1).copy()
    y2 = np.zeros(n, dtype=np.int64)
    updates = 0
    while True:
        tight = (y1[:, None] + y2[None, :]) == w
        eq = BipartiteGraph.from_edges(n, n, [(int(u), int(v)) for u, v in np.argwhere(tight)])
        ga = augment(eq)
        cert = extract_certificate(ga, compute_assignment(ga).assignment)
        if isinstance(cert, MatchingCert):
            matching = tuple(sorted((u, v - n) for u, v in cert.edges))
            break
        s = np.array(sorted(cert.subset), dtype=np.int64)
        t = np.array(sorted(v - n for v in cert.witness_neighborhood), dtype=np.int64)
        outside = np.ones(n, dtype=bool)
        outside[t] = False
        if not outside.any():
            raise InternalInvariantError("violator neighborhood covers every column")
        slack = y1[s][:, None] + y2[outside][None, :] - w[np.ix_(s, np.flatnonzero(outside))]
        delta = int(slack.min())
        if delta <= 0:
            raise InternalInvariantError(f"non-positive dual step {delta}")
        y1[s] -= delta
        y2[t] += delta
        updates += 1
        if updates > n * n:
            raise InternalInvariantError(f"{updates} dual updates exceed the n^2 budget")
    duals = DualPair(tuple(int(x) for x in y1), tuple(int(x) for x in y2))
    total = int(sum(int(w[u, v]) for u, v in matching))
    probs = dual_problems(g, matching, duals)
    if probs:
        raise InternalInvariantError("; ".join(probs))
    return WeightedMatching(matching, duals, total, updates)


def parse_weighted(text: str) -> WeightedBipartiteGraph:
    rows = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if n is None:
            if toks[:2] != ["p", "wbip"] or len(toks) != 3:
                raise ParseError("missing 'p wbip <n>' header", lineno)
            try:
                n = int(toks[2])
            except ValueError:
                raise ParseError("non-integer size", lineno) from None
            if n < 1:
                raise ParseError("size must be at least 1", lineno)
            continue
        if len(toks) != n:
            raise ParseError(f"expected {n} weights, got {len(toks)}", lineno)
        try:
            rows.append([MISSING if t == "-" else int(t) for t in toks])
        except ValueError:
            raise ParseError("non-integer weight", lineno) from None
    if n is None:
        raise ParseError("empty weighted instance")
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, got {len(rows)}")
    return WeightedBipartiteGraph(np.array(rows, dtype=np.int64))


def render_weighted(g: WeightedBipartiteGraph) -> str:
    lines = [f"p wbip {g.n}"]
    lines += [" ".join("-" if x == MISSING else str(int(x)) for x in row) for row in g.weights]
    return "\n".join(lines) + "\n"
