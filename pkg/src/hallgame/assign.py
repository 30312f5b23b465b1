"""Assignments for the path game on an augmented bipartite graph.

An assignment ``(R, sigma)`` marks every reachable position as winning
(``sigma[v]`` is the reply to play) or losing (``sigma[v] is None``). This
module builds the augmented graph, computes an assignment with the
path-extension algorithm, verifies assignments, extracts the covering
matching or Hall violator they certify, and instruments the algorithm's
step invariants.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

import numpy as np

from . import _pykernel, kernel
from .errors import InputError, InternalInvariantError, ParseError
from .graph import BipartiteGraph, Graph, is_path, neighborhood

INTRO = "intro"
DEL = "del"


@dataclass(frozen=True, eq=False)
class AugmentedGraph:
    """Game arena: a bipartite graph with start vertex ``v0`` whose only neighbor is ``v1``.

    ``original`` is set when the arena was built by :func:`augment`; the
    original vertices then keep their indices, ``v1`` follows them and ``v0``
    comes last.
    """

    graph: Graph
    v0: int
    v1: int
    original: BipartiteGraph | None = None

    def __post_init__(self):
        g = self.graph
        n = g.vertex_count
        if not (0 <= self.v0 < n and 0 <= self.v1 < n):
            raise InputError("v0/v1 out of range")
        if g.neighbors(self.v0) != (self.v1,):
            raise InputError("the start vertex must have exactly one neighbor, v1")
        if not g.is_bipartite():
            raise InputError("the arena must be bipartite")
        if self.original is not None:
            orig = self.original
            m = orig.graph.vertex_count
            if n != m + 2 or self.v1 != m or self.v0 != m + 1:
                raise InputError("augmented numbering must be original vertices, v1, v0")
            if set(g.neighbors(self.v1)) != set(orig.side1) | {self.v0}:
                raise InputError("v1 must be adjacent to exactly side 1 and v0")
            if not np.array_equal(g.adjacency[:m, :m], orig.graph.adjacency):
                raise InputError("restriction to the original vertices differs from the source")

    @classmethod
    def from_graph(cls, graph: Graph, v0: int) -> AugmentedGraph:
        """Arena from a prebuilt graph; ``v1`` is the unique neighbor of ``v0``."""
        nb = graph.neighbors(v0)
        if len(nb) != 1:
            raise InputError(f"start vertex {graph.labels[v0]} has {len(nb)} neighbors, expected 1")
        return cls(graph, v0, nb[0])

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def labels(self) -> tuple[str, ...]:
        return self.graph.labels


def augment(g: BipartiteGraph) -> AugmentedGraph:
    """Add ``v1`` adjacent to all of side 1 and ``v0`` adjacent to ``v1``."""
    m = g.graph.vertex_count
    v1, v0 = m, m + 1
    adj = np.zeros((m + 2, m + 2), dtype=bool)
    adj[:m, :m] = g.graph.adjacency
    adj[v1, list(g.side1)] = adj[list(g.side1), v1] = True
    adj[v0, v1] = adj[v1, v0] = True
    labels = g.graph.labels + ("v1", "v0")
    if len(set(labels)) != len(labels):
        raise InputError("original labels clash with 'v0'/'v1'")
    return AugmentedGraph(Graph(adj, labels), v0, v1, g)


def tightness_instance(n: int) -> AugmentedGraph:
    """Worst-case arena on ``2n+1`` vertices: ``v_i`` is adjacent to ``w_1..w_{n-i+1}``.

    Vertex ``v_i`` has index ``i`` and ``w_j`` has index ``n + j``.
    """
    if n < 1:
        raise InputError(f"tightness instance needs n >= 1, got {n}")
    edges = [(0, 1)]
    for i in range(1, n + 1):
        edges += [(i, n + j) for j in range(1, n - i + 2)]
    labels = [f"v{i}" for i in range(n + 1)] + [f"w{j}" for j in range(1, n + 1)]
    return AugmentedGraph(Graph.from_edges(2 * n + 1, edges, labels), 0, 1)


def iteration_bound(n: int) -> int:
    """Proved upper bound ``2n^2 + 1`` on loop iterations for an ``n``-vertex arena."""
    return 2 * n * n + 1


@dataclass(frozen=True)
class Assignment:
    """``reachable`` is R; ``sigma[v]`` is a vertex or ``None`` for the undefined move."""

    reachable: frozenset[int]
    sigma: tuple[int | None, ...]

    def sigma_array(self) -> np.ndarray:
        return np.array([-1 if s is None else s for s in self.sigma], dtype=np.int64)


@dataclass(frozen=True)
class Stats:
    iterations: int
    introductions: int
    deletions: int


@dataclass(frozen=True)
class TraceStep:
    step: int
    kind: str
    x: int
    y: int | None


@dataclass(frozen=True)
class AlgoState:
    """Snapshot of the loop state at the end of step ``step`` (0 is the initial state)."""

    step: int
    path: tuple[int, ...]
    reachable: frozenset[int]
    sigma: tuple[int | None, ...]
    tau: tuple[int | None, ...]


@dataclass(frozen=True)
class AssignmentRun:
    assignment: Assignment
    stats: Stats
    trace: tuple[TraceStep, ...] | None = None
    backend: str = "python"

    def __iter__(self):
        # allows ``assignment, stats = compute_assignment(...)``
        return iter((self.assignment, self.stats))


@dataclass(frozen=True)
class Violation:
    condition: str
    vertex: int
    neighbor: int | None = None
    detail: str = ""

    def format(self, labels) -> str:
        def name(v):
            return labels[v] if 0 <= v < len(labels) else str(v)

        s = f"{self.condition} violated at {name(self.vertex)}"
        if self.neighbor is not None:
            s += f" (neighbor {name(self.neighbor)})"
        if self.detail:
            s += f": {self.detail}"
        return s


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def format(self, labels) -> list[str]:
        return [v.format(labels) for v in self.violations]


def _none(x: int) -> int | None:
    return None if x < 0 else int(x)


def _state(step, path, reachable, sigma, tau) -> AlgoState:
    return AlgoState(
        step, tuple(path), frozenset(i for i, r in enumerate(reachable) if r),
        tuple(_none(s) for s in sigma), tuple(_none(t) for t in tau))


def compute_assignment(
    ga: AugmentedGraph,
    tie_break: str = "lowest",
    seed: int | None = None,
    trace: bool = False,
    debug_invariants: bool = False,
    observer: Callable[[AlgoState], None] | None = None,
    backend: str | None = None,
) -> AssignmentRun:
    """Compute an assignment for ``(ga, ga.v0)``.

    ``tie_break`` is ``"lowest"`` (take the lowest-index candidate) or
    ``"random"`` (uniform choice from ``random.Random(seed)``). With
    ``debug_invariants`` every step boundary is checked by
    :func:`check_step_invariants`; ``observer`` receives each
    :class:`AlgoState` including the initial one. Both force the pure-Python
    kernel, as does a random tie-break.

    Raises :class:`InternalInvariantError` if the loop exceeds ``2n^2 + 1``
    iterations or a debug check fails.
    """
    if not isinstance(ga, AugmentedGraph):
        raise InputError("compute_assignment expects an AugmentedGraph")
    if tie_break not in ("lowest", "random"):
        raise InputError(f"unknown tie-break {tie_break!r}")
    n = ga.vertex_count
    bound = iteration_bound(n)

    hooks = []
    if observer is not None:
        hooks.append(observer)
    if debug_invariants:
        def check(st):
            verdict = check_step_invariants(st, ga)
            if not verdict:
                raise InternalInvariantError(
                    f"step {st.step}: " + "; ".join(verdict.format(ga.labels)))
        hooks.append(check)

    if tie_break == "lowest" and not hooks:
        used = backend or kernel.BACKEND
        result = kernel.compute_lowest(ga.graph, ga.v0, ga.v1, bound, trace, backend=used)
    else:
        used = "python"
        choose = None
        if tie_break == "random":
            rng = random.Random(seed)
            choose = lambda cands: cands[rng.randrange(len(cands))]  # noqa: E731
        on_step = None
        if hooks:
            init = [False] * n
            init[ga.v0] = init[ga.v1] = True
            st0 = _state(0, [ga.v0, ga.v1], init, [-1] * n, [-1] * n)
            for h in hooks:
                h(st0)

            def notify(it, path, reachable, sigma, tau):
                st = _state(it, path, reachable, sigma, tau)
                for h in hooks:
                    h(st)

            on_step = notify

        neighbors = [ga.graph.neighbors(v) for v in range(n)]
        result = _pykernel.compute(neighbors, ga.v0, ga.v1, bound, trace, choose, on_step)

    reachable, sigma, _tau, iterations, intros, dels, steps = result
    assignment = Assignment(
        frozenset(i for i, r in enumerate(reachable) if r), tuple(_none(s) for s in sigma))
    tsteps = None
    if steps is not None:
        tsteps = tuple(
            TraceStep(s, INTRO if kind == _pykernel.INTRO else DEL, int(x), _none(y))
            for s, (kind, x, y) in enumerate(steps, start=1))
    return AssignmentRun(assignment, Stats(int(iterations), int(intros), int(dels)), tsteps, used)


def verify_assignment(ga: AugmentedGraph, a: Assignment) -> Verdict:
    """Check conditions C1-C3 and ``v0 in R``; reports every violation found."""
    n = ga.vertex_count
    adj = ga.graph.adjacency
    out: list[Violation] = []
    if len(a.sigma) != n:
        return Verdict((Violation("sigma", 0, detail=f"defined on {len(a.sigma)} of {n} vertices"),))
    sig = a.sigma_array()
    bad_range = (sig < -1) | (sig >= n)
    for v in np.flatnonzero(bad_range):
        out.append(Violation("sigma", int(v), detail=f"value {int(sig[v])} out of range"))
    if bad_range.any():
        return Verdict(tuple(out))
    in_r = np.zeros(n, dtype=bool)
    if a.reachable:
        in_r[list(a.reachable)] = True
    if not in_r[ga.v0]:
        out.append(Violation("R", ga.v0, detail="start vertex not reachable"))

    win = sig >= 0
    # C1
    for v in np.flatnonzero(in_r & win):
        u = int(sig[v])
        v = int(v)
        if not adj[v, u]:
            out.append(Violation("C1", v, u, "sigma(v) is not a neighbor"))
        if not in_r[u]:
            out.append(Violation("C1", v, u, "sigma(v) not in R"))
        if win[u]:
            out.append(Violation("C1", v, u, "sigma(sigma(v)) is defined"))
    # C2
    lose_rows = np.flatnonzero(in_r & ~win)
    if len(lose_rows):
        bad = adj[lose_rows] & ~(in_r & win)[None, :]
        for r, u in zip(*np.nonzero(bad)):
            v = int(lose_rows[r])
            u = int(u)
            why = "neighbor not in R" if not in_r[u] else "neighbor also has undefined sigma"
            out.append(Violation("C2", v, u, why))
    # C3
    counts = np.bincount(sig[win], minlength=n)
    for v in np.flatnonzero(in_r & (counts > 1)):
        out.append(Violation("C3", int(v), detail=f"{int(counts[v])} preimages under sigma"))
    if counts[ga.v0] > 0:
        for u in np.flatnonzero(sig == ga.v0):
            out.append(Violation("C3", ga.v0, int(u), "start vertex has a preimage"))
    return Verdict(tuple(out))


@dataclass(frozen=True)
class MatchingCert:
    """Matching of the source graph covering side 1; edges are ``(side1, side2)`` pairs."""

    edges: frozenset[tuple[int, int]]

    def problems(self, g: BipartiteGraph) -> list[str]:
        out = []
        s1, s2 = set(g.side1), set(g.side2)
        used: set[int] = set()
        for u, w in sorted(self.edges):
            if u not in s1 or w not in s2:
                out.append(f"edge ({u}, {w}) does not join side 1 to side 2")
            elif not g.graph.has_edge(u, w):
                out.append(f"({u}, {w}) is not an edge")
            if u in used or w in used:
                out.append(f"edge ({u}, {w}) shares a vertex")
            used.update((u, w))
        missing = s1 - {u for u, _ in self.edges}
        if missing:
            out.append(f"side-1 vertices {sorted(missing)} uncovered")
        return out


@dataclass(frozen=True)
class ViolatorCert:
    """Set ``subset`` of side 1 whose neighborhood is smaller than itself."""

    subset: frozenset[int]
    witness_neighborhood: frozenset[int]

    def problems(self, g: BipartiteGraph) -> list[str]:
        out = []
        if not self.subset <= set(g.side1):
            out.append("subset is not contained in side 1")
            return out
        actual = neighborhood(g.graph, self.subset)
        if actual != self.witness_neighborhood:
            out.append("witness neighborhood differs from N(S)")
        if len(actual) >= len(self.subset):
            out.append(f"|N(S)| = {len(actual)} is not below |S| = {len(self.subset)}")
        return out


def extract_certificate(ga: AugmentedGraph, a: Assignment) -> MatchingCert | ViolatorCert:
    """Read off a matching covering side 1 (``sigma(v0)`` defined) or a Hall violator."""
    g = ga.original
    if g is None:
        raise InputError("certificate extraction needs an arena built by augment()")
    sigma = a.sigma
    if sigma[ga.v0] is not None:
        if sigma[ga.v0] != ga.v1:
            raise InternalInvariantError("sigma(v0) must be v1")
        s2 = set(g.side2)
        edges = set()
        for u in g.side1:
            w = sigma[u]
            if w is None or w not in s2:
                raise InternalInvariantError(f"side-1 vertex {ga.labels[u]} has no partner in side 2")
            edges.add((u, w))
        cert = MatchingCert(frozenset(edges))
    else:
        s = frozenset(u for u in g.side1 if u in a.reachable and sigma[u] is None)
        cert = ViolatorCert(s, neighborhood(g.graph, s))
    probs = cert.problems(g)
    if probs:
        raise InternalInvariantError("extracted certificate is invalid: " + "; ".join(probs))
    return cert


def check_step_invariants(st: AlgoState, ga: AugmentedGraph) -> Verdict:
    """Check the four loop invariants at a step boundary.

    (a) the play is a path from ``v0`` inside R; (b) ``(sigma, tau)`` only
    marks vertices of R and pairs up ``Q = R - V(P)`` into matches
    ``sigma(u) = v, tau(v) = u``; (c) and (d) are C1 and C2 restricted to Q,
    with C2 ignoring neighbors on the play.
    """
    n = ga.vertex_count
    adj = ga.graph.adjacency
    out: list[Violation] = []
    path = list(st.path)
    diag: list[str] = []
    if not is_path(ga.graph, path, diag):
        out.append(Violation("a", path[0] if path else ga.v0, detail="play is not a path: " + diag[0]))
    if path and path[0] != ga.v0:
        out.append(Violation("a", path[0], detail="play does not start at v0"))
    for v in path:
        if v not in st.reachable:
            out.append(Violation("a", v, detail="play vertex outside R"))

    sig = np.array([-1 if s is None else s for s in st.sigma], dtype=np.int64)
    tau = np.array([-1 if t is None else t for t in st.tau], dtype=np.int64)
    in_r = np.zeros(n, dtype=bool)
    in_r[list(st.reachable)] = True
    on_p = np.zeros(n, dtype=bool)
    on_p[path] = True
    in_q = in_r & ~on_p

    for u in np.flatnonzero(((sig >= 0) | (tau >= 0)) & ~in_r):
        out.append(Violation("b", int(u), detail="sigma or tau set outside R"))
    for u in np.flatnonzero(((sig >= 0) & ~in_r[np.maximum(sig, 0)])
                            | ((tau >= 0) & ~in_r[np.maximum(tau, 0)])):
        out.append(Violation("b", int(u), detail="sigma or tau points outside R"))
    for q in np.flatnonzero(in_q):
        q = int(q)
        s, t = int(sig[q]), int(tau[q])
        if s >= 0 and t < 0:
            ok = in_q[s] and sig[s] < 0 and tau[s] == q
        elif s < 0 and t >= 0:
            ok = in_q[t] and sig[t] == q and tau[t] < 0
        else:
            ok = False
        if not ok:
            out.append(Violation("b", q, detail="not part of a match inside Q"))

    for v in np.flatnonzero(in_q & (sig >= 0)):
        v = int(v)
        u = int(sig[v])
        if not (adj[v, u] and in_q[u] and sig[u] < 0):
            out.append(Violation("c", v, u))
    rows = np.flatnonzero(in_q & (sig < 0))
    if len(rows):
        bad = adj[rows] & ~on_p[None, :] & ~(in_q & (sig >= 0))[None, :]
        for r, u in zip(*np.nonzero(bad)):
            out.append(Violation("d", int(rows[r]), int(u)))
    return Verdict(tuple(out))


# -- text serialization --------------------------------------------------------

def _label(labels, v):
    return "_" if v is None else labels[v]


def render_assignment(ga: AugmentedGraph, a: Assignment, stats: Stats | None = None) -> str:
    labels = ga.labels
    out = ["R: " + " ".join(labels[v] for v in sorted(a.reachable))]
    out += [f"sigma {labels[v]} {_label(labels, s)}" for v, s in enumerate(a.sigma)]
    if stats is not None:
        out.append(f"stats iterations={stats.iterations} introductions={stats.introductions} "
                   f"deletions={stats.deletions}")
    return "\n".join(out) + "\n"


def parse_assignment(ga: AugmentedGraph, text: str) -> tuple[Assignment, Stats | None]:
    labels = ga.labels
    index = {lab: i for i, lab in enumerate(labels)}

    def vertex(tok, lineno):
        try:
            return index[tok]
        except KeyError:
            raise ParseError(f"unknown vertex {tok!r}", lineno) from None

    reachable = None
    sigma: dict[int, int | None] = {}
    stats = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("R:"):
            if reachable is not None:
                raise ParseError("R given twice", lineno)
            reachable = frozenset(vertex(t, lineno) for t in line[2:].split())
            continue
        toks = line.split()
        if toks[0] == "sigma":
            if len(toks) != 3:
                raise ParseError("expected 'sigma <v> <u|_>'", lineno)
            v = vertex(toks[1], lineno)
            if v in sigma:
                raise ParseError(f"sigma of {toks[1]} given twice", lineno)
            sigma[v] = None if toks[2] == "_" else vertex(toks[2], lineno)
        elif toks[0] == "stats":
            fields = {}
            for t in toks[1:]:
                key, _, val = t.partition("=")
                try:
                    fields[key] = int(val)
                except ValueError:
                    raise ParseError(f"bad stats field {t!r}", lineno) from None
            stats = Stats(fields.get("iterations", 0), fields.get("introductions", 0),
                          fields.get("deletions", 0))
        else:
            raise ParseError(f"unexpected record {toks[0]!r}", lineno)
    if reachable is None:
        raise ParseError("missing 'R:' line")
    missing = [labels[v] for v in range(len(labels)) if v not in sigma]
    if missing:
        raise ParseError(f"sigma undefined for {' '.join(missing)}")
    return Assignment(reachable, tuple(sigma[v] for v in range(len(labels)))), stats


def render_trace(ga: AugmentedGraph, steps: Iterable[TraceStep]) -> str:
    labels = ga.labels
    return "".join(
        f"step {s.step} {s.kind} {labels[s.x]} {_label(labels, s.y)}\n" for s in steps)


def render_certificate(ga: AugmentedGraph, cert: MatchingCert | ViolatorCert) -> str:
    labels = ga.labels
    if isinstance(cert, MatchingCert):
        lines = ["MATCHING"] + [f"{labels[u]} {labels[w]}" for u, w in sorted(cert.edges)]
    else:
        lines = ["VIOLATOR",
                 "S: " + " ".join(labels[u] for u in sorted(cert.subset)),
                 "N(S): " + " ".join(labels[w] for w in sorted(cert.witness_neighborhood))]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def parse_certificate(ga: AugmentedGraph, text: str) -> MatchingCert | ViolatorCert:
    labels = ga.labels
    index = {lab: i for i, lab in enumerate(labels)}
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty certificate")

    def ids(toks, lineno):
        try:
            return [index[t] for t in toks]
        except KeyError as exc:
            raise ParseError(f"unknown vertex {exc.args[0]!r}", lineno) from None

    if lines[0] == "MATCHING":
        edges = set()
        for k, ln in enumerate(lines[1:], start=2):
            pair = ids(ln.split(), k)
            if len(pair) != 2:
                raise ParseError("expected '<u> <w>'", k)
            edges.add((pair[0], pair[1]))
        return MatchingCert(frozenset(edges))
    if lines[0] == "VIOLATOR" and len(lines) == 3:
        if not lines[1].startswith("S:") or not lines[2].startswith("N(S):"):
            raise ParseError("expected 'S:' and 'N(S):' lines")
        return ViolatorCert(frozenset(ids(lines[1][2:].split(), 2)),
                            frozenset(ids(lines[2][5:].split(), 3)))
    raise ParseError("certificate must start with MATCHING or VIOLATOR")
