"""Hypergraphs as incidence bipartite graphs, and the strong-path game on them.

A hypergraph is a bipartite graph whose two sides are the hypervertices
``V`` and the hyperedges ``E``. Elements of the incidence graph ("W
indices") are numbered vertices first: hypervertex ``i`` is ``i`` and
hyperedge ``j`` is ``len(V) + j``. Most functions take plain vertex and edge
indices and convert internally.

The exhaustive procedures here (balancedness, optimal matchings and
transversals, game values, assignment search) are exponential and refuse
instances above configurable bounds.

File format::

    p hyp <n> <m>
    h <j>: <i1> <i2> ...     (m lines, 1-based)
    U: <i1> <i2> ...         (optional independent transversal)
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import bounds
from .assign import Verdict, Violation
from .errors import InputError, InternalInvariantError, ParseError
from .game import Strategy
from .graph import BipartiteGraph, Graph, is_path


class Hypergraph:
    """Immutable hypergraph stored as its incidence bipartite graph."""

    __slots__ = ("incidence", "n_vertices", "n_edges", "members", "incident",
                 "member_mask", "incident_mask")

    def __init__(self, incidence: BipartiteGraph):
        nv = incidence.n1
        if incidence.side1 != tuple(range(nv)):
            raise InputError("hypervertices must be the first incidence vertices")
        self.incidence = incidence
        self.n_vertices = nv
        self.n_edges = incidence.n2
        g = incidence.graph
        self.members = tuple(g.neighbors(nv + j) for j in range(self.n_edges))
        self.incident = tuple(tuple(x - nv for x in g.neighbors(i)) for i in range(nv))
        self.member_mask = tuple(sum(1 << v for v in m) for m in self.members)
        self.incident_mask = tuple(sum(1 << e for e in es) for es in self.incident)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]],
                   vertex_labels: Sequence[str] | None = None,
                   edge_labels: Sequence[str] | None = None) -> Hypergraph:
        """Hyperedge ``j`` contains the listed vertex indices (0-based)."""
        edges = [list(e) for e in edges]
        m = len(edges)
        adj = np.zeros((n + m, n + m), dtype=bool)
        for j, e in enumerate(edges):
            if len(set(e)) != len(e):
                raise InputError(f"hyperedge {j} lists a vertex twice")
            for v in e:
                if not 0 <= v < n:
                    raise InputError(f"vertex {v} of hyperedge {j} out of range")
                adj[v, n + j] = adj[n + j, v] = True
        vl = list(vertex_labels) if vertex_labels is not None else [str(i + 1) for i in range(n)]
        el = list(edge_labels) if edge_labels is not None else [f"h{j + 1}" for j in range(m)]
        return cls(BipartiteGraph(Graph(adj, vl + el), range(n), range(n, n + m)))

    @property
    def graph(self) -> Graph:
        return self.incidence.graph

    @property
    def vertex_labels(self) -> tuple[str, ...]:
        return self.graph.labels[: self.n_vertices]

    @property
    def edge_labels(self) -> tuple[str, ...]:
        return self.graph.labels[self.n_vertices:]

    @property
    def element_count(self) -> int:
        return self.n_vertices + self.n_edges

    def edge_element(self, j: int) -> int:
        return self.n_vertices + j

    def edge_sets(self) -> list[frozenset[int]]:
        return [frozenset(m) for m in self.members]

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.incidence == other.incidence

    def __hash__(self):
        return hash(self.incidence)

    def __repr__(self):
        return f"Hypergraph(|V|={self.n_vertices}, E={[sorted(m) for m in self.members]})"


# -- strong paths and cycles ------------------------------------------------------

def is_strong_path(h: Hypergraph, seq: Sequence[int]) -> bool:
    """``seq`` (W indices) is a path whose support induces only consecutive incidences."""
    if not is_path(h.graph, seq):
        return False
    sub = h.graph.adjacency[np.ix_(seq, seq)]
    k = len(seq)
    band = np.eye(k, k, 1, dtype=bool) | np.eye(k, k, -1, dtype=bool)
    return bool(np.array_equal(sub, band))


def is_strong_cycle(h: Hypergraph, seq: Sequence[int]) -> bool:
    """Closed walk ``z1 .. zk`` with ``z1 = zk``, otherwise distinct, inducing exactly its edges.

    At least three distinct elements are required; a back-and-forth walk
    ``u e u`` is not treated as a cycle.
    """
    if len(seq) < 4 or seq[0] != seq[-1]:
        return False
    support = list(seq[:-1])
    if not is_path(h.graph, support) or not h.graph.has_edge(seq[-2], seq[-1]):
        return False
    k = len(support)
    sub = h.graph.adjacency[np.ix_(support, support)]
    ring = np.eye(k, k, 1, dtype=bool) | np.eye(k, k, -1, dtype=bool)
    ring[0, k - 1] = ring[k - 1, 0] = True
    return bool(np.array_equal(sub, ring))


def strong_cycles(h: Hypergraph) -> Iterator[tuple[int, ...]]:
    """Every strong cycle once, as a closed W-index sequence.

    Canonical form: starts at its smallest element, second element smaller
    than the second-to-last.
    """
    nbr = [sum(1 << y for y in h.graph.neighbors(x)) for x in range(h.element_count)]
    for s in range(h.element_count):
        above = ~((1 << (s + 1)) - 1)

        def extend(path, block):
            last = path[-1]
            cand = nbr[last] & ~block & above
            while cand:
                low = cand & -cand
                y = low.bit_length() - 1
                cand ^= low
                if nbr[y] >> s & 1:
                    if len(path) >= 3 and path[1] < y:
                        yield tuple(path) + (y, s)
                    continue
                yield from extend(path + [y], block | nbr[last] | low)

        for x in range(s + 1, h.element_count):
            if nbr[s] >> x & 1:
                # interior vertices may not touch s again except at closure, handled above
                yield from extend([s, x], (1 << s) | (1 << x))


@dataclass(frozen=True)
class BalanceVerdict:
    balanced: bool
    witness: tuple[int, ...] | None = None

    @property
    def witness_length(self) -> int | None:
        return None if self.witness is None else len(self.witness) - 1


def is_balanced_bruteforce(h: Hypergraph, max_elements: int | None = None) -> BalanceVerdict:
    """Balanced iff no strong cycle has length 6, 10, 14, ...; otherwise a shortest witness."""
    bounds.check("element count |V|+|E|", h.element_count, "HALLGAME_BALANCED_MAX_ELEMENTS",
                 max_elements)
    best = None
    for cyc in strong_cycles(h):
        length = len(cyc) - 1
        if length >= 6 and length % 4 == 2:
            if best is None or (length, cyc) < (len(best) - 1, best):
                best = cyc
    return BalanceVerdict(best is None, best)


# -- matchings, transversals, independents ------------------------------------------

def _popcount_each(mask_list, chosen_mask):
    return [(m & chosen_mask).bit_count() for m in mask_list]


def is_matching(h: Hypergraph, edges: Iterable[int]) -> bool:
    used = 0
    for e in edges:
        if used & h.member_mask[e]:
            return False
        used |= h.member_mask[e]
    return True


def is_transversal(h: Hypergraph, vertices: Iterable[int]) -> bool:
    mask = sum(1 << v for v in set(vertices))
    return all(m & mask for m in h.member_mask)


def is_independent(h: Hypergraph, vertices: Iterable[int]) -> bool:
    mask = sum(1 << v for v in set(vertices))
    return all(c <= 1 for c in _popcount_each(h.member_mask, mask))


def max_matching_bruteforce(h: Hypergraph, max_edges: int | None = None) -> frozenset[int]:
    """A maximum matching; the lexicographically first one of maximum size."""
    bounds.check("hyperedge count", h.n_edges, "HALLGAME_HYPER_MATCHING_MAX_EDGES", max_edges)
    for k in range(h.n_edges, 0, -1):
        for combo in combinations(range(h.n_edges), k):
            if is_matching(h, combo):
                return frozenset(combo)
    return frozenset()


def min_transversal_bruteforce(h: Hypergraph, max_vertices: int | None = None) -> frozenset[int] | None:
    """A minimum transversal (lexicographically first), or ``None`` if an edge is empty."""
    bounds.check("hypervertex count", h.n_vertices, "HALLGAME_TRANSVERSAL_MAX_VERTICES",
                 max_vertices)
    if any(m == 0 for m in h.member_mask):
        return None
    for k in range(h.n_vertices + 1):
        for combo in combinations(range(h.n_vertices), k):
            if is_transversal(h, combo):
                return frozenset(combo)
    return None


def find_independent_transversal(h: Hypergraph, max_vertices: int | None = None) -> frozenset[int] | None:
    """Smallest vertex set meeting every hyperedge exactly once (size, then index order)."""
    bounds.check("hypervertex count", h.n_vertices, "HALLGAME_TRANSVERSAL_MAX_VERTICES",
                 max_vertices)
    for k in range(h.n_vertices + 1):
        for combo in combinations(range(h.n_vertices), k):
            mask = sum(1 << v for v in combo)
            if all((m & mask).bit_count() == 1 for m in h.member_mask):
                return frozenset(combo)
    return None


def matching_covering_bruteforce(h: Hypergraph, cover: Iterable[int]) -> frozenset[int] | None:
    """A matching whose edges meet every vertex of ``cover``, or ``None``."""
    targets = sorted(set(cover))

    def search(i, used, chosen):
        while i < len(targets) and used >> targets[i] & 1:
            i += 1
        if i == len(targets):
            return chosen
        for e in h.incident[targets[i]]:
            if not used & h.member_mask[e]:
                r = search(i + 1, used | h.member_mask[e], chosen | {e})
                if r is not None:
                    return r
        return None

    r = search(0, 0, frozenset())
    return None if r is None else frozenset(r)


def partial_subhypergraph_gap(h: Hypergraph, max_elements: int | None = None):
    """First ``(vertices, edges)`` whose partial subhypergraph has ``nu != tau``, else ``None``.

    The partial subhypergraph keeps the chosen edges, each cut down to the
    chosen vertices; edges that become empty are dropped.
    """
    bounds.check("element count |V|+|E|", h.element_count, "HALLGAME_BALANCED_MAX_ELEMENTS",
                 max_elements)
    for vmask in range(1 << h.n_vertices):
        vs = [v for v in range(h.n_vertices) if vmask >> v & 1]
        for emask in range(1, 1 << h.n_edges):
            es = [e for e in range(h.n_edges) if emask >> e & 1]
            cut = [[v for v in h.members[e] if vmask >> v & 1] for e in es]
            cut = [c for c in cut if c]
            if not cut:
                continue
            index = {v: i for i, v in enumerate(vs)}
            sub = Hypergraph.from_edges(len(vs), [[index[v] for v in c] for c in cut])
            if len(max_matching_bruteforce(sub)) != len(min_transversal_bruteforce(sub)):
                return frozenset(vs), frozenset(es)
    return None


# -- the augmented hypergraph ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AugmentedHypergraph:
    """``hyper`` extends ``original`` with ``v1`` (index n), ``v0`` (n+1), ``e0 = {v0, v1}``
    (edge index m) and ``f_u = {v1, u}`` for ``u`` in ``U`` (edge indices m+1.., in order of u).
    """

    hyper: Hypergraph
    original: Hypergraph
    U: frozenset[int]
    v0: int
    v1: int
    e0: int
    f: dict

    @property
    def labels(self) -> tuple[str, ...]:
        return self.hyper.graph.labels

    def element(self, *, vertex=None, edge=None) -> int:
        return vertex if edge is None else self.hyper.edge_element(edge)


def augment_hypergraph(h: Hypergraph, u_set: Iterable[int]) -> AugmentedHypergraph:
    u_set = frozenset(u_set)
    for u in u_set:
        if not 0 <= u < h.n_vertices:
            raise InputError(f"U vertex {u} out of range")
    mask = sum(1 << u for u in u_set)
    for j, m in enumerate(h.member_mask):
        c = (m & mask).bit_count()
        if c > 1:
            raise InputError(f"U is not independent: hyperedge {h.edge_labels[j]} meets it {c} times")
        if c == 0:
            raise InputError(f"U is not a transversal: hyperedge {h.edge_labels[j]} misses it")
    n, m = h.n_vertices, h.n_edges
    v1, v0 = n, n + 1
    us = sorted(u_set)
    edges = [list(e) for e in h.members] + [[v0, v1]] + [[v1, u] for u in us]
    vl = list(h.vertex_labels) + ["v1", "v0"]
    el = list(h.edge_labels) + ["e0"] + [f"f{h.vertex_labels[u]}" for u in us]
    if len(set(vl + el)) != len(vl) + len(el):
        raise InputError("hypergraph labels clash with the added elements")
    hp = Hypergraph.from_edges(n + 2, edges, vl, el)
    return AugmentedHypergraph(hp, h, u_set, v0, v1, m, {u: m + 1 + k for k, u in enumerate(us)})


# -- assignments ---------------------------------------------------------------------

@dataclass(frozen=True)
class HyperAssignment:
    """``sigma[v]`` is an edge index of the augmented hypergraph or ``None``."""

    reachable: frozenset[int]
    sigma: tuple[int | None, ...]


def verify_hyper_assignment(ha: AugmentedHypergraph, a: HyperAssignment) -> Verdict:
    """Check C1-C3 and ``v0 in R``. Violations use W indices of the augmented hypergraph."""
    hp = ha.hyper
    nv = hp.n_vertices
    out = []
    if len(a.sigma) != nv:
        return Verdict((Violation("sigma", 0, detail=f"defined on {len(a.sigma)} of {nv} vertices"),))
    for v, e in enumerate(a.sigma):
        if e is not None and not 0 <= e < hp.n_edges:
            out.append(Violation("sigma", v, detail=f"value {e} is not a hyperedge"))
    if out:
        return Verdict(tuple(out))
    R = a.reachable
    sig = a.sigma
    if ha.v0 not in R:
        out.append(Violation("R", ha.v0, detail="start vertex not reachable"))
    for v in sorted(R):
        e = sig[v]
        if e is not None:
            if not hp.member_mask[e] >> v & 1:
                out.append(Violation("C1", v, nv + e, "sigma(v) is not incident to v"))
            for u in hp.members[e]:
                if u == v:
                    continue
                if u not in R:
                    out.append(Violation("C1", v, u, "co-member not in R"))
                elif sig[u] is not None:
                    out.append(Violation("C1", v, u, "co-member has sigma defined"))
        else:
            for f in hp.incident[v]:
                if not any(u in R and sig[u] is not None for u in hp.members[f]):
                    out.append(Violation("C2", v, nv + f, "no member with sigma defined"))
    nsig = [[] for _ in range(nv)]
    for w, e in enumerate(sig):
        if e is not None:
            for u in hp.members[e]:
                if u != w:
                    nsig[u].append(w)
    for v in sorted(R):
        if len(nsig[v]) > 1:
            out.append(Violation("C3", v, detail=f"{len(nsig[v])} vertices point into it"))
    for w in nsig[ha.v0]:
        out.append(Violation("C3", ha.v0, w, "start vertex is pointed into"))
    return Verdict(tuple(out))


def _require(ha, a, what):
    verdict = verify_hyper_assignment(ha, a)
    if not verdict:
        raise InternalInvariantError(
            f"{what} produced an invalid assignment: " + "; ".join(verdict.format(ha.labels)))
    return a


def assignment_from_matching(ha: AugmentedHypergraph, m: Iterable[int]) -> HyperAssignment:
    """Assignment with ``sigma(v0) = e0`` from a matching of the original covering U."""
    m = frozenset(m)
    h = ha.original
    if not all(0 <= e < h.n_edges for e in m):
        raise InputError("matching uses an edge outside the original hypergraph")
    if not is_matching(h, m):
        raise InputError("edge set is not a matching")
    sigma: list[int | None] = [None] * ha.hyper.n_vertices
    sigma[ha.v0] = ha.e0
    for u in ha.U:
        hits = [e for e in m if h.member_mask[e] >> u & 1]
        if not hits:
            raise InputError(f"matching does not cover U vertex {h.vertex_labels[u]}")
        sigma[u] = hits[0]
    a = HyperAssignment(frozenset(range(ha.hyper.n_vertices)), tuple(sigma))
    return _require(ha, a, "matching construction")


def assignment_from_duals(ha: AugmentedHypergraph, m: Iterable[int], t: Iterable[int],
                          r: int) -> HyperAssignment:
    """Assignment with ``sigma(v0)`` undefined from an optimal matching/transversal pair.

    ``r`` is a U vertex left uncovered by ``m``. Requires ``|m| = |t|``, so
    every transversal vertex lies in exactly one matching edge and every
    matching edge holds exactly one transversal vertex.
    """
    m, t = frozenset(m), frozenset(t)
    h = ha.original
    if not is_matching(h, m):
        raise InputError("edge set is not a matching")
    if not is_transversal(h, t):
        raise InputError("vertex set is not a transversal")
    if len(m) != len(t):
        raise InputError(f"|M| = {len(m)} differs from |T| = {len(t)}: "
                         "hypergraph not balanced or pair not optimal")
    if r not in ha.U:
        raise InputError("r must belong to U")
    if any(h.member_mask[e] >> r & 1 for e in m):
        raise InputError("r is covered by the matching")
    tmask = sum(1 << v for v in t)
    for e in m:
        if (h.member_mask[e] & tmask).bit_count() != 1:
            raise InputError(f"matching edge {h.edge_labels[e]} holds != 1 transversal vertex")
    sigma: list[int | None] = [None] * ha.hyper.n_vertices
    sigma[ha.v1] = ha.f[r]
    for v in t:
        hits = [e for e in m if h.member_mask[e] >> v & 1]
        if len(hits) != 1:
            raise InputError(f"transversal vertex {h.vertex_labels[v]} lies in {len(hits)} matching edges")
        sigma[v] = hits[0]
    a = HyperAssignment(frozenset(range(ha.hyper.n_vertices)), tuple(sigma))
    return _require(ha, a, "duality construction")


@dataclass(frozen=True)
class Construction:
    assignment: HyperAssignment
    kind: str                   # "matching" or "duals"
    matching: frozenset[int]
    transversal: frozenset[int] | None = None
    r: int | None = None


def construct_assignment(ha: AugmentedHypergraph) -> Construction:
    """Apply whichever of the two constructions fits: a covering matching, else duality."""
    h = ha.original
    cover = matching_covering_bruteforce(h, ha.U)
    if cover is not None:
        return Construction(assignment_from_matching(ha, cover), "matching", cover)
    m = max_matching_bruteforce(h)
    t = min_transversal_bruteforce(h)
    covered = 0
    for e in m:
        covered |= h.member_mask[e]
    r = min(u for u in ha.U if not covered >> u & 1)
    return Construction(assignment_from_duals(ha, m, t, r), "duals", m, t, r)


def search_assignment_bruteforce(ha: AugmentedHypergraph, max_vertices: int | None = None,
                                 max_edges: int | None = None) -> HyperAssignment | None:
    """Backtracking search for an assignment with ``R`` equal to all vertices.

    With every vertex reachable the conditions reduce to: each hyperedge
    has a member with ``sigma`` defined (C2); a vertex pointed into by
    another's ``sigma`` has ``sigma`` undefined (C1) and at most one such
    pointer (C3); nothing points into ``v0``. Vertices are assigned in index
    order, trying hyperedges in index order before the undefined value.
    """
    hp = ha.hyper
    bounds.check("vertex count", hp.n_vertices, "HALLGAME_SEARCH_MAX_VERTICES", max_vertices)
    bounds.check("hyperedge count", hp.n_edges, "HALLGAME_SEARCH_MAX_EDGES", max_edges)
    nv = hp.n_vertices
    UNSET = -2
    sigma = [UNSET] * nv
    pointed = [0] * nv

    def edge_dead(e):
        # all members assigned and none defined
        return all(sigma[u] == -1 for u in hp.members[e])

    def search(v):
        if v == nv:
            return True
        options = list(hp.incident[v]) + [-1]
        for e in options:
            if e >= 0:
                if pointed[v]:
                    continue
                others = [u for u in hp.members[e] if u != v]
                if any(u == ha.v0 or pointed[u] or sigma[u] >= 0 for u in others):
                    continue
                for u in others:
                    pointed[u] += 1
                sigma[v] = e
                if search(v + 1):
                    return True
                for u in others:
                    pointed[u] -= 1
            else:
                sigma[v] = -1
                if not any(edge_dead(f) for f in hp.incident[v]) and search(v + 1):
                    return True
            sigma[v] = UNSET
        return False

    if any(not m for m in hp.members):
        return None
    if not search(0):
        return None
    a = HyperAssignment(frozenset(range(nv)), tuple(None if s < 0 else s for s in sigma))
    return _require(ha, a, "assignment search")


# -- the game -----------------------------------------------------------------------

@dataclass(frozen=True)
class HyperPlay:
    """``moves`` is the play ``v0 e0 v1 e1 ...`` as ``(vertex, edge)`` pairs."""

    arena: AugmentedHypergraph
    moves: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.moves) - 1

    @property
    def to_move(self) -> int:
        return 1 if (self.k - 1) % 2 == 1 else 2

    def sequence(self) -> list[int]:
        """The play as W indices of the augmented hypergraph."""
        hp = self.arena.hyper
        return [x for v, e in self.moves for x in (v, hp.edge_element(e))]


def initial_hyper_state(ha: AugmentedHypergraph) -> HyperPlay:
    return HyperPlay(ha, ((ha.v0, ha.e0),))


def _legal(hp: Hypergraph, moves) -> list[tuple[int, int]]:
    pv = pe = vblock_edges = eblock = 0
    for v, e in moves:
        pv |= 1 << v
        pe |= 1 << e
        eblock |= hp.incident_mask[v]
    for _, e in moves[:-1]:
        vblock_edges |= hp.member_mask[e]
    last_e = moves[-1][1]
    vcand = hp.member_mask[last_e] & ~(pv | vblock_edges)
    eblock |= pe
    out = []
    while vcand:
        low = vcand & -vcand
        v = low.bit_length() - 1
        vcand ^= low
        ecand = hp.incident_mask[v] & ~eblock
        while ecand:
            lo = ecand & -ecand
            out.append((v, lo.bit_length() - 1))
            ecand ^= lo
    return out


def hyper_legal_moves(st: HyperPlay) -> frozenset[tuple[int, int]]:
    """Pairs ``(v, e)`` whose addition keeps the play a strong path."""
    return frozenset(_legal(st.arena.hyper, st.moves))


def hyper_designated_player(ha: AugmentedHypergraph, a: HyperAssignment) -> int:
    return 1 if a.sigma[ha.v0] is None else 2


def compatibility_violations(ha: AugmentedHypergraph, a: HyperAssignment, moves) -> list[int]:
    """Indices ``i`` where the play departs from the assignment's alternation.

    The designated player's opponent sits on vertices with ``sigma``
    undefined; the other positions have ``sigma`` defined and ``e_i = sigma(v_i)``.
    Index ``-1`` flags a play that is not a strong path.
    """
    defined_parity = 1 if a.sigma[ha.v0] is None else 0
    bad = []
    for i, (v, e) in enumerate(moves):
        ok = v in a.reachable
        if i % 2 == defined_parity:
            ok = ok and a.sigma[v] is not None and a.sigma[v] == e
        else:
            ok = ok and a.sigma[v] is None
        if not ok:
            bad.append(i)
    st = HyperPlay(ha, tuple(moves))
    if not is_strong_path(ha.hyper, st.sequence()):
        bad.append(-1)
    return bad


def hyper_strategy_from_assignment(ha: AugmentedHypergraph, a: HyperAssignment) -> Strategy:
    """From ``e_k``, move to the lowest ``v`` in ``e_k - {v_k}`` with ``sigma(v)`` defined, then ``sigma(v)``."""
    player = hyper_designated_player(ha, a)
    hp = ha.hyper

    def move(st: HyperPlay):
        bad = compatibility_violations(ha, a, st.moves)
        if bad:
            raise InternalInvariantError(f"play is not compatible with the assignment at {bad}")
        vk, ek = st.moves[-1]
        for v in hp.members[ek]:
            if v != vk and a.sigma[v] is not None:
                return (v, a.sigma[v])
        raise InternalInvariantError(
            f"no vertex of {ha.labels[hp.edge_element(ek)]} other than "
            f"{ha.labels[vk]} has sigma defined")

    return Strategy(f"hyper-assignment(player {player})", move, player)


def hyper_random_strategy(seed: int | None = None) -> Strategy:
    import random

    rng = random.Random(seed)

    def move(st):
        z = sorted(hyper_legal_moves(st))
        return rng.choice(z) if z else None

    return Strategy(f"hyper-random(seed={seed})", move)


@dataclass(frozen=True)
class HyperMatchResult:
    winner: int
    moves: tuple[tuple[int, int], ...]
    forfeit: bool = False
    reason: str = "no legal move"


def play_hyper_match(p1: Strategy, p2: Strategy, ha: AugmentedHypergraph) -> HyperMatchResult:
    st = initial_hyper_state(ha)
    while True:
        mover = st.to_move
        z = hyper_legal_moves(st)
        if not z:
            return HyperMatchResult(3 - mover, st.moves)
        mv = (p1 if mover == 1 else p2).move(st)
        if mv is None:
            return HyperMatchResult(3 - mover, st.moves, reason=f"player {mover} resigned")
        if tuple(mv) not in z:
            return HyperMatchResult(3 - mover, st.moves, True, f"player {mover} made illegal move {mv}")
        st = HyperPlay(ha, st.moves + (tuple(mv),))


def enumerate_hyper_adversary_playouts(ha: AugmentedHypergraph, strategy: Strategy, player: int):
    """Yield ``(winner, moves, forfeit)`` over every opponent branch."""
    stack = [initial_hyper_state(ha)]
    while stack:
        st = stack.pop()
        z = hyper_legal_moves(st)
        if not z:
            yield 3 - st.to_move, st.moves, False
            continue
        if st.to_move == player:
            mv = strategy.move(st)
            if mv is None or tuple(mv) not in z:
                yield 3 - player, st.moves, True
                continue
            stack.append(HyperPlay(ha, st.moves + (tuple(mv),)))
        else:
            for mv in sorted(z, reverse=True):
                stack.append(HyperPlay(ha, st.moves + (mv,)))


def hyper_minimax(ha: AugmentedHypergraph, max_elements: int | None = None) -> int:
    """Winner (1 or 2) under optimal play; memoized on the play's support and last edge."""
    hp = ha.hyper
    bounds.check("element count |W'|", hp.element_count, "HALLGAME_HYPER_MINIMAX_MAX_ELEMENTS",
                 max_elements)
    memo: dict[tuple[int, int, int], bool] = {}

    def wins(pv, pe, last_e):
        key = (pv, pe, last_e)
        r = memo.get(key)
        if r is not None:
            return r
        vblock = pv
        rest = pe & ~(1 << last_e)
        while rest:
            lo = rest & -rest
            vblock |= hp.member_mask[lo.bit_length() - 1]
            rest ^= lo
        eblock = pe
        rest = pv
        while rest:
            lo = rest & -rest
            eblock |= hp.incident_mask[lo.bit_length() - 1]
            rest ^= lo
        r = False
        vcand = hp.member_mask[last_e] & ~vblock
        while vcand and not r:
            low = vcand & -vcand
            v = low.bit_length() - 1
            vcand ^= low
            ecand = hp.incident_mask[v] & ~eblock
            while ecand:
                lo = ecand & -ecand
                e = lo.bit_length() - 1
                ecand ^= lo
                if not wins(pv | low, pe | lo, e):
                    r = True
                    break
        memo[key] = r
        return r

    return 1 if wins(1 << ha.v0, 1 << ha.e0, ha.e0) else 2


# -- text formats -------------------------------------------------------------------

def parse_hypergraph(text: str) -> tuple[Hypergraph, frozenset[int] | None]:
    n = m = None
    edges: dict[int, list[int]] = {}
    u_set = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if n is None:
            if toks[:2] != ["p", "hyp"] or len(toks) != 4:
                raise ParseError("missing 'p hyp <n> <m>' header", lineno)
            try:
                n, m = int(toks[2]), int(toks[3])
            except ValueError:
                raise ParseError("non-integer header field", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("negative count in header", lineno)
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'h <j>: ...' or 'U: ...', got {line!r}", lineno)
        try:
            verts = [int(t) - 1 for t in rest.split()]
        except ValueError:
            raise ParseError("non-integer vertex", lineno) from None
        for v in verts:
            if not 0 <= v < n:
                raise ParseError(f"vertex {v + 1} out of range", lineno)
        if len(set(verts)) != len(verts):
            raise ParseError("vertex listed twice", lineno)
        htoks = head.split()
        if htoks == ["U"]:
            if u_set is not None:
                raise ParseError("U given twice", lineno)
            u_set = frozenset(verts)
        elif len(htoks) == 2 and htoks[0] == "h":
            try:
                j = int(htoks[1])
            except ValueError:
                raise ParseError("non-integer hyperedge index", lineno) from None
            if not 1 <= j <= m:
                raise ParseError(f"hyperedge index {j} out of range", lineno)
            if j - 1 in edges:
                raise ParseError(f"hyperedge {j} given twice", lineno)
            edges[j - 1] = verts
        else:
            raise ParseError(f"unexpected record {head!r}", lineno)
    if n is None:
        raise ParseError("missing 'p hyp <n> <m>' header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} hyperedges, found {len(edges)}")
    return Hypergraph.from_edges(n, [edges[j] for j in range(m)]), u_set


def render_hypergraph(h: Hypergraph, u_set: Iterable[int] | None = None) -> str:
    lines = [f"p hyp {h.n_vertices} {h.n_edges}"]
    lines += [f"h {j + 1}: " + " ".join(str(v + 1) for v in mem) for j, mem in enumerate(h.members)]
    if u_set is not None:
        lines.append("U: " + " ".join(str(u + 1) for u in sorted(u_set)))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def render_hyper_assignment(ha: AugmentedHypergraph, a: HyperAssignment) -> str:
    hp = ha.hyper
    lab = ha.labels
    out = ["R: " + " ".join(lab[v] for v in sorted(a.reachable))]
    out += [f"sigma {lab[v]} {'_' if e is None else lab[hp.edge_element(e)]}"
            for v, e in enumerate(a.sigma)]
    return "\n".join(out) + "\n"
