"""Independent ground truth: augmenting-path matching and brute-force Hall checks.

Nothing here touches the assignment machinery, so it can be used to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import bounds
from .assign import ViolatorCert
from .errors import InternalInvariantError
from .graph import BipartiteGraph


@dataclass(frozen=True)
class OracleMatching:
    edges: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    def covers(self, vertices) -> bool:
        matched = {u for e in self.edges for u in e}
        return all(v in matched for v in vertices)


def max_matching(g: BipartiteGraph) -> OracleMatching:
    """Maximum-cardinality matching by repeated augmenting-path search (Kuhn)."""
    graph = g.graph
    mate: dict[int, int] = {}

    def augment_from(u, seen):
        for w in graph.neighbors(u):
            if w in seen:
                continue
            seen.add(w)
            if w not in mate or augment_from(mate[w], seen):
                mate[w] = u
                return True
        return False

    for u in g.side1:
        augment_from(u, set())
    return OracleMatching(frozenset((u, w) for w, u in mate.items()))


def _neighbor_masks(g: BipartiteGraph) -> list[int]:
    masks = []
    for u in g.side1:
        m = 0
        for w in g.graph.neighbors(u):
            m |= 1 << w
        masks.append(m)
    return masks


def hall_violator_bruteforce(g: BipartiteGraph, max_side: int | None = None) -> ViolatorCert | None:
    """Smallest ``S`` in side 1 with ``|N(S)| < |S|``, or ``None`` if Hall's condition holds.

    Subsets are tried by size, then lexicographically. The answer is checked
    against :func:`max_matching` in both directions.
    """
    bounds.check("side 1 size", g.n1, "HALLGAME_HALL_MAX_SIDE", max_side)
    masks = _neighbor_masks(g)
    found = None
    for k in range(1, g.n1 + 1):
        for combo in combinations(range(g.n1), k):
            m = 0
            for i in combo:
                m |= masks[i]
            if m.bit_count() < k:
                subset = frozenset(g.side1[i] for i in combo)
                nbrs = frozenset(w for w in g.side2 if m >> w & 1)
                found = ViolatorCert(subset, nbrs)
                break
        if found is not None:
            break
    covered = max_matching(g).size == g.n1
    if covered == (found is not None):
        raise InternalInvariantError("Hall's condition and the maximum matching disagree")
    return found


def max_deficiency_bruteforce(g: BipartiteGraph, max_side: int | None = None) -> int:
    """``max(|S| - |N(S)|)`` over all ``S`` in side 1, including the empty set."""
    bounds.check("side 1 size", g.n1, "HALLGAME_HALL_MAX_SIDE", max_side)
    masks = _neighbor_masks(g)
    best = 0
    # subset unions via lowest-bit recurrence
    unions = [0] * (1 << g.n1)
    for s in range(1, 1 << g.n1):
        low = s & -s
        unions[s] = unions[s ^ low] | masks[low.bit_length() - 1]
        best = max(best, s.bit_count() - unions[s].bit_count())
    return best
