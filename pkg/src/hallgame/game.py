"""The two-player path game on an augmented graph.

Players alternately extend a path that starts at ``v0``; whoever cannot
extend it loses. Player 1 moves first (from ``v0`` to ``v1``). The player to
move is derived from the play length alone.
"""

from __future__ import annotations

import random
import sys
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from . import bounds
from .assign import Assignment, AugmentedGraph
from .errors import InputError, InternalInvariantError


@dataclass(frozen=True)
class PlayState:
    arena: AugmentedGraph
    play: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.play) - 1

    @property
    def to_move(self) -> int:
        # player s moves when k - 1 = s (mod 2)
        return 1 if (self.k - 1) % 2 == 1 else 2


def initial_state(arena: AugmentedGraph) -> PlayState:
    return PlayState(arena, (arena.v0,))


def legal_moves(st: PlayState) -> frozenset[int]:
    used = set(st.play)
    return frozenset(u for u in st.arena.graph.neighbors(st.play[-1]) if u not in used)


@dataclass(frozen=True)
class Strategy:
    """``move`` returns a vertex, or ``None`` to resign. ``player`` pins the seat, if any."""

    name: str
    move: Callable[[PlayState], int | None]
    player: int | None = None


def designated_player(ga: AugmentedGraph, a: Assignment) -> int:
    """Player for whom the assignment encodes a winning strategy."""
    return 1 if a.sigma[ga.v0] is not None else 2


def play_invariant_violations(ga: AugmentedGraph, a: Assignment, play) -> list[int]:
    """Indices of ``play`` breaking the alternation the assignment strategy maintains.

    For the designated player's positions: in R with ``sigma`` defined and
    followed by ``sigma(v_i)``. For the opponent's: in R with ``sigma``
    undefined. Player 1's positions are the even indices.
    """
    winner_parity = 0 if designated_player(ga, a) == 1 else 1
    bad = []
    k = len(play) - 1
    for i, v in enumerate(play):
        ok = v in a.reachable
        if i % 2 == winner_parity:
            s = a.sigma[v]
            ok = ok and s is not None and (i == k or play[i + 1] == s)
        else:
            ok = ok and a.sigma[v] is None
        if not ok:
            bad.append(i)
    return bad


def strategy_from_assignment(ga: AugmentedGraph, a: Assignment) -> Strategy:
    """Memoryless strategy ``v_k -> sigma(v_k)`` for the designated player."""
    player = designated_player(ga, a)

    def move(st: PlayState) -> int:
        bad = play_invariant_violations(ga, a, st.play)
        if bad:
            raise InternalInvariantError(
                f"play left the assignment invariant at index {bad[0]}: "
                + " ".join(ga.labels[v] for v in st.play))
        return a.sigma[st.play[-1]]

    return Strategy(f"assignment(player {player})", move, player)


def random_strategy(seed: int | None = None) -> Strategy:
    rng = random.Random(seed)

    def move(st):
        z = sorted(legal_moves(st))
        return rng.choice(z) if z else None

    return Strategy(f"random(seed={seed})", move)


def first_legal_strategy() -> Strategy:
    def move(st):
        z = legal_moves(st)
        return min(z) if z else None

    return Strategy("first-legal", move)


def resign_strategy() -> Strategy:
    return Strategy("resign", lambda st: None)


def stdin_strategy(stream=None, prompt=None) -> Strategy:
    """Reads one vertex label per ply; end of input or ``resign`` resigns."""
    def move(st):
        inp = stream or sys.stdin
        out = prompt or sys.stderr
        labels = st.arena.labels
        while True:
            options = " ".join(labels[v] for v in sorted(legal_moves(st)))
            out.write(f"play: {' '.join(labels[v] for v in st.play)}\n"
                      f"player {st.to_move} moves, options: {options}\n> ")
            out.flush()
            line = inp.readline()
            if not line or line.strip() == "resign":
                return None
            tok = line.strip()
            if tok in labels:
                return labels.index(tok)
            out.write(f"unknown vertex {tok!r}\n")

    return Strategy("stdin", move)


def _solver(arena: AugmentedGraph):
    nbr = [arena.graph.neighbors(v) for v in range(arena.vertex_count)]
    memo: dict[tuple[int, int], bool] = {}

    def wins(end: int, used: int) -> bool:
        # True iff the player to move from (end, used) wins
        key = (end, used)
        r = memo.get(key)
        if r is None:
            r = False
            for u in nbr[end]:
                if not used >> u & 1 and not wins(u, used | 1 << u):
                    r = True
                    break
            memo[key] = r
        return r

    return wins


def minimax_value(arena: AugmentedGraph, max_vertices: int | None = None) -> int:
    """Winner (1 or 2) under optimal play, by memoized search over (endpoint, used set)."""
    bounds.check("arena vertex count", arena.vertex_count, "HALLGAME_MINIMAX_MAX_VERTICES",
                 max_vertices)
    wins = _solver(arena)
    return 1 if wins(arena.v0, 1 << arena.v0) else 2


def minimax_strategy(arena: AugmentedGraph, max_vertices: int | None = None) -> Strategy:
    """Plays a winning move when one exists, otherwise the lowest legal move."""
    bounds.check("arena vertex count", arena.vertex_count, "HALLGAME_MINIMAX_MAX_VERTICES",
                 max_vertices)
    wins = _solver(arena)

    def move(st):
        used = 0
        for v in st.play:
            used |= 1 << v
        z = sorted(legal_moves(st))
        for u in z:
            if not wins(u, used | 1 << u):
                return u
        return z[0] if z else None

    return Strategy("minimax", move)


@dataclass(frozen=True)
class MatchResult:
    winner: int
    transcript: tuple[int, ...]
    forfeit: bool = False
    reason: str = "no legal move"


def play_match(p1: Strategy, p2: Strategy, arena: AugmentedGraph) -> MatchResult:
    """Play to the end; an illegal move forfeits, ``None`` resigns."""
    for seat, s in ((1, p1), (2, p2)):
        if s.player is not None and s.player != seat:
            raise InputError(f"strategy {s.name} plays for player {s.player}, seated as {seat}")
    st = initial_state(arena)
    while True:
        mover = st.to_move
        other = 3 - mover
        if not legal_moves(st):
            return MatchResult(other, st.play)
        v = (p1 if mover == 1 else p2).move(st)
        if v is None:
            return MatchResult(other, st.play, reason=f"player {mover} resigned")
        if v not in legal_moves(st):
            return MatchResult(other, st.play, forfeit=True,
                               reason=f"player {mover} made illegal move {v}")
        st = PlayState(arena, st.play + (v,))


def enumerate_adversary_playouts(
        arena: AugmentedGraph, strategy: Strategy, player: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(winner, transcript)`` for every branch of the opponent's choices.

    ``strategy`` plays for ``player``; the opponent tries every legal move at
    every turn, which covers all deterministic adversaries.
    """
    stack = [initial_state(arena)]
    while stack:
        st = stack.pop()
        z = legal_moves(st)
        if not z:
            yield 3 - st.to_move, st.play
            continue
        if st.to_move == player:
            v = strategy.move(st)
            if v is None or v not in z:
                yield 3 - player, st.play
                continue
            stack.append(PlayState(arena, st.play + (v,)))
        else:
            for v in sorted(z, reverse=True):
                stack.append(PlayState(arena, st.play + (v,)))


def render_transcript(arena: AugmentedGraph, result: MatchResult) -> str:
    labels = arena.labels
    return " ".join(labels[v] for v in result.transcript) + f"\nwinner {result.winner}\n"
