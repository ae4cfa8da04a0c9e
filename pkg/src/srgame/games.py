"""Exact Maker-Breaker game engine for the resolving and strong-resolving
games, the polynomial outcome classifier, and pairing certificates.

Game model
----------
Two players alternately claim unclaimed board vertices.  Maker wins as soon
as his claims satisfy ``maker_done`` (a monotone condition); if the board is
exhausted without that, Breaker wins - there is no draw.  ``breaker_done``
is an early-exit mirror: it must be true exactly when no extension of
Maker's claims can ever succeed.

Both concrete games are *transversal* systems: Maker must claim at least one
vertex of every required mask (every MMD pair for the strong game, every
pair-separating witness set for the resolving game).  For those the solver
adds two sound shortcuts: a requirement with a single unclaimed vertex
forces the next move, and two such disjoint requirements lose for Maker on
the spot.  Move candidates are always *all* unclaimed vertices, so boards
with dead vertices are solved as played, not silently reduced.

Outcomes combine the two move orders: M (Maker wins either way) and B
(Breaker wins either way) bracket N (whoever moves first wins), ordered
B < N < M.  The fourth combination - a second-player sweep - cannot occur
and is asserted against.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Callable, Iterable

from .graphs import Graph, LimitExceededError, require_connected
from .resolving import SrGraph, resolving_witness_masks, strong_resolving_graph

DEFAULT_BOARD_LIMIT = 20
DEFAULT_RG_BOARD_LIMIT = 14
DEFAULT_TRANSVERSAL_LIMIT = 1 << 20


@total_ordering
class Outcome(Enum):
    """Game outcome: Breaker both orders < first mover < Maker both orders."""

    B = -1
    N = 0
    M = 1

    def __lt__(self, other: object):
        if not isinstance(other, Outcome):
            return NotImplemented
        return self.value < other.value

    def __str__(self) -> str:
        return self.name


class Player(Enum):
    MAKER = "maker"
    BREAKER = "breaker"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class WinSystem:
    """Win conditions of one Maker-Breaker game on ``board_size`` vertices.

    ``maker_done``/``breaker_done`` take claim bitmasks.  ``required``, when
    set, exposes the transversal structure the conditions were derived from
    and enables the solver's threat shortcuts.
    """

    board_size: int
    maker_done: Callable[[int], bool]
    breaker_done: Callable[[int], bool]
    required: tuple[int, ...] | None = None


def _minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    # A mask containing another is implied by it, for both players.
    unique = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in unique:
        if m == 0:
            raise ValueError("empty requirement can never be satisfied")
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(kept)


def transversal_system(board_size: int, masks: Iterable[int]) -> WinSystem:
    """Maker must claim at least one vertex of every mask."""
    required = _minimal_masks(masks)

    def maker_done(maker: int) -> bool:
        return all(maker & w for w in required)

    def breaker_done(breaker: int) -> bool:
        return any(not w & ~breaker for w in required)

    return WinSystem(board_size, maker_done, breaker_done, required)


def vertex_cover_system(g: Graph) -> WinSystem:
    """Maker tries to claim a vertex cover of ``g``."""
    return transversal_system(g.n, ((1 << u) | (1 << v) for u, v in g.edges))


def resolving_game_system(g: Graph) -> WinSystem:
    """Maker tries to claim a resolving set of ``g``."""
    require_connected(g, "resolving_game_system")
    return transversal_system(g.n, resolving_witness_masks(g))


def srg_cover_system(sr: SrGraph, board: str = "core") -> WinSystem:
    """Vertex-cover game over the MMD pairs, on the core board or on the full
    parent board (where non-MMD vertices are legal but useless moves)."""
    if board == "core":
        return vertex_cover_system(sr.core)
    if board == "parent":
        masks = ((1 << sr.to_parent[u]) | (1 << sr.to_parent[v])
                 for u, v in sr.core.edges)
        return transversal_system(sr.parent_n, masks)
    raise ValueError("board must be 'core' or 'parent'")


_THREAT_WEIGHT = {1: 64, 2: 8, 3: 1}


class MakerBreakerSolver:
    """Memoized minimax over (maker claims, breaker claims) bitmask states."""

    def __init__(self, system: WinSystem, limit: int = DEFAULT_BOARD_LIMIT):
        if system.board_size > limit:
            raise LimitExceededError(
                f"board size {system.board_size} exceeds solver limit {limit}")
        self.system = system
        self._full = (1 << system.board_size) - 1
        self._memo: dict[tuple[int, int, bool], bool] = {}

    def winner(self, first: Player) -> Player:
        wins = self.maker_wins_from(0, 0, first is Player.MAKER)
        return Player.MAKER if wins else Player.BREAKER

    def maker_wins_from(self, maker: int, breaker: int, maker_to_move: bool) -> bool:
        if maker & breaker:
            raise ValueError("claim sets overlap")
        if self.system.required is not None:
            return self._win_transversal(maker, breaker, maker_to_move)
        return self._win_generic(maker, breaker, maker_to_move)

    def status(self, maker: int, breaker: int) -> Player | None:
        """Winner if the position is terminal, else None."""
        if self.system.maker_done(maker):
            return Player.MAKER
        if self.system.breaker_done(breaker):
            return Player.BREAKER
        if not self._full & ~(maker | breaker):
            return Player.BREAKER
        return None

    def best_move(self, maker: int, breaker: int, maker_to_move: bool) -> int | None:
        """Lowest-id move preserving the position's value; None at terminal."""
        if self.status(maker, breaker) is not None:
            return None
        target = self.maker_wins_from(maker, breaker, maker_to_move)
        free = self._full & ~(maker | breaker)
        while free:
            bit = free & -free
            free ^= bit
            if maker_to_move:
                value = self.maker_wins_from(maker | bit, breaker, False)
            else:
                value = self.maker_wins_from(maker, breaker | bit, True)
            if value == target:
                return bit.bit_length() - 1
        raise RuntimeError("no move preserves the game value")

    # -- transversal path ---------------------------------------------------

    def _win_transversal(self, maker: int, breaker: int, mtm: bool) -> bool:
        key = (maker, breaker, mtm)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        result: bool | None = None
        alive: list[int] = []
        for w in self.system.required:
            if w & maker:
                continue
            fb = w & ~breaker
            if not fb:
                result = False  # some requirement is entirely Breaker's
                break
            alive.append(fb)
        if result is None:
            if not alive:
                result = True
            else:
                free = self._full & ~(maker | breaker)
                if not free:
                    result = False
                elif mtm:
                    forced = 0
                    for fb in alive:
                        if not fb & (fb - 1):
                            forced |= fb
                    if forced:
                        if forced & (forced - 1):
                            result = False  # two disjoint immediate threats
                        else:
                            result = self._win_transversal(maker | forced, breaker, False)
                    else:
                        result = False
                        for bit in self._ordered_moves(alive, free):
                            if self._win_transversal(maker | bit, breaker, False):
                                result = True
                                break
                else:
                    if any(not fb & (fb - 1) for fb in alive):
                        result = False  # Breaker completes a requirement now
                    else:
                        result = True
                        for bit in self._ordered_moves(alive, free):
                            if not self._win_transversal(maker, breaker | bit, True):
                                result = False
                                break
        self._memo[key] = result
        return result

    @staticmethod
    def _ordered_moves(alive: list[int], free: int) -> list[int]:
        # Vertices in many nearly-complete requirements first; move order
        # affects node counts only, never the solved value.
        score: dict[int, int] = {}
        for fb in alive:
            weight = _THREAT_WEIGHT.get(fb.bit_count(), 1)
            rest = fb
            while rest:
                bit = rest & -rest
                rest ^= bit
                score[bit] = score.get(bit, 0) + weight
        bits = []
        rest = free
        while rest:
            bit = rest & -rest
            rest ^= bit
            bits.append(bit)
        bits.sort(key=lambda b: -score.get(b, 0))
        return bits

    # -- generic path -------------------------------------------------------

    def _win_generic(self, maker: int, breaker: int, mtm: bool) -> bool:
        key = (maker, breaker, mtm)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if self.system.maker_done(maker):
            result = True
        elif self.system.breaker_done(breaker):
            result = False
        else:
            free = self._full & ~(maker | breaker)
            if not free:
                result = False
            else:
                result = not mtm
                rest = free
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    if mtm:
                        if self._win_generic(maker | bit, breaker, False):
                            result = True
                            break
                    else:
                        if not self._win_generic(maker, breaker | bit, True):
                            result = False
                            break
        self._memo[key] = result
        return result


def solve_mb(system: WinSystem, first: Player,
             limit: int = DEFAULT_BOARD_LIMIT) -> Player:
    """Winner of the game under optimal play when ``first`` moves first."""
    return MakerBreakerSolver(system, limit).winner(first)


def system_outcome(system: WinSystem, limit: int = DEFAULT_BOARD_LIMIT) -> Outcome:
    """Combine the two move orders of one win system into an Outcome."""
    solver = MakerBreakerSolver(system, limit)
    maker_first = solver.winner(Player.MAKER)
    breaker_first = solver.winner(Player.BREAKER)
    if maker_first is Player.MAKER:
        return Outcome.M if breaker_first is Player.MAKER else Outcome.N
    if breaker_first is Player.BREAKER:
        return Outcome.B
    raise RuntimeError("second player won both orders; impossible for a "
                       "monotone Maker-Breaker game")


def cover_game_outcome(core: Graph, limit: int = DEFAULT_BOARD_LIMIT) -> Outcome:
    """Outcome of the vertex-cover game played on ``core`` itself."""
    return system_outcome(vertex_cover_system(core), limit)


def outcome_srg_exact(g: Graph, limit: int = DEFAULT_BOARD_LIMIT) -> Outcome:
    """Exact outcome of the strong-resolving game, solved as the vertex-cover
    game on the strong resolving graph's core board."""
    require_connected(g, "outcome_srg_exact")
    sr = strong_resolving_graph(g)
    return cover_game_outcome(sr.core, limit)


def outcome_rg_exact(g: Graph, limit: int = DEFAULT_RG_BOARD_LIMIT) -> Outcome:
    """Exact outcome of the resolving game, played on all of V(G)."""
    require_connected(g, "outcome_rg_exact")
    return system_outcome(resolving_game_system(g), limit)


def outcome_srg_classifier(sr: SrGraph) -> Outcome:
    """Polynomial-time outcome of the strong-resolving game from the core.

    Maker sweeps iff the core is a matching.  If some single vertex reduces
    the core to maximum degree <= 1, the first player wins: Maker opens with
    that vertex and then answers inside the leftover matching, while Breaker
    opens on a degree->=2 vertex and then takes one of its free neighbors.
    Otherwise every Maker opening leaves Breaker a degree->=2 vertex and
    Breaker sweeps.  Exactness versus the exact solver is enforced by the
    verification sweep, not assumed.
    """
    core = sr.core
    if core.n == 0:
        raise ValueError("empty strong resolving graph")
    degrees = core.degree_sequence
    if max(degrees) <= 1:
        return Outcome.M
    masks = core.neighbor_masks
    for u in range(core.n):
        ubit = 1 << u
        if all(v == u or (masks[v] & ~ubit).bit_count() <= 1 for v in range(core.n)):
            return Outcome.N
    return Outcome.B


# ---------------------------------------------------------------------------
# Pairing certificates


def _validated_pairs(sr: SrGraph, pairs, limit: int) -> list[tuple[int, int]]:
    clean: list[tuple[int, int]] = []
    used: set[int] = set()
    for pair in pairs:
        u, v = pair
        if u == v:
            raise ValueError("pair members must be distinct")
        for x in (u, v):
            if not 0 <= x < sr.core.n:
                raise ValueError(f"pair vertex {x} outside the core")
            if x in used:
                raise ValueError(f"pairs overlap at vertex {x}")
            used.add(x)
        clean.append((u, v))
    if 2 ** len(clean) > limit:
        raise LimitExceededError("too many pairs for transversal enumeration")
    return clean


def _every_transversal_covers(core: Graph, pairs: list[tuple[int, int]],
                              extra: int | None = None) -> bool:
    edges = core.sorted_edges()
    choices = [0] * len(pairs)
    while True:
        team = {pairs[i][choices[i]] for i in range(len(pairs))}
        if extra is not None:
            team.add(extra)
        if any(u not in team and v not in team for u, v in edges):
            return False
        i = 0
        while i < len(pairs) and choices[i] == 1:
            choices[i] = 0
            i += 1
        if i == len(pairs):
            return True
        choices[i] = 1


def is_pairing_vertex_cover(sr: SrGraph, pairs,
                            limit: int = DEFAULT_TRANSVERSAL_LIMIT) -> bool:
    """True iff every transversal of the disjoint pairs (one endpoint each)
    is a vertex cover of the core.  Such a pairing certifies outcome M: Maker
    answers every Breaker move inside its pair."""
    clean = _validated_pairs(sr, pairs, limit)
    if not clean:
        return not sr.core.edges
    return _every_transversal_covers(sr.core, clean)


def is_quasi_pairing_vertex_cover(sr: SrGraph, pairs, v: int,
                                  limit: int = DEFAULT_TRANSVERSAL_LIMIT) -> bool:
    """True iff every transversal plus the fixed vertex ``v`` covers the core.
    Certifies outcome M or N: moving first, Maker opens on ``v``."""
    clean = _validated_pairs(sr, pairs, limit)
    if not 0 <= v < sr.core.n:
        raise ValueError(f"extra vertex {v} outside the core")
    if any(v in pair for pair in clean):
        raise ValueError("extra vertex must lie outside every pair")
    return _every_transversal_covers(sr.core, clean, extra=v)


def compare_outcomes(g: Graph, srg_limit: int = DEFAULT_BOARD_LIMIT,
                     rg_limit: int = DEFAULT_RG_BOARD_LIMIT) -> tuple[Outcome, Outcome]:
    """Both game outcomes; a strong resolving set also resolves, so the
    strong-game outcome can never exceed the resolving-game outcome."""
    o_sr = outcome_srg_exact(g, srg_limit)
    o_r = outcome_rg_exact(g, rg_limit)
    if o_sr > o_r:
        raise RuntimeError(f"outcome order violated: {o_sr} > {o_r}")
    return o_sr, o_r
