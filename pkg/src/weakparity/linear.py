"""Linear-time weak-parity solver.

Priorities are processed from 0 upwards.  Round ``i`` attracts, for the
player who likes the parity of ``i``, every remaining state of priority
``i`` and deletes the attractor from the game.  Two things keep the whole
run at O(n + m):

* every attractor only pays for edges entering it, and attractors of
  different rounds are disjoint;
* the states of priority ``i`` still in the game are read off a
  priority-sorted copy of the state list (a counting sort), in which
  deleted states are overwritten with -1, so each slot is looked at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Sequence

from .attractor import AttractorEngine
from .errors import DoubleRemoval, EmptyGame, OutOfOrderCall
from .model import GameGraph, Player

REMOVED = -1

# Documented work constants: every edge is relaxed once as an attractor
# predecessor edge and scanned at most once while picking a move.
EDGE_WORK_FACTOR = 2
RENAMING_WORK_FACTOR = 3


@dataclass
class WorkCounters:
    """Operation counts of one solver run.

    ``rescan_steps`` is only used by the naive engine: states and edges it
    walks while rebuilding the subgame after every round.
    """

    edge_relaxations: int = 0
    counter_inits: int = 0
    target_scan_steps: int = 0
    renaming_steps: int = 0
    rescan_steps: int = 0

    @property
    def total(self) -> int:
        return sum(getattr(self, f.name) for f in fields(self))

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass
class Solution:
    """Winning regions and one memoryless strategy per player.

    Each strategy maps every state owned by that player to a successor.
    On the player's own region it is winning; on the opponent's region it
    is the move that keeps plays entering from the player's region on the
    winning track (those plays already secured their minimum).
    """

    w1: frozenset
    w2: frozenset
    strategy1: dict[int, int]
    strategy2: dict[int, int]
    work: WorkCounters = field(default_factory=WorkCounters)

    def region(self, player: Player) -> frozenset:
        return self.w1 if player == Player.P1 else self.w2

    def strategy(self, player: Player) -> dict[int, int]:
        return self.strategy1 if player == Player.P1 else self.strategy2

    def winner(self, s: int) -> Player:
        return Player.P1 if s in self.w1 else Player.P2

    def partition(self) -> tuple[frozenset, frozenset]:
        return self.w1, self.w2


class RenamingTables:
    """Priority-sorted permutation of the states plus the removal-aware copy.

    ``B[k]`` is the k-th state in priority order (stable within a priority),
    ``C`` is its inverse, and ``D`` is ``B`` with removed states set to -1.
    ``g`` is the cursor into ``D``; :meth:`obtain_targets` must be called
    for priorities 0, 1, ... in order.
    """

    def __init__(self, ct, offsets, B, C, steps):
        self.ct = ct
        self.offsets = offsets
        self.B = B
        self.C = C
        self.D = list(B)
        self.g = 0
        self.renaming_steps = steps
        self.scan_steps = 0
        self._next = 0

    @property
    def d(self) -> int:
        return len(self.ct)

    def obtain_targets(self, i: int) -> list[int]:
        """Still-present states of priority `i`, in renamed order."""
        if i != self._next or i >= len(self.ct):
            raise OutOfOrderCall(i, self._next)
        D, g = self.D, self.g
        targets = [s for s in D[g:g + self.ct[i]] if s != REMOVED]
        self.scan_steps += self.ct[i]
        self.g = g + self.ct[i]
        self._next += 1
        return targets

    def mark_removed(self, s: int) -> None:
        k = self.C[s]
        if self.D[k] == REMOVED:
            raise DoubleRemoval(s)
        self.D[k] = REMOVED


def build_renaming(priorities: Sequence[int]) -> RenamingTables:
    P = list(priorities)
    n = len(P)
    if n == 0:
        raise EmptyGame()
    d = max(P) + 1
    ct = [0] * d
    buckets: list[list[int]] = [[] for _ in range(d)]
    for s in range(n):
        k = P[s]
        buckets[k].append(s)
        ct[k] += 1
    # cumulative offsets: bucket i starts after all lower buckets
    offsets = [0] * (d + 1)
    for i in range(d):
        offsets[i + 1] = offsets[i] + ct[i]
    B = [0] * n
    C = [0] * n
    for i in range(d):
        base = offsets[i]
        for j, s in enumerate(buckets[i]):
            B[base + j] = s
            C[s] = base + j
    return RenamingTables(ct, offsets, B, C, steps=2 * n + d)


def solve(g: GameGraph) -> Solution:
    """Winning regions of the weak-parity game `g` in O(n + m)."""
    owner, _, sptr, succ, _, _ = g.lists()
    n = g.n
    tables = build_renaming(g.priority.tolist())
    engine = AttractorEngine(g)
    layer = [-1] * n  # round in which a state left the game
    winner = [0] * n
    choice = [-1] * n
    work = WorkCounters()

    for i in range(tables.d):
        targets = tables.obtain_targets(i)
        if not targets:
            continue
        player = Player.for_priority(i)

        def on_remove(s, i=i):
            tables.mark_removed(s)
            layer[s] = i

        res = engine.attract(targets, player, on_remove)
        work.edge_relaxations += res.touched_edges
        work.counter_inits += res.counter_inits
        strategy = res.strategy
        for s in res.members:
            winner[s] = player
            c = strategy.get(s)
            if c is None:
                # lowest successor still in this round's subgame
                for k in range(sptr[s], sptr[s + 1]):
                    t = succ[k]
                    work.edge_relaxations += 1
                    if layer[t] == -1 or layer[t] == i:
                        c = t
                        break
            choice[s] = c

    work.target_scan_steps = tables.scan_steps
    work.renaming_steps = tables.renaming_steps
    return _assemble(owner, winner, choice, work)


def _assemble(owner, winner, choice, work) -> Solution:
    w1 = frozenset(s for s, w in enumerate(winner) if w == 0)
    w2 = frozenset(s for s, w in enumerate(winner) if w != 0)
    strategy1 = {s: choice[s] for s in range(len(owner)) if owner[s] == 0}
    strategy2 = {s: choice[s] for s in range(len(owner)) if owner[s] != 0}
    return Solution(w1, w2, strategy1, strategy2, work)
