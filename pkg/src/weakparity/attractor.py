"""Counter-based attractors whose work is proportional to the edges entering them.

A predecessor of a freshly absorbed state joins at once if the attracting
player owns it; an opponent predecessor joins once all its live successors
have been absorbed, which a per-state countdown detects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .errors import DeadTarget
from .model import GameGraph, Player


@dataclass
class AttractorResult:
    player: Player
    members: list[int]  # inclusion order: targets first, then by rank
    ranks: dict[int, int]
    strategy: dict[int, int]  # attracting player's non-target members only
    touched_edges: int = 0
    counter_inits: int = 0
    _member_set: Optional[frozenset] = field(default=None, repr=False, compare=False)

    @property
    def member_set(self) -> frozenset:
        if self._member_set is None:
            self._member_set = frozenset(self.members)
        return self._member_set

    def __contains__(self, s):
        return s in self.ranks

    def __len__(self):
        return len(self.members)


class AttractorEngine:
    """Scratch state for a sequence of attractors, each removed from the game.

    ``alive`` describes the current subgame.  The counter of an opponent
    state holds its number of live successors; it is set up the first time
    a successor is absorbed and then only ever decremented, so it stays
    valid across calls and no state is initialised twice.
    """

    def __init__(self, g: GameGraph, alive: Optional[Sequence[bool]] = None):
        self.g = g
        owner, _, sptr, succ, pptr, pred = g.lists()
        self._owner, self._sptr, self._succ = owner, sptr, succ
        self._pptr, self._pred = pptr, pred
        n = g.n
        if alive is None:
            self.alive = [True] * n
            self._partial = False
        else:
            if len(alive) != n:
                raise ValueError(f"alive mask has length {len(alive)}, game has {n} states")
            self.alive = [bool(a) for a in alive]
            self._partial = not all(self.alive)
            self._alive_at_start = list(self.alive)
        self.remaining = [0] * n
        self._ready = [False] * n

    def _init_counter(self, u):
        lo, hi = self._sptr[u], self._sptr[u + 1]
        if self._partial:
            # members absorbed since start are decremented one by one later
            alive = self._alive_at_start
            self.remaining[u] = sum(1 for t in self._succ[lo:hi] if alive[t])
        else:
            self.remaining[u] = hi - lo
        self._ready[u] = True

    def attract(self, targets: Iterable[int], player: Player,
                on_remove: Optional[Callable[[int], None]] = None) -> AttractorResult:
        """Attractor of `targets` for `player` inside the alive subgame.

        The members leave the subgame; `on_remove` fires once per member in
        inclusion order.
        """
        targets = list(targets)
        alive = self.alive
        for t in targets:
            if not alive[t]:
                raise DeadTarget(t)
        owner, pptr, pred = self._owner, self._pptr, self._pred
        remaining, ready = self.remaining, self._ready
        player = Player(player)
        me = int(player)

        members: list[int] = []
        ranks: dict[int, int] = {}
        strategy: dict[int, int] = {}

        for t in targets:
            if alive[t]:
                alive[t] = False
                ranks[t] = 0
                members.append(t)
                if on_remove is not None:
                    on_remove(t)

        relaxations = 0
        inits = 0
        head = 0
        while head < len(members):
            t = members[head]
            head += 1
            rank = ranks[t] + 1
            for k in range(pptr[t], pptr[t + 1]):
                u = pred[k]
                relaxations += 1
                if not alive[u]:
                    continue
                if owner[u] == me:
                    strategy[u] = t
                else:
                    if not ready[u]:
                        self._init_counter(u)
                        inits += 1
                    # t still counts as live for u until here
                    remaining[u] -= 1
                    if remaining[u]:
                        continue
                alive[u] = False
                ranks[u] = rank
                members.append(u)
                if on_remove is not None:
                    on_remove(u)

        return AttractorResult(player, members, ranks, strategy, relaxations, inits)


def attract(g: GameGraph, alive: Optional[Sequence[bool]], targets: Iterable[int],
            player: Player) -> AttractorResult:
    """One-shot attractor; `alive` (all states if None) is copied, not changed."""
    return AttractorEngine(g, alive).attract(targets, player)


def attract_with_removal(g: GameGraph, alive: Optional[Sequence[bool]], targets: Iterable[int],
                         player: Player, on_remove: Callable[[int], None]) -> AttractorResult:
    return AttractorEngine(g, alive).attract(targets, player, on_remove)
