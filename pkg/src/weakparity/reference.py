"""Independent oracles for the linear solver.

* :func:`solve_naive` runs the same layer-by-layer algorithm the obvious
  way: it rebuilds the remaining subgame after every round and rescans it
  for targets, so it costs O(d * m).  It is compiled with numba so the
  quadratic baseline is usable at benchmark sizes.
* :func:`solve_bruteforce` enumerates memoryless strategy pairs.
* :func:`verify_strategy` fixes one player's strategy and checks that the
  opponent, now alone in the game, cannot escape with the wrong minimum.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np
from numba import njit

from .errors import MalformedStrategy, TooLarge
from .linear import Solution, WorkCounters, _assemble
from .model import GameGraph, Player

DEFAULT_PAIR_LIMIT = 10**7


# ---------------------------------------------------------------- naive


@njit(cache=True)
def _transpose(n, ptr, adj):
    deg = np.zeros(n + 1, dtype=np.int64)
    for e in range(adj.shape[0]):
        deg[adj[e] + 1] += 1
    for v in range(n):
        deg[v + 1] += deg[v]
    rptr = deg.copy()
    fill = deg[:n].copy()
    radj = np.empty(adj.shape[0], dtype=np.int64)
    for u in range(n):
        for e in range(ptr[u], ptr[u + 1]):
            v = adj[e]
            radj[fill[v]] = u
            fill[v] += 1
    return rptr, radj


@njit(cache=True)
def _naive_kernel(owner, prio, sptr, succ, d):
    n = owner.shape[0]
    # counters: relaxations, counter inits, target scans, rebuild scans
    work = np.zeros(4, dtype=np.int64)
    winner = np.full(n, -1, dtype=np.int64)
    choice = np.full(n, -1, dtype=np.int64)

    gid = np.arange(n)
    lptr = sptr.copy()
    lsucc = succ.copy()
    ln = n
    rptr, rpred = _transpose(ln, lptr, lsucc)
    work[3] += ln + lsucc.shape[0]
    targets = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)

    for i in range(d):
        if ln == 0:
            break
        nt = 0
        for k in range(ln):
            work[2] += 1
            if prio[gid[k]] == i:
                targets[nt] = k
                nt += 1
        if nt == 0:
            continue

        me = i % 2
        count = np.zeros(ln, dtype=np.int64)
        work[1] += ln
        inside = np.zeros(ln, dtype=np.bool_)
        move = np.full(ln, -1, dtype=np.int64)
        for q in range(nt):
            queue[q] = targets[q]
            inside[targets[q]] = True
        head = 0
        tail = nt
        while head < tail:
            t = queue[head]
            head += 1
            for e in range(rptr[t], rptr[t + 1]):
                u = rpred[e]
                work[0] += 1
                if inside[u]:
                    continue
                count[u] += 1
                if owner[gid[u]] == me:
                    move[u] = t
                elif count[u] != lptr[u + 1] - lptr[u]:
                    continue
                inside[u] = True
                queue[tail] = u
                tail += 1

        for q in range(tail):
            u = queue[q]
            s = gid[u]
            winner[s] = me
            if move[u] >= 0:
                choice[s] = gid[move[u]]
            else:
                choice[s] = gid[lsucc[lptr[u]]]
                work[0] += 1

        # rebuild the remaining subgame from scratch
        newid = np.empty(ln, dtype=np.int64)
        nn = 0
        for k in range(ln):
            work[3] += 1
            if inside[k]:
                newid[k] = -1
            else:
                newid[k] = nn
                nn += 1
        ngid = np.empty(nn, dtype=np.int64)
        nptr = np.zeros(nn + 1, dtype=np.int64)
        nsucc = np.empty(lsucc.shape[0], dtype=np.int64)
        mm = 0
        for k in range(ln):
            if newid[k] < 0:
                continue
            for e in range(lptr[k], lptr[k + 1]):
                work[3] += 1
                v = newid[lsucc[e]]
                if v >= 0:
                    nsucc[mm] = v
                    mm += 1
            ngid[newid[k]] = gid[k]
            nptr[newid[k] + 1] = mm
        gid = ngid
        lptr = nptr
        lsucc = nsucc[:mm].copy()
        ln = nn
        rptr, rpred = _transpose(ln, lptr, lsucc)
        work[3] += ln + mm
    return winner, choice, work


def solve_naive(g: GameGraph) -> Solution:
    """Layer algorithm with a full rebuild and rescan per priority."""
    winner, choice, work = _naive_kernel(g.owner, g.priority, g.succ_ptr, g.succ, g.d)
    counters = WorkCounters(edge_relaxations=int(work[0]), counter_inits=int(work[1]),
                            target_scan_steps=int(work[2]), rescan_steps=int(work[3]))
    return _assemble(g.owner.tolist(), winner.tolist(), choice.tolist(), counters)


# ---------------------------------------------------------------- plays


@dataclass(frozen=True)
class PlayOutcome:
    min_priority: int
    winner: Player
    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    @property
    def lasso(self) -> tuple[int, ...]:
        return self.prefix + self.cycle


def eval_play(g: GameGraph, sigma: Mapping[int, int], pi: Mapping[int, int],
              start: int) -> PlayOutcome:
    """Simulate the unique play from `start` until it closes a cycle."""
    owner = g.owner
    seen: dict[int, int] = {}
    path = []
    s = start
    while s not in seen:
        seen[s] = len(path)
        path.append(s)
        s = sigma[s] if owner[s] == Player.P1 else pi[s]
    k = seen[s]
    low = int(g.priority[path].min())
    return PlayOutcome(low, Player.for_priority(low), tuple(path[:k]), tuple(path[k:]))


def _functional_minimum(nxt, prio):
    """Minimal priority met from each state when following `nxt` forever."""
    n = len(nxt)
    value = [-1] * n
    on_path = [-1] * n
    for start in range(n):
        if value[start] >= 0:
            continue
        path = []
        s = start
        while value[s] < 0 and on_path[s] < 0:
            on_path[s] = len(path)
            path.append(s)
            s = nxt[s]
        if value[s] < 0:
            cycle = path[on_path[s]:]
            low = min(prio[c] for c in cycle)
            for c in cycle:
                value[c] = low
            path = path[:on_path[s]]
        for c in reversed(path):
            value[c] = min(prio[c], value[nxt[c]])
    return value


def strategy_pairs(g: GameGraph) -> int:
    return math.prod(np.diff(g.succ_ptr).tolist())


def brute_force_region(g: GameGraph, player: Player, limit: int = DEFAULT_PAIR_LIMIT):
    """States where `player` has a memoryless strategy beating every memoryless reply.

    Returns ``(region, uniform)`` where ``uniform`` is one strategy of
    `player` that wins from the whole region at once, or None if no single
    strategy does.
    """
    pairs = strategy_pairs(g)
    if pairs > limit:
        raise TooLarge(pairs, limit)
    player = Player(player)
    prio = g.priority.tolist()
    mine = g.states_of(player)
    theirs = g.states_of(player.opponent)
    nxt = [0] * g.n
    region: set[int] = set()
    wins_by_choice = []
    for ours in itertools.product(*(g.successors(s) for s in mine)):
        for s, t in zip(mine, ours):
            nxt[s] = t
        wins = [True] * g.n
        alive = g.n
        for reply in itertools.product(*(g.successors(s) for s in theirs)):
            for s, t in zip(theirs, reply):
                nxt[s] = t
            for s, v in enumerate(_functional_minimum(nxt, prio)):
                if wins[s] and v % 2 != player:
                    wins[s] = False
                    alive -= 1
            if not alive:
                break
        won = {s for s in range(g.n) if wins[s]}
        region |= won
        wins_by_choice.append((won, dict(zip(mine, ours))))
    uniform = next((strat for won, strat in wins_by_choice if won == region), None)
    return frozenset(region), uniform


def solve_bruteforce(g: GameGraph, limit: int = DEFAULT_PAIR_LIMIT) -> tuple[frozenset, frozenset]:
    """Partition ``(w1, w2)`` by enumerating memoryless strategies for P1 first."""
    w1, _ = brute_force_region(g, Player.P1, limit)
    return w1, frozenset(range(g.n)) - w1


def bruteforce_solution(g: GameGraph, limit: int = DEFAULT_PAIR_LIMIT) -> Solution:
    """Brute-force partition together with uniform strategies for both players."""
    w1, s1 = brute_force_region(g, Player.P1, limit)
    w2, s2 = brute_force_region(g, Player.P2, limit)
    if w1 & w2 or len(w1) + len(w2) != g.n or s1 is None or s2 is None:
        raise AssertionError("memoryless determinacy failed on this game")
    return Solution(w1, w2, s1, s2)


# ---------------------------------------------------------------- verify


@dataclass
class VerificationReport:
    partition_ok: bool
    ok_p1: bool
    ok_p2: bool
    counterexample: Optional[tuple[Player, int]] = None

    @property
    def ok(self) -> bool:
        return self.partition_ok and self.ok_p1 and self.ok_p2


def _check_domain(g: GameGraph, region, strategy, player):
    for s, t in strategy.items():
        if not 0 <= s < g.n or g.owner[s] != player:
            raise MalformedStrategy(f"{player} strategy defined on state {s} it does not own")
        if t not in g.successors(s):
            raise MalformedStrategy(f"{player} strategy uses missing edge ({s}, {t})")
    for s in region:
        if g.owner[s] == player and s not in strategy:
            raise MalformedStrategy(f"{player} strategy has no move at winning state {s}")


def spoiling_states(g: GameGraph, player: Player, strategy: Mapping[int, int]) -> set[int]:
    """States from which the opponent can force a minimum of its own parity.

    `player` moves according to `strategy` wherever it is defined; every
    other choice belongs to the opponent.  For each priority ``k`` of the
    opponent's parity the opponent wins with minimum ``k`` exactly from the
    states that reach a priority-``k`` state, and from there an endless
    path, without ever dipping below ``k``.
    """
    player = Player(player)
    n = g.n
    prio = g.priority.tolist()
    owner = g.owner.tolist()
    succ = [[strategy[s]] if owner[s] == player and s in strategy else g.successors(s)
            for s in range(n)]
    pred: list[list[int]] = [[] for _ in range(n)]
    for s in range(n):
        for t in succ[s]:
            pred[t].append(s)

    spoiled: set[int] = set()
    for k in sorted({p for p in prio if p % 2 != player}):
        high = [p >= k for p in prio]
        # states of `high` with an endless path inside `high`
        degree = [sum(1 for t in succ[s] if high[t]) if high[s] else 0 for s in range(n)]
        stay = list(high)
        dead = deque(s for s in range(n) if high[s] and degree[s] == 0)
        while dead:
            s = dead.popleft()
            if not stay[s]:
                continue
            stay[s] = False
            for u in pred[s]:
                if stay[u]:
                    degree[u] -= 1
                    if degree[u] == 0:
                        dead.append(u)
        reach = [False] * n
        todo = deque(s for s in range(n) if prio[s] == k and stay[s])
        for s in todo:
            reach[s] = True
        while todo:
            s = todo.popleft()
            for u in pred[s]:
                if high[u] and not reach[u]:
                    reach[u] = True
                    todo.append(u)
        spoiled.update(s for s in range(n) if reach[s])
    return spoiled


def verify_strategy(g: GameGraph, sol: Solution) -> VerificationReport:
    """Check the partition and that each strategy wins from its region.

    Raises :class:`MalformedStrategy` if a strategy uses a missing edge, is
    defined on a state of the wrong owner, or lacks a move on its region.
    """
    everyone = set(range(g.n))
    partition_ok = not (sol.w1 & sol.w2) and (set(sol.w1) | set(sol.w2)) == everyone
    report = VerificationReport(partition_ok, True, True)
    for player in Player:
        region = sol.region(player)
        strategy = sol.strategy(player)
        _check_domain(g, region, strategy, player)
        bad = sorted(set(region) & spoiling_states(g, player, strategy))
        if bad:
            if player == Player.P1:
                report.ok_p1 = False
            else:
                report.ok_p2 = False
            if report.counterexample is None:
                report.counterexample = (player, bad[0])
    if not partition_ok and report.counterexample is None:
        stray = sorted((sol.w1 & sol.w2) | (everyone - set(sol.w1) - set(sol.w2)))
        report.counterexample = (None, stray[0] if stray else -1)
    return report
