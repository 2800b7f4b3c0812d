"""Game graphs: owners, priorities and both adjacency directions in CSR form."""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Sequence

import numpy as np

from .errors import BadEndpoint, EmptyGame, NotSubgameClosed, SinkState


class Player(IntEnum):
    """The two players. P1 wins a play whose minimal occurring priority is even.

    The integer value doubles as the owner code of the game file format.
    """

    P1 = 0
    P2 = 1

    @property
    def opponent(self) -> Player:
        return Player(1 - self)

    @classmethod
    def for_priority(cls, priority: int) -> Player:
        """The player who profits from `priority` being the minimum."""
        return cls(priority % 2)

    def __str__(self):
        return self.name


def _frozen(a):
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class GameGraph:
    """Immutable two-player arena.

    Successors of state ``s`` are ``succ[succ_ptr[s]:succ_ptr[s+1]]`` in
    ascending order; predecessors likewise through ``pred_ptr``/``pred``.
    Build instances with :func:`new_game`.
    """

    __slots__ = ("n", "m", "d", "owner", "priority", "succ_ptr", "succ",
                 "pred_ptr", "pred", "names", "_lists")

    def __init__(self, owner, priority, succ_ptr, succ, pred_ptr, pred, names=None):
        self.owner = _frozen(owner)
        self.priority = _frozen(priority)
        self.succ_ptr = _frozen(succ_ptr)
        self.succ = _frozen(succ)
        self.pred_ptr = _frozen(pred_ptr)
        self.pred = _frozen(pred)
        self.n = len(self.owner)
        self.m = len(self.succ)
        self.d = int(self.priority.max()) + 1
        self.names = tuple(names) if names is not None else None
        self._lists = None

    def lists(self):
        """Plain-list copies ``(owner, priority, succ_ptr, succ, pred_ptr, pred)``.

        Pure-Python hot loops index lists much faster than numpy arrays.
        Callers must not mutate the returned lists.
        """
        if self._lists is None:
            self._lists = tuple(a.tolist() for a in (
                self.owner, self.priority, self.succ_ptr, self.succ,
                self.pred_ptr, self.pred))
        return self._lists

    def owner_of(self, s: int) -> Player:
        return Player(int(self.owner[s]))

    def successors(self, s: int) -> list[int]:
        return self.succ[self.succ_ptr[s]:self.succ_ptr[s + 1]].tolist()

    def predecessors(self, s: int) -> list[int]:
        return self.pred[self.pred_ptr[s]:self.pred_ptr[s + 1]].tolist()

    def out_degree(self, s: int) -> int:
        return int(self.succ_ptr[s + 1] - self.succ_ptr[s])

    def edges(self) -> list[tuple[int, int]]:
        src = np.repeat(np.arange(self.n), np.diff(self.succ_ptr))
        return list(zip(src.tolist(), self.succ.tolist()))

    def states_of(self, player: Player) -> list[int]:
        return np.flatnonzero(self.owner == int(player)).tolist()

    def __eq__(self, other):
        if not isinstance(other, GameGraph):
            return NotImplemented
        return (self.n == other.n and self.m == other.m
                and np.array_equal(self.owner, other.owner)
                and np.array_equal(self.priority, other.priority)
                and np.array_equal(self.succ_ptr, other.succ_ptr)
                and np.array_equal(self.succ, other.succ)
                and self.names == other.names)

    __hash__ = None

    def __repr__(self):
        return f"GameGraph(n={self.n}, m={self.m}, d={self.d})"


def new_game(owners: Sequence, priorities: Sequence[int],
             edges: Iterable[tuple[int, int]], names: Sequence[str] | None = None) -> GameGraph:
    """Validate the inputs and build a :class:`GameGraph`.

    Duplicate edges are dropped. Raises :class:`EmptyGame`,
    :class:`BadEndpoint` or :class:`SinkState`.
    """
    n = len(owners)
    if n == 0:
        raise EmptyGame()
    if len(priorities) != n:
        raise ValueError(f"{len(priorities)} priorities for {n} states")
    if names is not None and len(names) != n:
        raise ValueError(f"{len(names)} names for {n} states")
    owner = np.array([int(Player(o)) for o in owners], dtype=np.int64)
    priority = np.asarray(priorities, dtype=np.int64)
    if priority.min() < 0:
        raise ValueError("priorities must be non-negative")

    e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    e = e.reshape(-1, 2)
    bad = np.flatnonzero((e < 0).any(axis=1) | (e >= n).any(axis=1))
    if len(bad):
        raise BadEndpoint(tuple(e[bad[0]].tolist()), n)

    keys = np.unique(e[:, 0] * n + e[:, 1])
    src, dst = keys // n, keys % n
    outdeg = np.bincount(src, minlength=n)
    sinks = np.flatnonzero(outdeg == 0)
    if len(sinks):
        raise SinkState(int(sinks[0]))
    succ_ptr = np.concatenate(([0], np.cumsum(outdeg)))

    order = np.argsort(dst, kind="stable")
    pred_ptr = np.concatenate(([0], np.cumsum(np.bincount(dst, minlength=n))))
    return GameGraph(owner, priority, succ_ptr, dst, pred_ptr, src[order], names)


def induced_subgame(g: GameGraph, keep) -> tuple[GameGraph, list[int]]:
    """Restrict `g` to the states in `keep`, renumbered in ascending order.

    Returns the subgame and the map from new indices to parent indices.
    Raises :class:`NotSubgameClosed` if a kept state loses every successor.
    """
    parent = sorted(set(keep))
    if not parent:
        raise EmptyGame()
    local = np.full(g.n, -1, dtype=np.int64)
    local[parent] = np.arange(len(parent))
    src = np.repeat(np.arange(g.n), np.diff(g.succ_ptr))
    mask = (local[src] >= 0) & (local[g.succ] >= 0)
    degree = np.bincount(local[src[mask]], minlength=len(parent))
    stuck = np.flatnonzero(degree == 0)
    if len(stuck):
        raise NotSubgameClosed(parent[stuck[0]])
    names = [g.names[s] for s in parent] if g.names is not None else None
    sub = new_game(g.owner[parent].tolist(), g.priority[parent].tolist(),
                   np.stack([local[src[mask]], local[g.succ[mask]]], axis=1), names)
    return sub, parent


def is_closed(g: GameGraph, u, player: Player) -> bool:
    """True iff `player` cannot leave `u` and the opponent can stay inside it."""
    u = set(u)
    for s in u:
        succ = g.successors(s)
        if g.owner[s] == player:
            if any(t not in u for t in succ):
                return False
        elif not any(t in u for t in succ):
            return False
    return True
