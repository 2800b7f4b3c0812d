"""Seeded game families for tests and benchmarks.

Randomness comes from numpy's PCG64 bit generator, so a spec always
produces the same game.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import GameGraph, Player, new_game


@dataclass(frozen=True)
class GenSpec:
    n: int
    avg_degree: float = 2.0
    d: int = 4
    owner_ratio: float = 0.5  # fraction of P1 states
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.avg_degree < 1:
            raise ValueError("avg_degree must be at least 1")
        if self.d < 1:
            raise ValueError("d must be at least 1")
        if not 0 <= self.owner_ratio <= 1:
            raise ValueError("owner_ratio must lie in [0, 1]")


def random_game(spec: GenSpec) -> GameGraph:
    """Every state gets one random successor, then extra random edges
    bring the edge count up to about ``avg_degree * n`` (before
    de-duplication)."""
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    n = spec.n
    owners = np.where(rng.random(n) < spec.owner_ratio, Player.P1, Player.P2)
    priorities = rng.integers(0, spec.d, size=n)
    extra = int(round((spec.avg_degree - 1) * n))
    src = np.concatenate([np.arange(n), rng.integers(0, n, size=extra)])
    dst = rng.integers(0, n, size=n + extra)
    return new_game(owners.tolist(), priorities.tolist(), np.stack([src, dst], axis=1))


def ladder_family(n: int) -> GameGraph:
    """Worst case for the naive engine: ``d = n`` and every round removes one state.

    State ``i`` has priority ``i`` and belongs to P1 iff ``i`` is even.
    Edges: ``i -> i`` and ``i -> i+1`` everywhere, plus ``i -> 0`` for odd
    ``i``.  An odd state keeps an exit besides state 0, so round 0 only
    takes state 0 and every later round takes exactly its own state.
    """
    if n < 2:
        raise ValueError("ladder needs at least two states")
    i = np.arange(n)
    odd = i[1::2]
    src = np.concatenate([i, i[:-1], odd])
    dst = np.concatenate([i, i[1:], np.zeros(len(odd), dtype=np.int64)])
    return new_game((i % 2).tolist(), i.tolist(), np.stack([src, dst], axis=1))


FAMILIES = ("ladder", "random")


def family_game(family: str, n: int, seed: int = 0) -> GameGraph:
    """Instance of a named benchmark family at size `n`."""
    if family == "ladder":
        return ladder_family(n)
    if family == "random":
        return random_game(GenSpec(n=n, avg_degree=3.0, d=max(1, n // 8), seed=seed))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
