import random

import pytest

from weakparity import GenSpec, Player, new_game, random_game

P1, P2 = Player.P1, Player.P2


def three_state():
    """Owners [P1, P2, P2], priorities [1, 0, 1], edges 0->{1,2}, 1->1, 2->2."""
    return new_game([P1, P2, P2], [1, 0, 1], [(0, 1), (0, 2), (1, 1), (2, 2)])


def four_state():
    """Owners [P2, P2, P1, P1], edges 0->{0,1}, 1->{2,3}, 2->3, 3->3."""
    return new_game([P2, P2, P1, P1], [0, 0, 0, 0],
                    [(0, 0), (0, 1), (1, 2), (1, 3), (2, 3), (3, 3)])


def small_random_games(count, seed=0, max_n=7, max_degree=3.0, max_d=5):
    rng = random.Random(seed)
    for k in range(count):
        yield random_game(GenSpec(
            n=rng.randint(1, max_n),
            avg_degree=rng.uniform(1.0, max_degree),
            d=rng.randint(1, max_d),
            owner_ratio=rng.random(),
            seed=seed * 1_000_003 + k,
        ))


@pytest.fixture
def g3():
    return three_state()


@pytest.fixture
def g4():
    return four_state()
