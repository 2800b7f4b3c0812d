"""Weak-parity games: linear-time solver, reference oracles and tooling."""

from .attractor import AttractorEngine, AttractorResult, attract, attract_with_removal
from .errors import GameError
from .gameio import parse_game, parse_solution, write_game, write_solution
from .generators import GenSpec, ladder_family, random_game
from .linear import RenamingTables, Solution, WorkCounters, build_renaming, solve
from .model import GameGraph, Player, induced_subgame, is_closed, new_game
from .reference import (eval_play, solve_bruteforce, solve_naive, verify_strategy)

__all__ = [
    "AttractorEngine", "AttractorResult", "GameError", "GameGraph", "GenSpec", "Player",
    "RenamingTables", "Solution", "WorkCounters", "attract", "attract_with_removal",
    "build_renaming", "eval_play", "induced_subgame", "is_closed", "ladder_family",
    "new_game", "parse_game", "parse_solution", "random_game", "solve", "solve_bruteforce",
    "solve_naive", "verify_strategy", "write_game", "write_solution",
]
