"""Python bindings for the degree-capped Hamiltonicity game engine."""

from ._degree_game import (
    GameError,
    Graph,
    canonical_key,
    check_trace,
    classify,
    exhaust,
    hamilton_cycle,
    has_witness,
    is_two_connected,
    play,
    simulate,
    solve,
)

__all__ = [
    "GameError",
    "Graph",
    "canonical_key",
    "check_trace",
    "classify",
    "exhaust",
    "hamilton_cycle",
    "has_witness",
    "is_two_connected",
    "play",
    "simulate",
    "solve",
]
