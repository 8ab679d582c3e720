"""Explicit Ramsey colorings, stepping-up constructions, the on-line
builder-painter game, and brute-force verification at desk scale."""

from ._core import (
    CapacityError,
    DomainError,
    RankColoring,
    SteppingColoring,
    UsageError,
    bit_compare,
    bound_report,
    check_sequence_dichotomy,
    classify,
    delta,
    delta_sequence,
    enumerate_k_subsets,
    exact_ramsey,
    greedy_partial_steiner,
    online_game_bound,
    run_game,
    step_up_color,
    tower,
)

__all__ = [
    "CapacityError",
    "DomainError",
    "RankColoring",
    "SteppingColoring",
    "UsageError",
    "bit_compare",
    "bound_report",
    "check_sequence_dichotomy",
    "classify",
    "delta",
    "delta_sequence",
    "enumerate_k_subsets",
    "exact_ramsey",
    "greedy_partial_steiner",
    "online_game_bound",
    "run_game",
    "step_up_color",
    "tower",
]
