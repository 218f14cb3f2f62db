"""Lattice walk enumeration, series identities and recurrence evaluation."""

from ._core import (
    __version__,
    axis_sequence,
    constants,
    count,
    count_aggregate,
    eval_branches,
    evaluate_recurrence,
    flip_down,
    flip_up,
    holonomy_criterion,
    knight_recurrence_json,
    length_sequence,
    run_cli,
    series,
    singularity_chain,
    singularity_survey,
    validate_recurrence,
    verify_identity,
)

__all__ = [
    "__version__",
    "axis_sequence",
    "constants",
    "count",
    "count_aggregate",
    "eval_branches",
    "evaluate_recurrence",
    "flip_down",
    "flip_up",
    "holonomy_criterion",
    "knight_recurrence_json",
    "length_sequence",
    "run_cli",
    "series",
    "singularity_chain",
    "singularity_survey",
    "validate_recurrence",
    "verify_identity",
]
