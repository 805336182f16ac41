"""Ideals of quadrics: free resolutions, matrix canonical forms and bounds on
projective dimension."""

from ._pdquad import (
    ClassificationError,
    GenerationError,
    Ideal,
    ParseError,
    PdquadError,
    PreconditionError,
    canonical_form,
    classify_type,
    essential_variable_count,
    explore_question2,
    fuzz,
    run_cli,
    scroll_ideal,
    table_bound,
    tight_family,
    verify,
    verify_main_bound,
)

__all__ = [
    "ClassificationError",
    "GenerationError",
    "Ideal",
    "ParseError",
    "PdquadError",
    "PreconditionError",
    "canonical_form",
    "classify_type",
    "essential_variable_count",
    "explore_question2",
    "fuzz",
    "run_cli",
    "scroll_ideal",
    "table_bound",
    "tight_family",
    "verify",
    "verify_main_bound",
]
