"""Degree-0 chromatic symmetric homology of small graphs."""

from ._chromhom import (
    DomainError,
    SizeLimitError,
    character,
    check_conjecture,
    chromatic_symmetric_function,
    enumerate_ssyt,
    enumerate_syt,
    f_syt,
    homology,
    hook_lengths,
    kostka,
    mult_general,
    mult_hook_case,
    mult_two_column,
    partitions_of,
    predict_h10_star,
    star_edges,
)

__all__ = [
    "DomainError",
    "SizeLimitError",
    "character",
    "check_conjecture",
    "chromatic_symmetric_function",
    "enumerate_ssyt",
    "enumerate_syt",
    "f_syt",
    "homology",
    "hook_lengths",
    "kostka",
    "mult_general",
    "mult_hook_case",
    "mult_two_column",
    "partitions_of",
    "predict_h10_star",
    "star_edges",
]
