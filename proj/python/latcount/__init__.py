"""Exact lattice-point counting in rational polytopes."""

from ._core import (
    Error,
    ParametricCounter,
    ParseError,
    SemanticError,
    brute_count,
    count_polytope,
    count_polytope_detailed,
    facet_strictness,
    find_w,
    parse_polytope,
    run_cli,
    smith_normal_form,
)

__all__ = [
    "Error",
    "ParametricCounter",
    "ParseError",
    "SemanticError",
    "brute_count",
    "count_polytope",
    "count_polytope_detailed",
    "facet_strictness",
    "find_w",
    "parse_polytope",
    "run_cli",
    "smith_normal_form",
]
