"""Absorbing Markov chains and exact ASUA solving."""

from asua.chain.aggregates import (
    asua_equation_residuals,
    asua_sum,
    hitting_matrix,
    round_trip,
    solve,
)
from asua.chain.io import (
    asua_records,
    format_asua,
    parse_chain,
    parse_instance,
    read_chain,
    read_instance,
)
from asua.chain.solver import (
    AsuaVector,
    FloatSolution,
    fundamental_matrix,
    gaussian_solve,
    solve_asua,
    solve_asua_float,
)
from asua.chain.transition import (
    CanonicalForm,
    TransitionMatrix,
    as_chain,
    build_transition,
    canonical_blocks,
    step_distribution,
    transition_from_rows,
)

__all__ = [
    "AsuaVector",
    "CanonicalForm",
    "FloatSolution",
    "TransitionMatrix",
    "as_chain",
    "asua_equation_residuals",
    "asua_records",
    "asua_sum",
    "build_transition",
    "canonical_blocks",
    "format_asua",
    "fundamental_matrix",
    "gaussian_solve",
    "hitting_matrix",
    "parse_chain",
    "parse_instance",
    "read_chain",
    "read_instance",
    "round_trip",
    "solve",
    "solve_asua",
    "solve_asua_float",
    "step_distribution",
    "transition_from_rows",
]
