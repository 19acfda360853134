"""Recursive tournaments T_k, min out-degree bound certificates and subset search."""

from ._tsplit import (
    BudgetExceeded,
    Digraph,
    DimensionError,
    DomainError,
    ParseError,
    PreconditionError,
    SizeLimitError,
    branch_bound_max,
    build_D,
    build_T,
    certify_bound,
    compose_cyclic,
    delete_vertex,
    enumerate_max,
    gap_table,
    induced,
    is_tournament,
    level_params,
    min_identity_check,
    min_out_degree,
    random_balanced_split,
    split_experiment,
    trit_arc,
    verify_theorem2,
)

__all__ = [
    "BudgetExceeded",
    "Digraph",
    "DimensionError",
    "DomainError",
    "ParseError",
    "PreconditionError",
    "SizeLimitError",
    "branch_bound_max",
    "build_D",
    "build_T",
    "certify_bound",
    "compose_cyclic",
    "delete_vertex",
    "enumerate_max",
    "gap_table",
    "induced",
    "is_tournament",
    "level_params",
    "min_identity_check",
    "min_out_degree",
    "random_balanced_split",
    "split_experiment",
    "trit_arc",
    "verify_theorem2",
]
