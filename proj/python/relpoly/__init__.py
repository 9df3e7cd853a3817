"""Relation sets, tilings and Gelfand-Tsetlin type polyhedra."""

from ._relpoly import (
    Pattern,
    RelationSet,
    RelpolyError,
    act,
    check_admissible,
    check_commutators,
    constant_column_pattern,
    enumerate_integral,
    enumerate_integral_weight,
    face_dim_oracle,
    is_polytope,
    is_reduced,
    is_top_connected,
    min_face_dims,
    min_face_dims_plus,
    parse_pattern,
    parse_pattern_line,
    parse_relations,
    run_cli,
    standard_set,
    tiling,
    tiling_matrix,
    weyl_dim,
)

__all__ = [
    "Pattern",
    "RelationSet",
    "RelpolyError",
    "act",
    "check_admissible",
    "check_commutators",
    "constant_column_pattern",
    "enumerate_integral",
    "enumerate_integral_weight",
    "face_dim_oracle",
    "is_polytope",
    "is_reduced",
    "is_top_connected",
    "min_face_dims",
    "min_face_dims_plus",
    "parse_pattern",
    "parse_pattern_line",
    "parse_relations",
    "run_cli",
    "standard_set",
    "tiling",
    "tiling_matrix",
    "weyl_dim",
]
