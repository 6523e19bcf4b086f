"""Combinatorial homological invariants of symmetric monomial ideals."""

from ._core import (
    DomainError,
    Ideal,
    ResourceError,
    TheoremViolation,
    admits_socle_embedding,
    asymptotic_reg,
    b_const,
    betti_table,
    bp_feasible,
    chain_profile,
    conjugate,
    dominance_leq,
    enumerate_box_partitions,
    ext_character,
    ext_map_decomposition,
    has_linear_resolution,
    hilbert_function_jzl,
    invariants,
    is_cohen_macaulay,
    is_symmetric_shifted,
    is_symmetric_strongly_shifted,
    jzl_invariants,
    leq,
    oracle_invariants,
    orbit,
    powers_support,
    reg_chain,
    reg_power_exact,
    scm_filtration,
    strip_columns,
    succ_ideal,
    sup,
    truncate_columns,
    truncate_to_n,
    y_family,
    z_set,
    z_set_singleton,
    zpair_member,
    zpair_member_via_lattice,
)

__all__ = [
    "DomainError",
    "Ideal",
    "ResourceError",
    "TheoremViolation",
    "admits_socle_embedding",
    "asymptotic_reg",
    "b_const",
    "betti_table",
    "bp_feasible",
    "chain_profile",
    "conjugate",
    "dominance_leq",
    "enumerate_box_partitions",
    "ext_character",
    "ext_map_decomposition",
    "has_linear_resolution",
    "hilbert_function_jzl",
    "invariants",
    "is_cohen_macaulay",
    "is_symmetric_shifted",
    "is_symmetric_strongly_shifted",
    "jzl_invariants",
    "leq",
    "oracle_invariants",
    "orbit",
    "powers_support",
    "reg_chain",
    "reg_power_exact",
    "scm_filtration",
    "strip_columns",
    "succ_ideal",
    "sup",
    "truncate_columns",
    "truncate_to_n",
    "y_family",
    "z_set",
    "z_set_singleton",
    "zpair_member",
    "zpair_member_via_lattice",
]
