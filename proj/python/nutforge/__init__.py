"""Exact tools for vertex-transitive nut graphs.

Graphs are exchanged as graph6 strings. Polynomials are lists of Python ints,
constant term first.
"""

from ._core import (
    InfeasiblePair,
    ParseError,
    SearchBudgetExceeded,
    SearchExhausted,
    are_isomorphic,
    bicirculant,
    canonical_graph6,
    circulant,
    complement,
    construct,
    cyclotomic,
    dihedral,
    divides_cyclotomic,
    euler_phi,
    family_polynomial,
    feasible_vt,
    nullity_shifted,
    nut_check_direct,
    nut_check_spectral,
    replicate_finite_case_analysis,
    unique_remainder_holds,
    verify_family_bounded,
    verify_unique_remainder,
)

__all__ = [
    "InfeasiblePair",
    "ParseError",
    "SearchBudgetExceeded",
    "SearchExhausted",
    "are_isomorphic",
    "bicirculant",
    "canonical_graph6",
    "circulant",
    "complement",
    "construct",
    "cyclotomic",
    "dihedral",
    "divides_cyclotomic",
    "euler_phi",
    "family_polynomial",
    "feasible_vt",
    "nullity_shifted",
    "nut_check_direct",
    "nut_check_spectral",
    "replicate_finite_case_analysis",
    "unique_remainder_holds",
    "verify_family_bounded",
    "verify_unique_remainder",
]
