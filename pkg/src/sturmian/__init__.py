"""Sturmian basis-set method for harmonic and anharmonic oscillators."""

from .matrix_elements import (
    PotentialTerm,
    closed_form_W,
    gaussian_damped_W,
    inm_closed_form,
    inm_quadrature,
    overlap_T,
    potential_matrix,
    power_W,
    taylor_relations_check,
)
from .secular_solver import (
    NotPositiveDefiniteError,
    SecularSystem,
    SpectralResult,
    assemble,
    generalized_sym_eig,
    secular_det,
    solve_fixed_reference,
    solve_self_consistent,
)
from .sturmians import (
    BasisSpec,
    BathSpec,
    bath_reduce,
    beta,
    beta_tilde,
    momentum_sturmian,
    normalization_N,
    sturmian_eval,
)

__version__ = "0.1.0"

__all__ = [
    "PotentialTerm",
    "closed_form_W",
    "gaussian_damped_W",
    "inm_closed_form",
    "inm_quadrature",
    "overlap_T",
    "potential_matrix",
    "power_W",
    "taylor_relations_check",
    "NotPositiveDefiniteError",
    "SecularSystem",
    "SpectralResult",
    "assemble",
    "generalized_sym_eig",
    "secular_det",
    "solve_fixed_reference",
    "solve_self_consistent",
    "BasisSpec",
    "BathSpec",
    "bath_reduce",
    "beta",
    "beta_tilde",
    "momentum_sturmian",
    "normalization_N",
    "sturmian_eval",
]
