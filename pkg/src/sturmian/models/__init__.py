"""Physical scenarios built on the Sturmian secular equation."""

from .anharmonic import (
    anharmonic_table,
    grid_levels,
    perturbation_reference,
    printed_ground_z_formula,
    printed_variational_bound,
    quartic_excited_fixed,
    quartic_excited_secular,
    quartic_ground_closed_form,
    quartic_pair_roots,
    variational_bound,
)
from .bath import bath_energy, bath_energy_direct, bath_energy_from_shell, lattice_energy
from .coupled import (
    ReducedQuartic,
    coupled_determinant_poly,
    coupled_reduce,
    coupled_spectrum,
    printed_cubic_coeffs,
)
from .damped import (
    DampedSpec,
    damped_coefficient,
    damped_coupling,
    damped_field,
    damped_omega0,
    damped_phase,
    xi,
)

__all__ = [
    "anharmonic_table",
    "grid_levels",
    "perturbation_reference",
    "printed_ground_z_formula",
    "printed_variational_bound",
    "quartic_excited_fixed",
    "quartic_excited_secular",
    "quartic_ground_closed_form",
    "quartic_pair_roots",
    "variational_bound",
    "bath_energy",
    "bath_energy_direct",
    "bath_energy_from_shell",
    "lattice_energy",
    "ReducedQuartic",
    "coupled_determinant_poly",
    "coupled_reduce",
    "coupled_spectrum",
    "printed_cubic_coeffs",
    "DampedSpec",
    "damped_coefficient",
    "damped_coupling",
    "damped_field",
    "damped_omega0",
    "damped_phase",
    "xi",
]
