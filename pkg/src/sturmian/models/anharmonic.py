"""Cubic and quartic anharmonic oscillators.

Internal units are mass weighted (hbar = 1, unit mass). Parameters quoted for
a physical mass m and frequency omega are converted at the boundary: with
y = sqrt(m) x the Hamiltonian p^2/2m + m omega^2 x^2/2 + alpha x^k becomes
p_y^2/2 + y^2/2 + (omega^2 - 1) y^2/2 + alpha m^(-k/2) y^k.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ..matrix_elements import PotentialTerm, overlap_T, potential_matrix, power_W
from ..secular_solver import (
    MIN_ENERGY,
    assemble,
    solve_fixed_reference,
    solve_self_consistent,
)
from ..specfun import poly_roots
from ..sturmians import BasisSpec, beta, normalization_N

_KIND_POWER = {"cubic": 3, "quartic": 4}


def _power(kind: str) -> int:
    try:
        return _KIND_POWER[kind]
    except KeyError:
        raise ValueError(f"kind must be 'cubic' or 'quartic', got {kind!r}") from None


def anharmonic_terms(kind: str, alpha: float, damped: bool = False) -> list[PotentialTerm]:
    """V' = alpha x^k, optionally times exp(-x^2)."""
    k = _power(kind)
    if damped:
        return [PotentialTerm.gaussian(k, alpha)]
    return [PotentialTerm.power(k, alpha)]


def anharmonic_table(kind: str, alpha: float, N_values, mode: str = "self_consistent", damped: bool = False,
                     bracket=(MIN_ENERGY, 2.0), scan_points: int = 400) -> list[dict]:
    """Ground-state roots of the self-consistent problem for bases {0..N-1}.

    The ground root is the smallest sign change of the determinant in
    ``bracket``; NaN if there is none.
    """
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    if mode != "self_consistent":
        raise ValueError(f"unsupported mode {mode!r}")
    terms = anharmonic_terms(kind, alpha, damped)
    rows = []
    for N in N_values:
        N = int(N)
        if N < 1:
            raise ValueError("N must be positive")
        res = solve_self_consistent(range(N), terms, bracket=bracket, scan_points=scan_points)
        roots = [float(r) for r in res.energies]
        rows.append({
            "N": N,
            "ground": roots[0] if roots else math.nan,
            "roots": roots,
            "residuals": res.diagnostics["residuals"],
        })
    return rows


def _mass_terms(alpha: float, m: float, omega: float, k: int = 4) -> list[PotentialTerm]:
    if m <= 0 or omega <= 0:
        raise ValueError("mass and frequency must be positive")
    terms = [PotentialTerm.power(k, alpha * m ** (-k / 2.0))]
    if omega != 1.0:
        terms.insert(0, PotentialTerm.harmonic(omega * omega - 1.0))
    return terms


def quartic_pair_roots(n: int, alpha: float, m: float = 0.5, omega: float = 2.0) -> tuple[float, float]:
    """Both roots of the two-Sturmian quadratic for the levels n, n+1.

    At E = omega (n + 1/2) only the diagonal elements of x^4 enter, and the
    quadratic in x = E' - E reads
    T_nn T_qq x^2 - a (T_nn W_qq + T_qq W_nn) x + a^2 W_nn W_qq = 0  (q = n+1).
    Returned in ascending order.
    """
    E = omega * (n + 0.5)
    a = alpha * m ** -2.0
    spec = BasisSpec(E, (n, n + 1))
    T = overlap_T(spec)
    W = power_W(spec, 4)
    coeffs = [
        a * a * W[0, 0] * W[1, 1],
        -a * (T[0, 0] * W[1, 1] + T[1, 1] * W[0, 0]),
        T[0, 0] * T[1, 1],
    ]
    roots = poly_roots(coeffs).roots
    vals = sorted(float(np.real(r)) for r in roots)
    return E + vals[0], E + vals[1]


def quartic_excited_fixed(n: int, N: int, alpha: float, m: float = 0.5, omega: float = 2.0) -> float:
    """Level n of p^2/2m + m omega^2 x^2/2 + alpha x^4 in fixed-reference mode.

    The Sturmians are taken at E = omega (n + 1/2). N=1 uses the single
    Sturmian n; N=2 uses {n, n+1} through :func:`quartic_pair_roots` and returns
    the root belonging to level n (the one continuous with N=1).
    """
    if not 0 <= n:
        raise ValueError("n must be non-negative")
    if N == 1:
        E = omega * (n + 0.5)
        system = assemble(BasisSpec(E, (n,)), _mass_terms(alpha, m, omega))
        return float(solve_fixed_reference(system).energies[0])
    if N == 2:
        single = quartic_excited_fixed(n, 1, alpha, m, omega)
        pair = quartic_pair_roots(n, alpha, m, omega)
        return min(pair, key=lambda r: abs(r - single))
    raise ValueError("N must be 1 or 2")


def quartic_excited_secular(n: int, alpha: float, m: float = 0.5, omega: float = 2.0) -> float:
    """Fixed-reference eigenvalue of the full 2x2 secular problem in {n, n+1}.

    Unlike :func:`quartic_pair_roots` this keeps the off-diagonal x^4 and
    overlap elements. Returns the eigenvalue nearest the N=1 value.
    """
    E = omega * (n + 0.5)
    system = assemble(BasisSpec(E, (n, n + 1)), _mass_terms(alpha, m, omega))
    energies = solve_fixed_reference(system).energies
    single = quartic_excited_fixed(n, 1, alpha, m, omega)
    return float(min(energies, key=lambda r: abs(r - single)))


def quartic_ground_closed_form(alpha: float) -> float:
    """Positive root of 8E^3 - 2E - 3 alpha = 0, the one-Sturmian quartic ground state.

    Trigonometric form while the cubic has three real roots, Cardano otherwise.
    """
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    p = -0.25
    q = -3.0 * alpha / 8.0
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc < 0:
        r = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * r)
        return r * math.cos(math.acos(max(-1.0, min(1.0, arg))) / 3.0)
    s = math.sqrt(disc)
    return float(np.cbrt(-q / 2.0 + s) + np.cbrt(-q / 2.0 - s))


def printed_ground_z_formula(alpha: float) -> complex:
    """z^(1/3) + z^(-1/3)/12 with z = 2 / (2592 alpha + sqrt(6718464 alpha^2 - 6912)), verbatim."""
    z = 2.0 / (2592.0 * alpha + cmath.sqrt(6718464.0 * alpha * alpha - 6912.0))
    w = z ** (1.0 / 3.0)
    return w + 1.0 / (12.0 * w)


def perturbation_reference(kind: str, alpha: float, m: float = 1.0, omega: float = 1.0, hbar: float = 1.0) -> float:
    """Second-order Rayleigh-Schroedinger ground energies, as usually quoted.

    cubic:   E0 - 11/8 hbar^2 alpha^2 / (m^3 omega^4)
    quartic: E0 + 3/16 hbar^2 alpha / (m^2 omega^2) - 23/4 hbar alpha^2 / (m^2 omega^3)
    with E0 = hbar omega / 2. The quartic correction terms are kept exactly in
    the published form.
    """
    _power(kind)
    E0 = 0.5 * hbar * omega
    if kind == "cubic":
        return E0 - 11.0 / 8.0 * hbar ** 2 * alpha ** 2 / (m ** 3 * omega ** 4)
    return E0 + 3.0 / 16.0 * hbar ** 2 * alpha / (m ** 2 * omega ** 2) - 23.0 / 4.0 * hbar * alpha ** 2 / (m ** 2 * omega ** 3)


def _bound_parts(E: float, n: int, terms):
    spec = BasisSpec(E, (n,))
    T = overlap_T(spec)[0, 0]
    V = potential_matrix(spec, list(terms))[0, 0]
    return beta(E, n), normalization_N(E, n) / T, V / T


def variational_bound(E: float, n: int, terms=(), include_v0: bool = True) -> float:
    """Rayleigh quotient <psi_n|H|psi_n> / <psi_n|psi_n> of a single Sturmian.

    From D psi_n = (E - beta_n V0) psi_n:
      H = D + V0 + V'  gives E + (1 - beta_n) N_n/T_nn + <V'>/T_nn
      H = D + V'       gives E - beta_n N_n/T_nn + <V'>/T_nn
    """
    b, nt, vt = _bound_parts(E, n, terms)
    if include_v0:
        return E + (1.0 - b) * nt + vt
    return E - b * nt + vt


def printed_variational_bound(E: float, n: int, terms=(), include_v0: bool = True) -> float:
    """The same bound with the (1 + beta_n) and (+beta_n) signs of the published form."""
    b, nt, vt = _bound_parts(E, n, terms)
    if include_v0:
        return E + (1.0 + b) * nt + vt
    return E + b * nt + vt


def _fd_levels(potential, n_levels: int, x_max: float, points: int) -> np.ndarray:
    x = np.linspace(-x_max, x_max, points)
    h = x[1] - x[0]
    inner = x[1:-1]
    diag = 1.0 / (h * h) + potential(inner)
    off = np.full(len(inner) - 1, -0.5 / (h * h))
    return eigh_tridiagonal(diag, off, select="i", select_range=(0, n_levels - 1), eigvals_only=True)


def grid_levels(potential, n_levels: int = 5, x_max: float = 10.0, points: int = 4000, richardson: bool = True) -> np.ndarray:
    """Lowest levels of -1/2 d^2/dx^2 + V(x) by second-order finite differences.

    Dirichlet walls at +-x_max. With ``richardson`` the grid is refined to
    2*points - 1 (half the spacing) and the O(h^2) error is extrapolated away.
    """
    if points < 3:
        raise ValueError("need at least 3 grid points")
    coarse = _fd_levels(potential, n_levels, x_max, points)
    if not richardson:
        return coarse
    fine = _fd_levels(potential, n_levels, x_max, 2 * points - 1)
    return (4.0 * fine - coarse) / 3.0
