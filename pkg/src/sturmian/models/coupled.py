"""Coupled oscillators reduced to a single quartic anharmonic oscillator.

V = sum_i g_i (x - x_i)^2 / 2 + sum_{i != j} lambda_ij (x - x_i)^2 (x - x_j)^2 / 2
is rewritten as gbar x^2/2 - c1 x + c2 - c3 x^3 + c4 x^4 using the published
sums for the five coefficients.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from ..matrix_elements import PotentialTerm, overlap_T, power_W
from ..secular_solver import MIN_ENERGY, SpectralResult, solve_self_consistent
from ..specfun import poly_eval, poly_roots
from ..sturmians import BasisSpec, normalization_N

MAX_BASIS = 5


@dataclass(frozen=True)
class ReducedQuartic:
    gbar: float
    c1: float
    c2: float
    c3: float
    c4: float


def coupled_reduce(positions, couplings, lam) -> ReducedQuartic:
    """Coefficients of the reduced quartic from positions x_i, couplings g_i and lambda_ij.

    gbar = sum g_i
    c1   = sum_i 2 (g_i - sum_{j!=i} lambda_ij (x_j^2 + x_j x_i)) x_i
    c2   = 1/2 sum_i (g_i + sum_{j!=i} x_j^2) x_i^2
    c3   = sum_{i!=j} lambda_ij (x_i + x_j)
    c4   = 1/2 sum_{i!=j} lambda_ij
    """
    x = np.asarray(positions, dtype=float)
    g = np.asarray(couplings, dtype=float)
    lam = np.asarray(lam, dtype=float)
    M = len(x)
    if g.shape != (M,) or lam.shape != (M, M):
        raise ValueError("positions, couplings and lambda must have matching dimensions")
    if not np.allclose(lam, lam.T) or np.any(np.diag(lam) != 0):
        raise ValueError("lambda must be symmetric with zero diagonal")
    off = ~np.eye(M, dtype=bool)
    c1 = c2 = c3 = 0.0
    for i in range(M):
        others = off[i]
        c1 += 2.0 * (g[i] - np.sum(lam[i, others] * (x[others] ** 2 + x[others] * x[i]))) * x[i]
        c2 += 0.5 * (g[i] + np.sum(x[others] ** 2)) * x[i] ** 2
        c3 += np.sum(lam[i, others] * (x[i] + x[others]))
    c4 = 0.5 * float(np.sum(lam[off]))
    return ReducedQuartic(float(g.sum()), float(c1), float(c2), float(c3), c4)


def printed_cubic_coeffs(red: ReducedQuartic) -> list[float]:
    """gbar - 3 c4 E + 4 E^2 + 16 c2 E^3, ascending powers of E."""
    return [red.gbar, -3.0 * red.c4, 4.0, 16.0 * red.c2]


def coupled_determinant_poly(red: ReducedQuartic, N: int, variant: str = "printed") -> np.ndarray:
    """Secular determinant of the basis {0..N-1} as a polynomial in E.

    With u = sqrt(E) every matrix element scales as a power of u
    (T ~ u^-1, W1 ~ u^-2, W3 ~ u^-4, W4 ~ u^-5, N_n ~ u^-3, beta_n ~ u^4), so
    u^5 times each entry is a polynomial in u. The determinant of those is
    even in u and is returned as ascending coefficients in E, with factors of
    E that only come from the u^5 scaling removed.

    variant "printed":    (beta_n + gbar) N_n delta - c1 W1 + c2 T - c3 W3 - c4 W4
    variant "consistent": (gbar - beta_n) N_n delta - c1 W1 + c2 T - c3 W3 + c4 W4
    """
    if not 1 <= N <= MAX_BASIS:
        raise ValueError(f"N must be in [1, {MAX_BASIS}]")
    if variant not in ("printed", "consistent"):
        raise ValueError(f"unknown variant {variant!r}")
    spec = BasisSpec(1.0, tuple(range(N)))
    T = overlap_T(spec)
    W1, W3, W4 = (power_W(spec, k) for k in (1, 3, 4))
    sign_b, sign_4 = (1.0, -1.0) if variant == "printed" else (-1.0, 1.0)
    entries = [[None] * N for _ in range(N)]
    for i in range(N):
        for j in range(N):
            c = np.zeros(7)
            if i == j:
                Nn = normalization_N(1.0, i)
                c[6] += sign_b * Nn / (i + 0.5) ** 2
                c[2] += red.gbar * Nn
            c[3] -= red.c1 * W1[i, j]
            c[4] += red.c2 * T[i, j]
            c[1] -= red.c3 * W3[i, j]
            c[0] += sign_4 * red.c4 * W4[i, j]
            entries[i][j] = c
    det = np.zeros(1)
    for perm in itertools.permutations(range(N)):
        sign = _perm_sign(perm)
        term = np.ones(1)
        for i, j in enumerate(perm):
            term = P.polymul(term, entries[i][j])
        det = P.polyadd(det, sign * term)
    scale = max(np.max(np.abs(det)), 1e-300)
    if np.max(np.abs(det[1::2])) > 1e-10 * scale:
        raise ArithmeticError("determinant is not even in sqrt(E)")
    q = det[0::2].copy()
    q[np.abs(q) < 1e-14 * scale] = 0.0
    q = np.trim_zeros(q, "b")
    while len(q) > 1 and q[0] == 0.0:
        q = q[1:]
    return q


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _order_roots(roots) -> np.ndarray:
    roots = [complex(r) for r in roots]
    roots.sort(key=lambda z: (round(z.real, 9), -z.imag))
    return np.array(roots, dtype=complex)


def _poly_result(coeffs, mode: str, extra: dict) -> SpectralResult:
    found = poly_roots(list(coeffs))
    energies = _order_roots(found.roots)
    scale = max(abs(c) for c in coeffs)
    residuals = [abs(poly_eval(list(coeffs), z)) / scale for z in energies]
    diag = {"polynomial": [float(c) for c in coeffs], "residuals": residuals}
    diag.update(extra)
    return SpectralResult(mode=mode, energies=energies, diagnostics=diag)


def consistent_terms(red: ReducedQuartic) -> list[PotentialTerm]:
    """V' relative to V0 = x^2/2 for the reduced quartic."""
    return [
        PotentialTerm.harmonic(red.gbar - 1.0),
        PotentialTerm.power(1, -red.c1),
        PotentialTerm.constant(red.c2),
        PotentialTerm.power(3, -red.c3),
        PotentialTerm.power(4, red.c4),
    ]


def coupled_spectrum(red: ReducedQuartic, N: int, mode: str = "as_printed", bracket=(MIN_ENERGY, 2.0),
                     scan_points: int = 400) -> SpectralResult:
    """Energies of the reduced quartic in the first N Sturmians.

    as_printed: N=1 returns the roots of the published cubic; N>=2 the roots of
    :func:`coupled_determinant_poly` with the published sign structure.
    Complex roots are allowed; conjugate pairs list the +Im member first.

    consistent: self-consistent real roots of the full secular equation with
    :func:`consistent_terms`.
    """
    if not 1 <= N <= MAX_BASIS:
        raise ValueError(f"N must be in [1, {MAX_BASIS}]")
    if mode == "as_printed":
        if N == 1:
            return _poly_result(printed_cubic_coeffs(red), mode, {"source": "printed cubic"})
        return _poly_result(coupled_determinant_poly(red, N, "printed"), mode, {"source": "determinant"})
    if mode == "consistent":
        res = solve_self_consistent(range(N), consistent_terms(red), bracket=bracket, scan_points=scan_points)
        res.mode = mode
        return res
    raise ValueError(f"unknown mode {mode!r}")


def footnote_parameters(sign: int = 1):
    """Positions and couplings of the two-oscillator example with gbar = c_i = 1.

    x1 = (1 -+ s)/4, x2 = 1/2 - x1, g1 = 1/2 +- 28175 s / 110608, g2 = 1 - g1,
    with s = sqrt(1 + 8 sqrt 14) and lambda_12 = 1 (so that c4 = 1).
    """
    s = math.sqrt(1.0 + 8.0 * math.sqrt(14.0))
    x1 = 0.25 * (1.0 - sign * s)
    g1 = 0.5 + sign * 28175.0 / 110608.0 * s
    lam = np.array([[0.0, 1.0], [1.0, 0.0]])
    return (x1, 0.5 - x1), (g1, 1.0 - g1), lam
