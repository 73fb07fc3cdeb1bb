"""Sturmian secular equation in its two solution modes.

Expanding the solution of (D + V0 + V' - E') psi = 0 in Sturmians of energy E
and using the potential-weighted orthogonality gives

    sum_n [ (1 - beta_n) N_n delta_nm + <m|V'|n> + (E - E') T_mn ] c_n = 0.

Fixed-reference mode keeps E fixed and solves the generalized eigenproblem
(diag + V') c = (E' - E) T c. Self-consistent mode sets E' = E and looks for
the energies at which det(diag + V') vanishes; every matrix is rebuilt at each
trial E because beta_n, N_n and the matrix elements all depend on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .matrix_elements import PotentialTerm, overlap_T, potential_matrix
from .sturmians import BasisSpec, beta, normalization_N

__all__ = [
    "NotPositiveDefiniteError",
    "SecularSystem",
    "SpectralResult",
    "MIN_ENERGY",
    "assemble",
    "jacobi_eigh",
    "generalized_sym_eig",
    "solve_fixed_reference",
    "secular_matrix",
    "secular_det",
    "solve_self_consistent",
]

MIN_ENERGY = 0.05
DEFAULT_SCAN_POINTS = 400


class NotPositiveDefiniteError(ValueError):
    """Raised when the right-hand matrix of a generalized eigenproblem is not SPD."""


@dataclass(frozen=True)
class SecularSystem:
    spec: BasisSpec
    diagonal: np.ndarray
    perturbation: np.ndarray
    overlap: np.ndarray

    @property
    def size(self) -> int:
        return len(self.diagonal)

    def lhs(self) -> np.ndarray:
        """diag((1 - beta_n) N_n) + V'."""
        return np.diag(self.diagonal) + self.perturbation


@dataclass
class SpectralResult:
    mode: str
    energies: np.ndarray
    coefficients: np.ndarray | None = None
    diagnostics: dict = field(default_factory=dict)


def _diagonal(spec: BasisSpec) -> np.ndarray:
    return np.array([(1.0 - beta(spec.energy, n)) * normalization_N(spec.energy, n) for n in spec.indices])


def assemble(spec: BasisSpec, terms) -> SecularSystem:
    terms = list(terms)
    for t in terms:
        if not isinstance(t, PotentialTerm):
            raise TypeError(f"expected PotentialTerm, got {type(t).__name__}")
    return SecularSystem(spec, _diagonal(spec), potential_matrix(spec, terms), overlap_T(spec))


def jacobi_eigh(a: np.ndarray, tol: float = 1e-15, max_sweeps: int = 100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Returns ascending eigenvalues and the orthonormal eigenvectors as columns.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    size = a.shape[0]
    v = np.eye(size)
    scale = max(np.linalg.norm(a), 1e-300)
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))
        if off <= tol * scale:
            break
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot_p = a[:, p].copy()
                rot_q = a[:, q].copy()
                a[:, p] = c * rot_p - s * rot_q
                a[:, q] = s * rot_p + c * rot_q
                rot_p = a[p, :].copy()
                rot_q = a[q, :].copy()
                a[p, :] = c * rot_p - s * rot_q
                a[q, :] = s * rot_p + c * rot_q
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    vals = np.diag(a).copy()
    order = np.argsort(vals, kind="stable")
    return vals[order], v[:, order]


def _fix_signs(vecs: np.ndarray) -> np.ndarray:
    vecs = vecs.copy()
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        nz = np.flatnonzero(np.abs(col) > 1e-12 * np.max(np.abs(col)))
        if nz.size and col[nz[0]] < 0:
            vecs[:, j] = -col
    return vecs


def generalized_sym_eig(a: np.ndarray, b: np.ndarray):
    """Solve A c = lambda B c for symmetric A and symmetric positive definite B.

    B = L L^T by Cholesky, then Jacobi on L^-1 A L^-T. Eigenvalues ascend and
    the eigenvectors are B-orthonormal, with the first nonzero component of
    each made positive.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("A and B must be square matrices of equal shape")
    try:
        low = np.linalg.cholesky(b)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError("B is not positive definite") from exc
    linv = np.linalg.inv(low)
    c = linv @ a @ linv.T
    c = 0.5 * (c + c.T)
    vals, y = jacobi_eigh(c)
    vecs = linv.T @ y
    return vals, _fix_signs(vecs)


def solve_fixed_reference(system: SecularSystem) -> SpectralResult:
    """Solve (diag + V') c = (E' - E) T c at the system's fixed E."""
    E = system.spec.energy
    lhs = system.lhs()
    lam, vecs = generalized_sym_eig(lhs, system.overlap)
    residuals = [
        float(np.linalg.norm(lhs @ vecs[:, j] - lam[j] * system.overlap @ vecs[:, j]) / np.linalg.norm(vecs[:, j]))
        for j in range(len(lam))
    ]
    return SpectralResult(
        mode="fixed_reference",
        energies=E + lam,
        coefficients=vecs,
        diagnostics={"reference_energy": E, "residuals": residuals},
    )


def secular_matrix(indices, terms, E: float) -> np.ndarray:
    """diag((1 - beta_n) N_n) + V' for the basis ``indices`` at energy E."""
    if not E > 0:
        raise ValueError(f"energy must be positive, got {E}")
    spec = BasisSpec(E, tuple(indices))
    return np.diag(_diagonal(spec)) + potential_matrix(spec, list(terms))


def secular_det(indices, terms, E: float) -> float:
    """Determinant of the self-consistent secular matrix at E (LU with pivoting)."""
    return float(np.linalg.det(secular_matrix(indices, terms, E)))


def solve_self_consistent(indices, terms, bracket=(MIN_ENERGY, 2.0), scan_points: int = DEFAULT_SCAN_POINTS) -> SpectralResult:
    """All energies in ``bracket`` where the secular determinant changes sign.

    The determinant is sampled on a uniform grid; each sign change is refined
    with Brent's method (bisection plus secant/inverse interpolation).
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not 0 < lo < hi:
        raise ValueError(f"bracket must satisfy 0 < lo < hi, got {bracket}")
    if lo < MIN_ENERGY:
        raise ValueError(f"bracket must start at E >= {MIN_ENERGY}; matrix elements diverge as E -> 0")
    if scan_points < 2:
        raise ValueError("scan_points must be at least 2")
    indices = tuple(indices)
    terms = list(terms)

    def f(e):
        return secular_det(indices, terms, e)

    grid = np.linspace(lo, hi, scan_points)
    values = np.array([f(e) for e in grid])
    roots, brackets = [], []
    for i in range(scan_points - 1):
        v0, v1 = values[i], values[i + 1]
        if v0 == 0.0:
            if not roots or abs(roots[-1] - grid[i]) > 1e-12:
                roots.append(float(grid[i]))
                brackets.append((float(grid[i]), float(grid[i])))
            continue
        if np.sign(v0) * np.sign(v1) < 0:
            r = brentq(f, grid[i], grid[i + 1], xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
            roots.append(float(r))
            brackets.append((float(grid[i]), float(grid[i + 1])))
    if values[-1] == 0.0:
        roots.append(float(grid[-1]))
        brackets.append((float(grid[-1]), float(grid[-1])))
    diagnostics = {
        "brackets": brackets,
        "residuals": [abs(f(r)) for r in roots],
        "scan_points": scan_points,
        "bracket": (lo, hi),
    }
    if not roots:
        diagnostics["message"] = "no sign change of the secular determinant in the bracket"
    return SpectralResult(mode="self_consistent", energies=np.array(roots), diagnostics=diagnostics)
