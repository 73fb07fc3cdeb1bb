"""Overlap and potential matrix elements between oscillator Sturmians.

Two independent routes are provided:

* Gauss-Hermite quadrature. Each integrand is a polynomial times the Gaussian
  exp(-(sqrt(beta_n) + sqrt(beta_m)) x^2 / 2) (times exp(-x^2) for the damped
  terms), so a rescaled rule of sufficient order is exact.
* A closed form built from the Hermite generating function. The Gaussian
  moment integral int x^g exp(p x - delta x^2 / 2) dx is written through
  L_k^(-1/2) (even g) or 1F1(k + 3/2; 3/2; .) (odd g), expanded in powers of
  the generating parameters, and I_nm is read off as a Taylor coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import (
    gauss_hermite,
    hermite,
    kummer_1f1_half_coeffs,
    laguerre_half_coeffs,
)
from .sturmians import BasisSpec, beta, sturmian_prefactor

__all__ = [
    "MAX_POWER",
    "PotentialTerm",
    "pair_element",
    "overlap_T",
    "power_W",
    "gaussian_damped_W",
    "term_matrix",
    "potential_matrix",
    "inm_quadrature",
    "inm_closed_form",
    "generating_integral_coeffs",
    "closed_form_W",
    "taylor_relations_check",
]

MAX_POWER = 12

_KINDS = ("power", "gaussian", "constant", "harmonic")


@dataclass(frozen=True)
class PotentialTerm:
    """One term of the perturbing potential, ``coefficient`` times a shape.

    kind:
      power      x**k
      gaussian   x**k exp(-x**2)
      constant   1 (same matrix as power with k = 0)
      harmonic   x**2 / 2, i.e. a rescaling of the base potential
    """

    kind: str
    k: int = 0
    coefficient: float = 1.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown term kind {self.kind!r}; expected one of {_KINDS}")
        if self.k < 0:
            raise ValueError("power must be non-negative")
        if self.kind in ("power", "gaussian") and self.k > MAX_POWER:
            raise ValueError(f"power {self.k} exceeds the supported maximum {MAX_POWER}")

    @classmethod
    def power(cls, k: int, coefficient: float = 1.0) -> "PotentialTerm":
        return cls("power", k, coefficient)

    @classmethod
    def gaussian(cls, k: int, coefficient: float = 1.0) -> "PotentialTerm":
        return cls("gaussian", k, coefficient)

    @classmethod
    def constant(cls, coefficient: float) -> "PotentialTerm":
        return cls("constant", 0, coefficient)

    @classmethod
    def harmonic(cls, coefficient: float) -> "PotentialTerm":
        return cls("harmonic", 2, coefficient)

    def __call__(self, x):
        """Pointwise value of the term, used by grid oracles."""
        x = np.asarray(x, dtype=float)
        if self.kind == "power":
            return self.coefficient * x ** self.k
        if self.kind == "gaussian":
            return self.coefficient * x ** self.k * np.exp(-x * x)
        if self.kind == "constant":
            return self.coefficient * np.ones_like(x)
        return self.coefficient * 0.5 * x * x


def _check_power(k: int) -> None:
    if not 0 <= k <= MAX_POWER:
        raise ValueError(f"power must be in [0, {MAX_POWER}], got {k}")


def _monomial(x: np.ndarray, k: int) -> np.ndarray:
    # repeated products keep (-x)^k = (-1)^k x^k bit for bit; x**k does not
    out = np.ones_like(x)
    for _ in range(k):
        out = out * x
    return out


def _folded_dot(weights: np.ndarray, vals: np.ndarray) -> float:
    # pair u with -u before summing so odd integrands cancel exactly
    return 0.5 * float(np.dot(weights, vals + vals[::-1]))


def pair_element(beta_n: float, beta_m: float, n: int, m: int, k: int, damping: float = 0.0) -> float:
    """int psi_n x^k exp(-damping x^2) psi_m dx by exact Gauss-Hermite quadrature.

    ``beta_n`` and ``beta_m`` are the couplings of the two Sturmians, which need
    not coincide.
    """
    _check_power(k)
    bn, bm = math.sqrt(beta_n), math.sqrt(beta_m)
    scale = math.sqrt(0.5 * (bn + bm) + damping)
    rule = gauss_hermite(-(-(n + m + k) // 2) + 4)
    x = rule.nodes / scale
    vals = hermite(n, math.sqrt(bn) * x) * hermite(m, math.sqrt(bm) * x) * _monomial(x, k)
    return sturmian_prefactor(n) * sturmian_prefactor(m) * _folded_dot(rule.weights, vals) / scale


def _matrix(spec: BasisSpec, k: int, damping: float) -> np.ndarray:
    if spec.dimension != 1:
        raise ValueError("matrix elements are implemented for one-dimensional bases only")
    idx = spec.indices
    betas = [beta(spec.energy, n) for n in idx]
    size = len(idx)
    out = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            if (idx[i] + idx[j] + k) % 2:
                continue
            v = pair_element(betas[i], betas[j], idx[i], idx[j], k, damping)
            out[i, j] = out[j, i] = v
    return out


def overlap_T(spec: BasisSpec) -> np.ndarray:
    """Overlap matrix T_nm = <psi_n | psi_m>."""
    return _matrix(spec, 0, 0.0)


def power_W(spec: BasisSpec, k: int) -> np.ndarray:
    """W^(k)_nm = <psi_n | x^k | psi_m>."""
    _check_power(k)
    return _matrix(spec, k, 0.0)


def gaussian_damped_W(spec: BasisSpec, k: int) -> np.ndarray:
    """Matrix of x^k exp(-x^2)."""
    _check_power(k)
    return _matrix(spec, k, 1.0)


def term_matrix(spec: BasisSpec, term: PotentialTerm) -> np.ndarray:
    if term.kind == "power":
        mat = power_W(spec, term.k)
    elif term.kind == "gaussian":
        mat = gaussian_damped_W(spec, term.k)
    elif term.kind == "constant":
        mat = overlap_T(spec)
    else:
        mat = 0.5 * power_W(spec, 2)
    return term.coefficient * mat


def potential_matrix(spec: BasisSpec, terms) -> np.ndarray:
    """Sum of the term matrices of a list of :class:`PotentialTerm`."""
    out = np.zeros((len(spec), len(spec)))
    for term in terms:
        out = out + term_matrix(spec, term)
    return out


# -- closed-form route ------------------------------------------------------


def inm_quadrature(alpha: float, beta_: float, gamma: int, delta: float, n: int, m: int) -> float:
    """int H_n(alpha x) H_m(beta x) x^gamma exp(-delta x^2 / 2) dx by quadrature."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    scale = math.sqrt(0.5 * delta)
    rule = gauss_hermite(-(-(n + m + gamma) // 2) + 4)
    x = rule.nodes / scale
    vals = hermite(n, alpha * x) * hermite(m, beta_ * x) * _monomial(x, gamma)
    return _folded_dot(rule.weights, vals) / scale


def _moment_series(gamma: int, delta: float, order: int) -> list[float]:
    """Coefficients j_r (r <= order) of int x^gamma exp(p x - delta x^2/2) dx = sum j_r p^r."""
    coeffs = [0.0] * (order + 1)
    kk = gamma // 2
    zmax = order // 2 + 1
    if gamma % 2 == 0:
        pref = 2.0 ** (kk + 1) * delta ** (-1 - kk) * math.factorial(kk) * math.sqrt(0.5 * math.pi * delta)
        lag = laguerre_half_coeffs(kk)
        # e^z L_k^(-1/2)(-z) as a series in z
        for j in range(zmax + 1):
            e_j = sum(lag[i] * (-1) ** i / math.factorial(j - i) for i in range(min(j, kk) + 1))
            r = 2 * j
            if r <= order:
                coeffs[r] = pref * e_j / (2.0 * delta) ** j
    else:
        pref = 2.0 ** (gamma / 2.0) * delta ** (-1 - gamma / 2.0) * math.gamma(1 + gamma / 2.0) * 2.0
        hyp = kummer_1f1_half_coeffs(kk + 1.5, zmax)
        for j in range(zmax + 1):
            r = 2 * j + 1
            if r <= order:
                coeffs[r] = pref * hyp[j] / (2.0 * delta) ** j
    return coeffs


def inm_closed_form(alpha: float, beta_: float, gamma: int, delta: float, n: int, m: int) -> float:
    """I_nm(alpha, beta, gamma, delta) from the generating-function closed form.

    With separate generating parameters s (for H_n(alpha x)) and t (for
    H_m(beta x)),

        sum_{n,m} s^n t^m / (n! m!) I_nm
            = exp(-s^2 - t^2) J(2 (alpha s + beta t)),

    where J(p) = int x^gamma exp(p x - delta x^2 / 2) dx. I_nm is n! m! times
    the coefficient of s^n t^m.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    if gamma < 0 or int(gamma) != gamma:
        raise ValueError("only non-negative integer powers are supported")
    gamma = int(gamma)
    if (n + m + gamma) % 2:
        return 0.0
    jr = _moment_series(gamma, delta, n + m)
    total = 0.0
    for a in range(n // 2 + 1):
        for b in range(m // 2 + 1):
            i, l = n - 2 * a, m - 2 * b
            r = i + l
            if jr[r] == 0.0:
                continue
            gauss = (-1) ** (a + b) / (math.factorial(a) * math.factorial(b))
            total += gauss * jr[r] * 2.0 ** r * math.comb(r, i) * alpha ** i * beta_ ** l
    return total * math.factorial(n) * math.factorial(m)


def generating_integral_coeffs(alpha: float, beta_: float, gamma: int, delta: float, order: int) -> list[float]:
    """Taylor data of the equal-parameter generating integral.

    Returns I_k (k < order) with
    int exp(-2 s^2 + 2 (alpha + beta) s x - delta x^2/2) x^gamma dx = sum_k I_k s^k / k!.
    """
    jr = _moment_series(gamma, delta, order)
    out = []
    for kk in range(order):
        acc = 0.0
        for a in range(kk // 2 + 1):
            r = kk - 2 * a
            acc += (-2.0) ** a / math.factorial(a) * jr[r] * (2.0 * (alpha + beta_)) ** r
        out.append(acc * math.factorial(kk))
    return out


def taylor_relations_check(alpha: float, beta_: float, gamma: int, delta: float, order: int) -> list[float]:
    """Residuals of sum_{n+m=k} I_nm / (n! m!) = I_k / k! for k < order.

    The left side uses quadrature, the right side the closed-form series.
    Residuals are scaled by max(1, |right side|).
    """
    if not 1 <= order <= 8:
        raise ValueError("order must be in [1, 8]")
    rhs = generating_integral_coeffs(alpha, beta_, gamma, delta, order)
    out = []
    for kk in range(order):
        lhs = sum(
            inm_quadrature(alpha, beta_, gamma, delta, n, kk - n) / (math.factorial(n) * math.factorial(kk - n))
            for n in range(kk + 1)
        )
        target = rhs[kk] / math.factorial(kk)
        out.append(abs(lhs - target) / max(1.0, abs(target)))
    return out


def closed_form_W(spec: BasisSpec, k: int, damping: float = 0.0) -> np.ndarray:
    """Matrix of x^k exp(-damping x^2) through :func:`inm_closed_form`."""
    idx = spec.indices
    size = len(idx)
    out = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            n, m = idx[i], idx[j]
            bn, bm = beta(spec.energy, n), beta(spec.energy, m)
            val = inm_closed_form(bn ** 0.25, bm ** 0.25, k, math.sqrt(bn) + math.sqrt(bm) + 2.0 * damping, n, m)
            out[i, j] = out[j, i] = sturmian_prefactor(n) * sturmian_prefactor(m) * val
    return out
