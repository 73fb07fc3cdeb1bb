"""Special functions and small numeric kernels.

Hermite polynomials (physicists' convention), the exponential integral on the
negative axis, associated Laguerre polynomials of order -1/2, the confluent
hypergeometric function 1F1(k + 3/2; 3/2; x), Gauss-Hermite rules and
polynomial root finding.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

EULER_GAMMA = 0.57721566490153286060651209008240243

__all__ = [
    "QuadratureRule",
    "PolyRoots",
    "hermite",
    "hermite_complex",
    "hermite_coeffs",
    "gauss_hermite",
    "expint_ei",
    "laguerre_half",
    "laguerre_half_coeffs",
    "kummer_1f1_half",
    "kummer_1f1_half_coeffs",
    "poly_roots",
    "poly_eval",
]


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n evaluated by three-term recurrence.

    ``x`` may be a scalar or an array; the return type follows ``x``.
    """
    if n < 0:
        raise ValueError(f"hermite order must be non-negative, got {n}")
    x = np.asarray(x, dtype=float) if not np.isscalar(x) else float(x)
    h_prev = np.ones_like(x) if isinstance(x, np.ndarray) else 1.0
    if n == 0:
        return h_prev
    h = 2.0 * x
    for k in range(1, n):
        h_prev, h = h, 2.0 * x * h - 2.0 * k * h_prev
    return h


def hermite_complex(n: int, z: complex) -> complex:
    """H_n(z) for complex ``z`` using the same recurrence as :func:`hermite`."""
    if n < 0:
        raise ValueError(f"hermite order must be non-negative, got {n}")
    z = complex(z)
    h_prev, h = 1.0 + 0.0j, 2.0 * z
    if n == 0:
        return h_prev
    for k in range(1, n):
        h_prev, h = h, 2.0 * z * h - 2.0 * k * h_prev
    return h


def hermite_coeffs(n: int) -> list[int]:
    """Exact integer coefficients of H_n in ascending powers of x."""
    if n < 0:
        raise ValueError(f"hermite order must be non-negative, got {n}")
    prev, cur = [1], [0, 2]
    if n == 0:
        return prev
    for k in range(1, n):
        nxt = [0] * (k + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] += 2 * c
        for i, c in enumerate(prev):
            nxt[i] -= 2 * k * c
        prev, cur = cur, nxt
    return cur


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Hermite rule for the weight exp(-u**2)."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f) -> float:
        """Approximate the integral of f(u) exp(-u**2) over the real line."""
        return float(np.dot(self.weights, f(self.nodes)))


@lru_cache(maxsize=None)
def _gauss_hermite_cached(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.hermite.hermgauss(order)
    # hermgauss returns nodes that are symmetric only to rounding; enforce it
    half = order // 2
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    if order % 2:
        nodes[half] = 0.0
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def gauss_hermite(order: int) -> QuadratureRule:
    """Nodes and weights of the ``order``-point Gauss-Hermite rule.

    The rule integrates p(u) exp(-u**2) exactly for polynomials of degree up to
    ``2*order - 1``.
    """
    if not isinstance(order, (int, np.integer)) or not 1 <= order <= 200:
        raise ValueError(f"Gauss-Hermite order must be in [1, 200], got {order!r}")
    nodes, weights = _gauss_hermite_cached(int(order))
    return QuadratureRule(int(order), nodes, weights)


def _e1_series(x: float) -> float:
    # E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
    total = 0.0
    term = 1.0
    k = 1
    while True:
        term *= -x / k
        contrib = term / k
        total += contrib
        if abs(contrib) < 1e-17 * max(abs(total), 1e-300):
            break
        k += 1
    return -EULER_GAMMA - math.log(x) - total


def _e1_continued_fraction(x: float) -> float:
    # modified Lentz on E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-x)


def expint_ei(x: float) -> float:
    """Exponential integral Ei(x) for x < 0 (and small positive x).

    Uses Ei(x) = -E1(-x); E1 comes from its power series for |x| <= 1 and a
    continued fraction beyond.
    """
    x = float(x)
    if x == 0.0:
        raise ValueError("Ei has a logarithmic pole at x = 0")
    if x > 1.0:
        raise ValueError("Ei is only supported for x <= 1")
    if x > 0.0:
        # Ei(x) = gamma + ln x + sum x^k / (k k!)
        total, term, k = 0.0, 1.0, 1
        while True:
            term *= x / k
            total += term / k
            if term / k < 1e-17 * total:
                break
            k += 1
        return EULER_GAMMA + math.log(x) + total
    y = -x
    if y <= 1.0:
        return -_e1_series(y)
    return -_e1_continued_fraction(y)


def laguerre_half(k: int, x):
    """Associated Laguerre polynomial L_k^{(-1/2)}(x) by recurrence."""
    if k < 0:
        raise ValueError(f"Laguerre order must be non-negative, got {k}")
    a = -0.5
    l_prev = np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0
    if k == 0:
        return l_prev
    l_cur = 1.0 + a - x
    for j in range(1, k):
        l_prev, l_cur = l_cur, ((2 * j + 1 + a - x) * l_cur - (j + a) * l_prev) / (j + 1)
    return l_cur


def laguerre_half_coeffs(k: int) -> list[float]:
    """Ascending power-series coefficients of L_k^{(-1/2)}(x)."""
    if k < 0:
        raise ValueError(f"Laguerre order must be non-negative, got {k}")
    # L_k^a(x) = sum_i (-1)^i binom(k + a, k - i) x^i / i!
    out = []
    for i in range(k + 1):
        binom = _gen_binom(k - 0.5, k - i)
        out.append((-1) ** i * binom / math.factorial(i))
    return out


def _gen_binom(top: float, j: int) -> float:
    val = 1.0
    for r in range(j):
        val *= (top - r) / (r + 1)
    return val


def _check_half_parameter(a: float) -> int:
    k = a - 1.5
    if k < 0 or abs(k - round(k)) > 1e-12:
        raise ValueError(f"upper parameter must be k + 3/2 for integer k >= 0, got {a}")
    return int(round(k))


def kummer_1f1_half(a: float, x: float) -> float:
    """Confluent hypergeometric 1F1(a; 3/2; x) for a = k + 3/2.

    Positive arguments use the Kummer series directly. Negative arguments go
    through Kummer's transformation, which turns the series into e^x times a
    terminating polynomial and avoids cancellation.
    """
    k = _check_half_parameter(a)
    x = float(x)
    if abs(x) > 50.0:
        raise OverflowError(f"|x| must not exceed 50, got {x}")
    if x < 0.0:
        # 1F1(a; b; x) = e^x 1F1(b - a; b; -x), and b - a = -k terminates
        poly, term = 1.0, 1.0
        for j in range(k):
            term *= (-k + j) / (1.5 + j) * (-x) / (j + 1)
            poly += term
        return math.exp(x) * poly
    total, term, j = 1.0, 1.0, 0
    while True:
        term *= (a + j) / (1.5 + j) * x / (j + 1)
        total += term
        j += 1
        if abs(term) <= 1e-15 * abs(total) or j > 10_000:
            break
    return total


def kummer_1f1_half_coeffs(a: float, order: int) -> list[float]:
    """First ``order + 1`` Taylor coefficients of 1F1(a; 3/2; x) about 0."""
    _check_half_parameter(a)
    out, term = [1.0], 1.0
    for j in range(order):
        term *= (a + j) / (1.5 + j) / (j + 1)
        out.append(term)
    return out


@dataclass(frozen=True)
class PolyRoots:
    """All complex roots of a polynomial with per-root residuals |p(root)|."""

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.roots)


def poly_eval(coeffs, z):
    """Evaluate an ascending-coefficient polynomial with Horner's rule."""
    acc = 0.0
    for c in reversed(list(coeffs)):
        acc = acc * z + c
    return acc


def _poly_deriv(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def _polish(coeffs, root: complex, steps: int = 3) -> complex:
    dcoeffs = _poly_deriv(coeffs)
    best, best_res = root, abs(poly_eval(coeffs, root))
    z = root
    for _ in range(steps):
        d = poly_eval(dcoeffs, z)
        if d == 0:
            break
        z = z - poly_eval(coeffs, z) / d
        res = abs(poly_eval(coeffs, z))
        if res < best_res:
            best, best_res = z, res
        else:
            break
    return best


def _quadratic_roots(c0, c1, c2) -> list[complex]:
    disc = cmath.sqrt(c1 * c1 - 4 * c2 * c0)
    # pick the sign that avoids cancellation
    if (c1.conjugate() * disc).real < 0:
        disc = -disc
    q = -0.5 * (c1 + disc)
    if q == 0:
        return [0j, 0j]
    return [q / c2, c0 / q]


def _cubic_roots(c0, c1, c2, c3) -> list[complex]:
    a, b, c = c2 / c3, c1 / c3, c0 / c3
    p = b - a * a / 3.0
    q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + c
    shift = -a / 3.0
    scale = max(1.0, abs(a), abs(b) ** 0.5, abs(c) ** (1.0 / 3.0))
    if abs(p) <= 1e-14 * scale ** 2 and abs(q) <= 1e-14 * scale ** 3:
        return [shift] * 3
    disc = cmath.sqrt((q / 2.0) ** 2 + (p / 3.0) ** 3)
    u1 = -q / 2.0 + disc
    u2 = -q / 2.0 - disc
    u3 = u1 if abs(u1) >= abs(u2) else u2
    cu = u3 ** (1.0 / 3.0)
    omega = complex(-0.5, math.sqrt(3.0) / 2.0)
    out = []
    for k in range(3):
        t = cu * omega ** k
        out.append(t - p / (3.0 * t) + shift)
    return out


def _sort_key(z: complex):
    return (round(z.real, 12), z.imag)


def poly_roots(coeffs) -> PolyRoots:
    """All roots of sum_k coeffs[k] x**k.

    Exact zero roots are split off first. Degrees up to 3 use closed forms,
    higher degrees the eigenvalues of the companion matrix. Isolated closed-form
    roots get a few Newton polishing steps; roots are sorted by (real part,
    imaginary part).
    """
    coeffs = [complex(c) for c in coeffs]
    is_real = all(c.imag == 0 for c in coeffs)
    degree = len(coeffs) - 1
    if degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    if coeffs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    # exact zero roots
    zeros = 0
    while coeffs[zeros] == 0:
        zeros += 1
    work = coeffs[zeros:]
    deg = len(work) - 1
    if deg == 0:
        raw = []
    elif deg == 1:
        raw = [-work[0] / work[1]]
    elif deg == 2:
        raw = _quadratic_roots(*work)
    elif deg == 3:
        raw = _cubic_roots(*work)
    else:
        dtype = float if is_real else complex
        lead = work[-1]
        companion = np.zeros((deg, deg), dtype=dtype)
        companion[1:, :-1] = np.eye(deg - 1)
        companion[:, -1] = [-(c / lead).real if is_real else -c / lead for c in work[:-1]]
        raw = list(np.linalg.eigvals(companion))
    raw = [complex(r) for r in raw]
    roots = [0j] * zeros
    for i, r in enumerate(raw):
        # Newton only for isolated closed-form roots; companion eigenvalues are
        # backward stable as a set and polishing single members of a cluster
        # would spoil that
        gap = min((abs(r - q) for j, q in enumerate(raw) if j != i), default=math.inf)
        if deg <= 3 and gap > 1e-2 * max(1.0, abs(r)):
            polished = _polish(work, r)
            if abs(polished - r) < 0.1 * gap:
                r = polished
        if is_real and abs(r.imag) <= 1e-13 * max(1.0, abs(r)):
            r = complex(r.real, 0.0)
        roots.append(r)
    roots.sort(key=_sort_key)
    residuals = tuple(float(abs(poly_eval(coeffs, r))) for r in roots)
    return PolyRoots(tuple(roots), residuals)
