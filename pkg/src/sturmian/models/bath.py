"""Energies of a particle in a bath of harmonic oscillators."""

from __future__ import annotations

import math

from scipy.optimize import brentq

from ..sturmians import BathSpec, ReducedOscillator, bath_reduce, beta_tilde


def _reduced(spec) -> ReducedOscillator:
    return spec if isinstance(spec, ReducedOscillator) else bath_reduce(spec)


def bath_energy(spec, n: int) -> float:
    """(n + 1/2) / sqrt(gbar) - c2 + c1^2 / (4 gbar), the on-shell level of the bath Sturmians."""
    if n < 0:
        raise ValueError("n must be non-negative")
    red = _reduced(spec)
    return (n + 0.5) / math.sqrt(red.gbar) - red.c2 + red.c1 ** 2 / (4.0 * red.gbar)


def bath_energy_from_shell(spec, n: int) -> float:
    """Solve beta_tilde_n(E) = 1 numerically.

    The secular problem in bath Sturmians is diagonal, so its self-consistent
    roots are exactly the on-shell energies. With beta_tilde as defined the
    root is (n + 1/2) / sqrt(gbar) + c2 - c1^2 / (4 gbar); the constant shift
    enters with the opposite sign to :func:`bath_energy`.
    """
    red = _reduced(spec)
    shift = red.c2 - red.c1 ** 2 / (4.0 * red.gbar)
    lo = shift + 1e-12 * max(1.0, abs(shift))
    hi = shift + (n + 0.5) * (1.0 + 1.0 / math.sqrt(red.gbar))
    while beta_tilde(red, hi, n) < 1.0:
        hi = shift + 2.0 * (hi - shift)
    return brentq(lambda e: beta_tilde(red, e, n) - 1.0, lo, hi, xtol=1e-15, rtol=1e-15)


def bath_energy_direct(spec, n: int) -> float:
    """Exact level of V = sum g_i (x - x_i)^2 / 2 by completing the square.

    V = gbar (x - c1/gbar)^2 / 2 + c2 - c1^2 / (2 gbar), so
    E_n = sqrt(gbar) (n + 1/2) + c2 - c1^2 / (2 gbar).
    """
    red = _reduced(spec)
    return math.sqrt(red.gbar) * (n + 0.5) + red.c2 - red.c1 ** 2 / (2.0 * red.gbar)


def lattice_energy(M: int, n: int, origin: int = 1) -> float:
    """Closed-form bath_energy for M unit couplings at x_i = i (origin=1) or x_i = i - 1 (origin=0)."""
    if M < 1:
        raise ValueError("M must be positive")
    if origin == 1:
        return (n + 0.5) / math.sqrt(M) - M * (M + 1) * (2 * M + 1) / 12.0 + M * (M + 1) ** 2 / 16.0
    if origin == 0:
        return (n + 0.5) / math.sqrt(M) - M * (M - 1) * (2 * M - 1) / 12.0 + M * (M - 1) ** 2 / 16.0
    raise ValueError("origin must be 0 or 1")


__all__ = ["BathSpec", "bath_energy", "bath_energy_from_shell", "bath_energy_direct", "lattice_energy"]
