"""Caldirola-Kanai damped oscillator in a single Sturmian.

The time-dependent mass turns the harmonic term into a perturbation
V'(t) = xi(t) x^2/2 with xi(t) = exp(2 - 2 exp(-2 gamma t)) in the rescaled
time. Each coefficient then only picks up a phase,
c_n(t) = c_n(0) exp(-i omega0 t - i omega(t)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..specfun import expint_ei
from ..sturmians import beta, normalization_N, sturmian_eval


@dataclass(frozen=True)
class DampedSpec:
    gamma: float
    E: float
    n: int = 0
    c0: complex = 1.0 + 0.0j

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError("gamma must be positive")
        if not self.E > 0:
            raise ValueError("E must be positive")
        if self.n < 0:
            raise ValueError("n must be non-negative")


def xi(t, gamma: float):
    """exp(2 - 2 exp(-2 gamma t))."""
    return np.exp(2.0 - 2.0 * np.exp(-2.0 * gamma * np.asarray(t, dtype=float)))


def damped_coupling(spec: DampedSpec) -> float:
    """(1 - beta_n) N_n / T_nn, with T_nn = beta_n^(-1/4)."""
    b = beta(spec.E, spec.n)
    return (1.0 - b) * normalization_N(spec.E, spec.n) * b ** 0.25


def damped_omega0(spec: DampedSpec) -> float:
    return damped_coupling(spec) + spec.E


def damped_phase(spec: DampedSpec, t: float) -> float:
    """omega(t) = coupling * e^2/(2 gamma) * (Ei(-2) - Ei(-2 exp(-2 gamma t)))."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return 0.0
    g = spec.gamma
    arg = -2.0 * math.exp(-2.0 * g * t)
    if arg == 0.0:
        raise ValueError("t too large for the exponential integral")
    return damped_coupling(spec) * math.e ** 2 / (2.0 * g) * (expint_ei(-2.0) - expint_ei(arg))


def damped_coefficient(spec: DampedSpec, t: float) -> complex:
    """c_n(t) = c_n(0) exp(-i omega0 t - i omega(t))."""
    phase = damped_omega0(spec) * t + damped_phase(spec, t)
    return complex(spec.c0) * complex(math.cos(phase), -math.sin(phase))


def damped_field(gamma: float = 1.0, E: float = 1.0, x=None, t=None, n: int = 0):
    """Re and Im of c_n(t) psi_n(x) with c_n(0) = 1, shaped (len(t), len(x)).

    Defaults: 200 samples each of t in [0, 10] and x in [0, 5].
    """
    spec = DampedSpec(gamma, E, n)
    x = np.linspace(0.0, 5.0, 200) if x is None else np.asarray(x, dtype=float)
    t = np.linspace(0.0, 10.0, 200) if t is None else np.asarray(t, dtype=float)
    c = np.array([damped_coefficient(spec, float(tt)) for tt in t])
    field = c[:, None] * np.atleast_1d(sturmian_eval(E, n, x))[None, :]
    return field.real, field.imag
