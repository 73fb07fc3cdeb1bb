"""Harmonic-oscillator Sturmian basis functions.

Units are mass weighted with hbar = m = 1, so the base potential is
V0 = x**2 / 2. A Sturmian of index n at fixed energy E solves

    -psi''/2 + beta_n x**2 psi / 2 = E psi,   beta_n = (E / (n + 1/2))**2,

i.e. the coupling strength of V0 is tuned so that level n sits at E.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .specfun import hermite

__all__ = [
    "BasisSpec",
    "BathSpec",
    "ReducedOscillator",
    "beta",
    "sturmian_prefactor",
    "sturmian_eval",
    "sturmian_eval_multi",
    "normalization_N",
    "momentum_sturmian",
    "bath_reduce",
    "bath_centre",
    "bath_shifted_energy",
    "beta_tilde",
    "bath_sturmian_eval",
]


def _check_energy(E: float) -> float:
    E = float(E)
    if not E > 0.0 or not math.isfinite(E):
        raise ValueError(f"Sturmian energy must be positive and finite, got {E}")
    return E


@dataclass(frozen=True)
class BasisSpec:
    """A Sturmian basis: the shared energy E and an ascending list of indices.

    For ``dimension > 1`` each index is a tuple of per-axis quantum numbers.
    """

    energy: float
    indices: tuple = field(default=(0,))
    dimension: int = 1

    def __post_init__(self):
        _check_energy(self.energy)
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        idx = tuple(self.indices)
        if not idx:
            raise ValueError("basis must contain at least one index")
        if self.dimension == 1:
            idx = tuple(int(n) for n in idx)
            if any(n < 0 for n in idx):
                raise ValueError("indices must be non-negative")
        else:
            idx = tuple(tuple(int(v) for v in n) for n in idx)
            if any(len(n) != self.dimension or min(n) < 0 for n in idx):
                raise ValueError(f"each index must be a {self.dimension}-tuple of non-negative ints")
        if list(idx) != sorted(set(idx)):
            raise ValueError("indices must be distinct and ascending")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def first(cls, energy: float, size: int) -> "BasisSpec":
        """Basis made of indices 0 .. size-1."""
        return cls(energy, tuple(range(size)))

    def __len__(self) -> int:
        return len(self.indices)

    def with_energy(self, energy: float) -> "BasisSpec":
        return BasisSpec(energy, self.indices, self.dimension)

    def total(self, n) -> int:
        return n if self.dimension == 1 else sum(n)

    def betas(self) -> np.ndarray:
        return np.array([beta(self.energy, self.total(n), self.dimension) for n in self.indices])


def beta(E: float, n: int, dimension: int = 1) -> float:
    """Effective coupling (E / (n + d/2))**2 that places level n at energy E."""
    E = _check_energy(E)
    if n < 0:
        raise ValueError("quantum number must be non-negative")
    return (E / (n + 0.5 * dimension)) ** 2


def sturmian_prefactor(n: int) -> float:
    """pi^(-1/4) (n!)^(-1/2) 2^(-n/2)."""
    return math.pi ** -0.25 / math.sqrt(math.factorial(n) * 2.0 ** n)


def sturmian_eval(E: float, n: int, x):
    """Position-space Sturmian psi_n(x) at energy E (scalar or array ``x``)."""
    b = beta(E, n)
    a = b ** 0.25
    x = np.asarray(x, dtype=float)
    val = sturmian_prefactor(n) * hermite(n, a * x) * np.exp(-0.5 * math.sqrt(b) * x * x)
    return float(val) if val.ndim == 0 else val


def sturmian_eval_multi(E: float, n, x) -> float:
    """Product Sturmian in d dimensions.

    The coupling depends only on the total quantum number, with
    E = sqrt(beta) (n_total + d/2).
    """
    n = tuple(int(v) for v in n)
    x = tuple(float(v) for v in x)
    if len(n) != len(x):
        raise ValueError(f"index has {len(n)} components but point has {len(x)}")
    d = len(n)
    b = beta(E, sum(n), d)
    a = b ** 0.25
    val = math.exp(-0.5 * math.sqrt(b) * sum(v * v for v in x))
    for ni, xi in zip(n, x):
        val *= sturmian_prefactor(ni) * hermite(ni, a * xi)
    return val


def normalization_N(E: float, n: int) -> float:
    """Potential-weighted norm <psi_n | x^2/2 | psi_n> = (2n+1)^(5/2) / (8 sqrt 2) E^(-3/2)."""
    E = _check_energy(E)
    if n < 0:
        raise ValueError("quantum number must be non-negative")
    return (2 * n + 1) ** 2.5 / (8.0 * math.sqrt(2.0)) * E ** -1.5


def momentum_sturmian(E: float, n: int, k):
    """Fourier transform phi_n(k) = int exp(i k x) psi_n(x) dx.

    With a = beta_n^(1/4) the transform is
    i^n sqrt(2 pi) / a * prefactor * H_n(k / a) * exp(-k^2 / (2 a^2)).
    Even n gives real values, odd n purely imaginary ones.
    """
    b = beta(E, n)
    a = b ** 0.25
    k = np.asarray(k, dtype=float)
    mag = (
        sturmian_prefactor(n)
        * math.sqrt(2.0 * math.pi)
        / a
        * hermite(n, k / a)
        * np.exp(-0.5 * k * k / (a * a))
    )
    val = (1j ** n) * mag
    return complex(val) if np.ndim(val) == 0 else val


@dataclass(frozen=True)
class BathSpec:
    """Oscillators at ``positions`` with coupling constants ``couplings``."""

    positions: tuple[float, ...]
    couplings: tuple[float, ...]

    def __post_init__(self):
        pos = tuple(float(v) for v in self.positions)
        g = tuple(float(v) for v in self.couplings)
        if not pos:
            raise ValueError("bath must contain at least one oscillator")
        if len(pos) != len(g):
            raise ValueError("positions and couplings must have the same length")
        if any(v <= 0 for v in g):
            raise ValueError("couplings must be positive")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "couplings", g)

    @classmethod
    def lattice(cls, M: int, coupling: float = 1.0) -> "BathSpec":
        """M equal oscillators at x_i = i, i = 1..M."""
        return cls(tuple(range(1, M + 1)), (coupling,) * M)


@dataclass(frozen=True)
class ReducedOscillator:
    """V = gbar x^2/2 - c1 x + c2 for a bath of oscillators."""

    gbar: float
    c1: float
    c2: float


def bath_reduce(spec: BathSpec) -> ReducedOscillator:
    g = np.asarray(spec.couplings)
    x = np.asarray(spec.positions)
    gbar = float(g.sum())
    if gbar <= 0:
        raise ValueError("total coupling must be positive")
    return ReducedOscillator(gbar, float(np.dot(g, x)), float(0.5 * np.dot(g, x * x)))


def bath_centre(red: ReducedOscillator) -> float:
    """Shift c1 / (2 gbar) used by the bath Sturmians."""
    return red.c1 / (2.0 * red.gbar)


def bath_shifted_energy(red: ReducedOscillator, E: float) -> float:
    """E - c2 + c1^2 / (4 gbar)."""
    return E - red.c2 + red.c1 ** 2 / (4.0 * red.gbar)


def beta_tilde(spec: BathSpec | ReducedOscillator, E: float, n: int) -> float:
    """Bath coupling gbar * ((E - c2 + c1^2/(4 gbar)) / (n + 1/2))^2."""
    red = spec if isinstance(spec, ReducedOscillator) else bath_reduce(spec)
    shifted = bath_shifted_energy(red, E)
    if shifted <= 0:
        raise ValueError(f"shifted bath energy must be positive, got {shifted}")
    if n < 0:
        raise ValueError("quantum number must be non-negative")
    return red.gbar * (shifted / (n + 0.5)) ** 2


def bath_sturmian_eval(spec: BathSpec | ReducedOscillator, E: float, n: int, x):
    """Bath Sturmian: the single-centre form with beta -> beta_tilde, centred at c1/(2 gbar)."""
    red = spec if isinstance(spec, ReducedOscillator) else bath_reduce(spec)
    b = beta_tilde(red, E, n)
    y = np.asarray(x, dtype=float) - bath_centre(red)
    val = sturmian_prefactor(n) * hermite(n, b ** 0.25 * y) * np.exp(-0.5 * math.sqrt(b) * y * y)
    return float(val) if val.ndim == 0 else val
