"""Values as they appear in print, kept verbatim for the audit.

Decimal values are stored as strings so the audit knows how many digits were
printed. Matrix displays are functions returning the full 5x5 matrix.
"""

from __future__ import annotations

import math

import numpy as np

_s = math.sqrt

# N_n * E^(3/2), n = 0..9
NORMALIZATION = [
    1 / (8 * _s(2)),
    9 / 8 * _s(3 / 2),
    25 / 8 * _s(5 / 2),
    49 / 8 * _s(7 / 2),
    243 / _s(2),
    121 / 8 * _s(11 / 2),
    169 / 8 * _s(13 / 2),
    225 / 8 * _s(15 / 2),
    289 / 8 * _s(17 / 2),
    361 / 8 * _s(19 / 2),
]


def _sym(upper):
    m = np.array(upper, dtype=float)
    return np.triu(m) + np.triu(m, 1).T


# Displays at E = 1; the E-dependence is E^(-(k+1)/2) for x^k.
MATRIX_EXPONENTS = {0: -0.5, 1: -1.0, 3: -2.0, 4: -2.5}

MATRICES = {
    0: _sym([
        [1 / _s(2), 0, -1 / 3 * _s(5 / 3), 0, 12 / 25 * _s(3 / 5)],
        [0, _s(3 / 2), 0, -21 / 25 * _s(3 / 5), 0],
        [0, 0, _s(5 / 2), 0, -132 / 343 * _s(30 / 7)],
        [0, 0, 0, _s(7 / 2), 0],
        [0, 0, 0, 0, 3 / _s(2)],
    ]),
    1: _sym([
        [0, 3 / 8, 0, -21 / 128 * _s(3), 0],
        [0, 0, 75 / 128 * _s(3), 0, -81 / (64 * _s(2))],
        [0, 0, 0, 1925 / 1728 * _s(5), 0],
        [0, 0, 0, 0, 508599 / 131072],
        [0, 0, 0, 0, 0],
    ]),
    3: _sym([
        [0, 27 / 64, 0, -343 * _s(3) / 2048, 0],
        [0, 0, 7425 * _s(5) / 2048, 0, -3159 / (512 * _s(2))],
        [0, 0, 0, 677425 * _s(5) / 41472, 0],
        [0, 0, 0, 0, 431831169 / 4194304],
        [0, 0, 0, 0, 0],
    ]),
    4: _sym([
        [3 / (16 * _s(2)), 0, 25 / 144 * _s(5 / 3), 0, -243 / 1000 * _s(3 / 5)],
        [0, 135 / 16 * _s(3 / 2), 0, 27783 / 2000 * _s(3 / 5), 0],
        [0, 0, 975 / 16 * _s(5 / 2), 0, 625725 / 9604 * _s(15 / 14)],
        [0, 0, 0, 3675 / 16 * _s(7 / 2), 0],
        [0, 0, 0, 0, 29889 / (16 * _s(2))],
    ]),
}


def damped_W3(E: float) -> np.ndarray:
    """Matrix of x^3 exp(-x^2), first five Sturmians, as printed."""
    a = 27 / (2 * (3 + 4 * E) ** 2.5)
    b = -_s(1.5) * 343 * (3 + 2 * E) / (2 * (7 + 8 * E) ** 3.5)
    c = -225 * (15 - 22 * E) / (4 * _s(1 / 6 + 4 * E / 45) * (15 + 8 * E) ** 3)
    d = 81 * (243 - 324 * E - 52 * E ** 2) / (4 * _s(2 + 8 * E / 9) * (9 + 4 * E) ** 4)
    e = 1225 * (525 - 940 * E + 316 * E ** 2) * _s(21) / (4 * _s(1 + 12 * E / 35) * (35 + 12 * E) ** 4)
    f = -250047 * (107163 - 207522 * E + 94356 * E ** 2 - 13816 * E ** 3) / (8 * (63 + 16 * E) ** 5.5)
    return _s(E) * _sym([
        [0, a, 0, b, 0],
        [0, 0, c, 0, d],
        [0, 0, 0, e, 0],
        [0, 0, 0, 0, f],
        [0, 0, 0, 0, 0],
    ])


def damped_W4(E: float) -> np.ndarray:
    """Matrix of x^4 exp(-x^2), first five Sturmians, as printed."""
    a = 3 / (4 * (1 + 2 * E) ** 2.5)
    b = 5 / (2 * (1 + 2 * E / 3) ** 3.5)
    c = -75 * (5 - 4 * E) / (8 * _s(0.5 + 3 * E / 5) * (5 + 6 * E) ** 3)
    d = 243 * (243 - 160 * E ** 2) / (16 * _s(1.5 + 5 * E / 3) * (9 + 10 * E) ** 4)
    e = -19845 * E * (21 - 4 * E) / (4 * _s(1 / 14 + 5 * E / 147) * (21 + 10 * E) ** 4)
    f = 75 * (25 - 80 * E + 104 * E ** 2) / (8 * _s(1 + 2 * E / 5) * (5 + 4 * E) ** 4)
    g = -2025 * (273375 - 899100 * E + 1219680 * E ** 2 - 92288 * E ** 3) / (
        16 * _s(1 / 3 + 14 * E / 135) * (45 + 14 * E) ** 5)
    h = 735 * E * (147 - 112 * E + 40 * E ** 2) / (4 * _s(1 + 2 * E / 7) * (7 + 2 * E) ** 5)
    i = 729 * (19683 - 69984 * E + 106272 * E ** 2 - 32256 * E ** 3 + 5248 * E ** 4) / (32 * (9 + 2 * E) ** 6.5)
    return _sym([
        [a, 0, c, 0, d],
        [0, b, 0, e, 0],
        [0, 0, f, 0, g],
        [0, 0, 0, h, 0],
        [0, 0, 0, 0, i],
    ])


# ground-state roots, alpha = 0.1
TABLE2_N = [1, 2, 3, 4, 5, 10]
TABLE2_CUBIC = ["0.500000", "0.014628", "0.112767", "0.351135", "0.102981", "1.27012"]
TABLE2_QUARTIC = ["0.562709", "0.562709", "0.562709", "0.562544", "0.562516", "0.533858"]

# excited quartic levels, alpha = 0.1, m = 1/2, omega = 2
TABLE3_N1 = ["1.07500", "3.37500", "5.97500", "8.87500", "12.0750"]
TABLE3_N2 = ["1.07500", "3.37500", "5.97500", "7.00152", "9.30093"]
TABLE3_REFERENCE = ["1.06529", "3.30687", "5.74795", "8.35268", "11.09860"]
TABLE3_DIFF_N1 = ["-0.00971", "-0.06813", "-0.22705", "-0.52232", "-0.97640"]
TABLE3_DIFF_N2 = ["-0.00971", "-0.06813", "-0.22705", "1.35116", "1.79767"]
TABLE3_PERTURBATIVE = "0.4900"

# Gaussian-damped ground states, alpha = 1
TABLE4_N = [1, 2, 3, 4, 5]
TABLE4_CUBIC = ["0.500000", "0.495852", "0.491822", "0.491282", "0.491282"]
TABLE4_QUARTIC = ["0.622877", "0.622877", "0.622878", "0.622877", "0.622878"]

# perturbation theory at m = hbar = omega = 1, alpha = 0.1
PERTURBATIVE_CUBIC = "0.3625"
PERTURBATIVE_QUARTIC = "0.46125"

# reduced quartic with gbar = c2 = c4 = 1 (N = 1) and all c_i = 1 (N = 2)
COUPLED_N1 = [complex(-0.669498), complex(0.209749, 0.222168), complex(0.209749, -0.222168)]
COUPLED_N1_DIGITS = 6
COUPLED_N2_REAL = [-9.91107, -1.51155]
COUPLED_N2_COMPLEX = [complex(0.129506, 0.435961), complex(0.537995, 1.32394)]
