"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the summary lines.
"""

import math

import numpy as np
import pytest
from scipy import integrate

from sturmian import published as pub
from sturmian.cli import main
from sturmian.errata import errata_report
from sturmian.matrix_elements import PotentialTerm, inm_closed_form, inm_quadrature, overlap_T, power_W
from sturmian.models import (
    DampedSpec,
    ReducedQuartic,
    anharmonic_table,
    bath_energy_from_shell,
    coupled_determinant_poly,
    coupled_spectrum,
    damped_coefficient,
    damped_coupling,
    damped_omega0,
    lattice_energy,
    perturbation_reference,
    quartic_excited_fixed,
    quartic_ground_closed_form,
)
from sturmian.secular_solver import generalized_sym_eig, solve_self_consistent
from sturmian.specfun import expint_ei, hermite as _h, poly_eval
from sturmian.sturmians import BasisSpec, BathSpec, beta, momentum_sturmian, normalization_N, sturmian_eval


def report(label, ok, detail=""):
    print(f"\n[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
    assert ok, f"{label}: {detail}"


def _l1_scale(a, b, k, delta, n, m):
    # size of the integrand; relative error is measured against this because
    # potential-weighted orthogonality makes many entries vanish exactly
    f = lambda x: abs(_h(n, a * x) * _h(m, b * x) * x ** k) * math.exp(-0.5 * delta * x * x)
    return integrate.quad(f, -np.inf, np.inf, limit=200)[0]


def test_criterion_01_oracle_equivalence():
    worst_rel, worst_zero = 0.0, 0.0
    for E in (0.5, 1.0, 2.0):
        for n in range(7):
            for m in range(7):
                bn, bm = beta(E, n), beta(E, m)
                args = (bn ** 0.25, bm ** 0.25)
                delta = math.sqrt(bn) + math.sqrt(bm)
                for k in range(5):
                    q = inm_quadrature(*args, k, delta, n, m)
                    c = inm_closed_form(*args, k, delta, n, m)
                    if (n + m + k) % 2:
                        worst_zero = max(worst_zero, abs(q), abs(c))
                    else:
                        worst_rel = max(worst_rel, abs(q - c) / _l1_scale(*args, k, delta, n, m))
    report("1 quadrature vs closed-form I_nm", worst_rel <= 1e-10 and worst_zero <= 1e-12,
           f"max rel {worst_rel:.2e}, max parity-zero {worst_zero:.2e}")


def _oracle(E, n, m, k):
    f = lambda x: sturmian_eval(E, n, x) * x ** k * sturmian_eval(E, m, x)
    return integrate.quad(f, -np.inf, np.inf, epsabs=1e-14, epsrel=1e-13, limit=200)[0]


def test_criterion_02_matrix_fixtures():
    spec = BasisSpec.first(1.0, 5)
    confirmed, mismatched, worst = 0, 0, 0.0
    for k, printed in pub.MATRICES.items():
        computed = overlap_T(spec) if k == 0 else power_W(spec, k)
        for i in range(5):
            for j in range(i, 5):
                if (i + j + k) % 2:
                    continue
                ref = _oracle(1.0, i, j, k)
                if abs(printed[i, j] - ref) <= 1e-10 * max(1.0, abs(ref)):
                    confirmed += 1
                    worst = max(worst, abs(computed[i, j] - printed[i, j]))
                else:
                    mismatched += 1
    named = [
        (overlap_T(spec)[0, 0], 1 / math.sqrt(2)),
        (power_W(spec, 3)[0, 1], 27 / 64),
        (power_W(spec, 4)[0, 0], 3 / (16 * math.sqrt(2))),
        (power_W(spec, 1)[0, 1], 3 / 8),
    ]
    named_ok = all(abs(a - b) <= 1e-10 for a, b in named)
    flagged = [e for e in errata_report() if e.verdict != "confirmed"]
    n4 = any(e.location == "normalization table" and "4" in e.quantity for e in flagged)
    report("2 printed matrix entries", worst <= 1e-10 and named_ok and n4 and len(flagged) >= mismatched,
           f"{confirmed} confirmed (max dev {worst:.1e}), {mismatched} printed entries disagree with the oracle")


def test_criterion_03_table2():
    q = anharmonic_table("quartic", 0.1, [1])[0]["ground"]
    c = anharmonic_table("cubic", 0.1, [1])[0]["ground"]
    dev = max(abs(anharmonic_table("quartic", a, [1])[0]["ground"] - quartic_ground_closed_form(a))
              for a in (0.01, 0.05, 0.1, 0.5))
    report("3 Table 2 N=1 and closed form", abs(q - 0.562709) <= 1e-5 and abs(c - 0.5) <= 1e-10 and dev <= 1e-9,
           f"quartic {q:.8f}, cubic {c:.12f}, closed-form dev {dev:.1e}")


def test_criterion_04_table3():
    target = [1.075, 3.375, 5.975, 8.875, 12.075]
    got = [quartic_excited_fixed(n, 1, 0.1, 0.5, 2.0) for n in range(5)]
    dev = max(abs(a - b) for a, b in zip(got, target))
    ddev = max(abs((float(r) - e) - float(d)) for r, e, d in zip(pub.TABLE3_REFERENCE, got, pub.TABLE3_DIFF_N1))
    report("4 Table 3 N=1 column", dev <= 1e-5 and ddev <= 1e-4, f"max dev {dev:.1e}, difference column dev {ddev:.1e}")


def test_criterion_05_table4_and_divergence():
    q = anharmonic_table("quartic", 1.0, [1], damped=True)[0]["ground"]
    c = anharmonic_table("cubic", 1.0, [1], damped=True)[0]["ground"]
    c45 = anharmonic_table("cubic", 1.0, [4, 5], damped=True)
    conv = abs(c45[0]["ground"] - c45[1]["ground"])
    bare = anharmonic_table("quartic", 0.1, [5, 10])
    div = abs(bare[1]["ground"] - bare[0]["ground"])
    report("5a Table 4 N=1 roots", abs(q - 0.622877) <= 1e-5 and abs(c - 0.5) <= 1e-10, f"x^4 {q:.8f}, x^3 {c:.12f}")
    report("5b damped x^3 converges (N=4 vs N=5)", conv <= 2e-5, f"|diff| {conv:.2e}")
    report("5c bare x^4 diverges (N=10 vs N=5)", div >= 1e-2,
           f"N=5 {bare[0]['ground']:.8f}, N=10 {bare[1]['ground']:.8f}, |diff| {div:.2e}")


def test_criterion_06_coupled():
    red = ReducedQuartic(1.0, 1.0, 1.0, 1.0, 1.0)
    n1 = coupled_spectrum(ReducedQuartic(1.0, 0.0, 1.0, 0.0, 1.0), 1).energies
    dev1 = max(abs(a - b) for a, b in zip(n1, pub.COUPLED_N1))
    report("6a coupled N=1 roots", dev1 <= 1e-5, f"max dev {dev1:.1e}")
    reached = False
    worst_res = 0.0
    for variant in ("printed", "consistent"):
        poly = coupled_determinant_poly(red, 2, variant)
        roots = coupled_spectrum(red, 2).energies if variant == "printed" else np.roots(poly[::-1])
        scale = max(abs(c) for c in poly)
        worst_res = max(worst_res, max(abs(poly_eval(list(poly), z)) / scale for z in roots))
        real = [z.real for z in roots if abs(z.imag) < 1e-9]
        reached |= all(any(abs(r - p) <= 1e-3 for r in real) for p in pub.COUPLED_N2_REAL)
    open_note = any(e.verdict == "open" and "two Sturmians" in e.location for e in errata_report())
    detail = "printed roots reached" if reached else "printed roots unreachable; degraded to residual check + open errata note"
    report("6b coupled N=2 roots", reached or (worst_res <= 1e-6 and open_note), f"{detail}, max residual {worst_res:.1e}")


def test_criterion_07_perturbation():
    v = perturbation_reference("quartic", 0.1)
    report("7 quartic perturbation value", abs(v - 0.46125) <= 1e-12, f"{v!r}")


def test_criterion_08_damped():
    worst_shell = 0.0
    for n in range(3):
        spec = DampedSpec(1.0, n + 0.5, n, 0.6 - 0.8j)
        for t in np.linspace(0, 10, 101):
            worst_shell = max(worst_shell, abs(damped_coefficient(spec, t) - spec.c0 * np.exp(-1j * spec.E * t)))
    worst_ode = 0.0
    for gamma, E, n in ((1.0, 1.0, 0), (0.5, 0.7, 1), (2.0, 1.7, 2)):
        spec = DampedSpec(gamma, E, n)
        w0, kap = damped_omega0(spec), damped_coupling(spec)

        def rhs(t, y):
            w = w0 + kap * math.exp(2 - 2 * math.exp(-2 * gamma * t))
            return [w * y[1], -w * y[0]]

        ts = np.linspace(0, 10, 51)
        sol = integrate.solve_ivp(rhs, (0, 10), [1.0, 0.0], t_eval=ts, method="DOP853", rtol=1e-13, atol=1e-14)
        for t, a, b in zip(ts, *sol.y):
            worst_ode = max(worst_ode, abs(damped_coefficient(spec, t) - complex(a, b)))
    worst_ei = 0.0
    for x in np.linspace(-20, -0.01, 60):
        # Ei(x) = -int_{-x}^inf e^-s / s ds
        ref = -integrate.quad(lambda s: math.exp(-s) / s, -x, np.inf, epsabs=0, epsrel=1e-13, limit=200)[0]
        worst_ei = max(worst_ei, abs(expint_ei(x) - ref) / abs(ref))
    report("8 damped oscillator", worst_shell <= 1e-10 and worst_ode <= 1e-8 and worst_ei <= 1e-10,
           f"on-shell {worst_shell:.1e}, ODE {worst_ode:.1e}, Ei rel {worst_ei:.1e}")


def test_criterion_09_bath():
    dev = 0.0
    for M in (1, 2, 3, 5):
        for n in range(3):
            dev = max(dev, abs(lattice_energy(M, n) - bath_energy_from_shell(BathSpec.lattice(M), n)))
    m1 = max(abs(lattice_energy(1, n) - (n + 0.25)) for n in range(4))
    report("9 bath lattice formula vs on-shell inversion", dev <= 1e-12 and m1 <= 1e-12,
           f"max |lattice - inversion| {dev:.3g}, M=1 dev from n+1/4 {m1:.1e}")


def test_criterion_10_momentum():
    k = np.linspace(-40, 40, 160001)
    worst = 0.0
    for E in (0.5, 1.0, 2.0):
        phi = [momentum_sturmian(E, n, k) for n in range(5)]
        x = np.linspace(-40, 40, 160001)
        psi = [sturmian_eval(E, n, x) for n in range(5)]
        for n in range(5):
            for m in range(5):
                pars = np.trapezoid(np.conj(phi[m]) * phi[n], k) / (2 * np.pi)
                direct = np.trapezoid(psi[m] * psi[n], x)
                worst = max(worst, abs(pars - direct))
                w = np.trapezoid(np.conj(phi[m]) * (k * k - 2 * E) * phi[n], k) / (2 * np.pi)
                target = -2 * beta(E, n) * normalization_N(E, n) if n == m else 0.0
                worst = max(worst, abs(w - target))
    report("10 momentum-space Parseval and weighted orthogonality", worst <= 1e-8, f"max dev {worst:.1e}")


def test_criterion_11_solver(tmp_path):
    rng = np.random.default_rng(12345)
    worst = 0.0
    for _ in range(40):
        d = int(rng.integers(1, 9))
        a = rng.normal(size=(d, d))
        a = a + a.T
        c = rng.normal(size=(d, d))
        b = c @ c.T + d * np.eye(d)
        vals, vecs = generalized_sym_eig(a, b)
        scale = np.linalg.norm(a) + np.linalg.norm(b) * max(1.0, np.max(np.abs(vals)))
        worst = max(worst, np.max(np.abs(a @ vecs - b @ vecs * vals)) / scale)
    terms = [PotentialTerm.power(4, 0.1)]
    stab = 0.0
    for idx in ((0,), (0, 1), (0, 1, 2)):
        r1 = solve_self_consistent(idx, terms, scan_points=400).energies
        r2 = solve_self_consistent(idx, terms, scan_points=800).energies
        stab = max(stab, max(abs(a - b) for a, b in zip(r1, r2)) if len(r1) == len(r2) else math.inf)
    same = True
    for argv in (["table3"], ["figures", "--figure", "2", "--points", "20"], ["table1", "--format", "json"]):
        a, b = tmp_path / "a", tmp_path / "b"
        main(argv + ["--out", str(a)])
        main(argv + ["--out", str(b)])
        same &= a.read_bytes() == b.read_bytes()
    report("11 solver properties and CLI determinism", worst <= 1e-10 and stab <= 1e-9 and same,
           f"eig residual {worst:.1e}, scan stability {stab:.1e}, byte-identical {same}")
