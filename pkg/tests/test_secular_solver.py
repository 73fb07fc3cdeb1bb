import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, optimize

from sturmian.matrix_elements import PotentialTerm
from sturmian.secular_solver import (
    NotPositiveDefiniteError,
    assemble,
    generalized_sym_eig,
    jacobi_eigh,
    secular_det,
    secular_matrix,
    solve_fixed_reference,
    solve_self_consistent,
)
from sturmian.sturmians import BasisSpec, beta, normalization_N, sturmian_eval

S2 = math.sqrt(2.0)


def _random_spd_pair(rng, n):
    a = rng.standard_normal((n, n))
    a = a + a.T
    m = rng.standard_normal((n, n))
    b = m @ m.T + n * np.eye(n)
    return a, b


def test_assemble_quartic_single():
    system = assemble(BasisSpec(1.0, (0,)), [PotentialTerm.power(4, 0.1)])
    assert system.diagonal[0] == pytest.approx(-3 / (8 * S2), rel=1e-14)
    assert system.perturbation[0, 0] == pytest.approx(0.1 * 3 / (16 * S2), rel=1e-13)
    assert system.overlap[0, 0] == pytest.approx(1 / S2, rel=1e-14)
    assert system.size == 1


def test_assemble_empty_and_on_shell():
    system = assemble(BasisSpec(1.5, (1,)), [])
    assert np.all(system.perturbation == 0)
    assert system.diagonal[0] == 0.0
    with pytest.raises(TypeError):
        assemble(BasisSpec(1.0, (0,)), ["x^4"])


def test_jacobi_simple():
    vals, vecs = jacobi_eigh(np.diag([3.0, 1.0]))
    np.testing.assert_array_equal(vals, [1.0, 3.0])
    with pytest.raises(ValueError):
        jacobi_eigh(np.ones((2, 3)))


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(3)
    for n in range(1, 9):
        a, _ = _random_spd_pair(rng, n)
        vals, vecs = jacobi_eigh(a)
        np.testing.assert_allclose(vals, np.linalg.eigvalsh(a), atol=1e-12)
        np.testing.assert_allclose(vecs.T @ vecs, np.eye(n), atol=1e-13)


def test_generalized_trivial():
    vals, _ = generalized_sym_eig(np.diag([3.0, 1.0]), np.eye(2))
    np.testing.assert_allclose(vals, [1.0, 3.0])
    b = np.array([[2.0, 0.3], [0.3, 1.0]])
    vals, _ = generalized_sym_eig(b, b)
    np.testing.assert_allclose(vals, [1.0, 1.0], atol=1e-14)


def test_generalized_not_positive_definite():
    with pytest.raises(NotPositiveDefiniteError):
        generalized_sym_eig(np.eye(2), np.diag([1.0, -1.0]))
    with pytest.raises(ValueError):
        generalized_sym_eig(np.eye(2), np.eye(3))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2 ** 32 - 1))
def test_generalized_residuals(n, seed):
    a, b = _random_spd_pair(np.random.default_rng(seed), n)
    vals, vecs = generalized_sym_eig(a, b)
    assert np.all(np.diff(vals) >= 0)
    for j in range(n):
        c = vecs[:, j]
        assert np.linalg.norm(a @ c - vals[j] * b @ c) <= 1e-10 * np.linalg.norm(c) * max(1.0, np.linalg.norm(a))
    np.testing.assert_allclose(vecs.T @ b @ vecs, np.eye(n), atol=1e-10)


def test_fixed_reference_table_value():
    # m = 1/2, omega = 2 in mass-weighted form; E = omega/2
    terms = [PotentialTerm.harmonic(3.0), PotentialTerm.power(4, 0.4)]
    res = solve_fixed_reference(assemble(BasisSpec(1.0, (0,)), terms))
    assert res.energies[0] == pytest.approx(1.075, abs=1e-12)
    assert res.mode == "fixed_reference"


def test_fixed_reference_alpha_zero():
    for E in (0.5, 1.5, 2.5):
        res = solve_fixed_reference(assemble(BasisSpec(E, (int(E - 0.5),)), []))
        assert res.energies[0] == E


def test_fixed_reference_pair_factorizes():
    E = 3.5
    terms = [PotentialTerm.power(4, 0.1)]
    pair = solve_fixed_reference(assemble(BasisSpec(E, (3, 4)), terms)).energies
    singles = sorted(solve_fixed_reference(assemble(BasisSpec(E, (n,)), terms)).energies[0] for n in (3, 4))
    np.testing.assert_allclose(sorted(pair), singles, rtol=1e-12)


def test_fixed_reference_residuals():
    res = solve_fixed_reference(assemble(BasisSpec.first(0.8, 6), [PotentialTerm.power(3, 0.2),
                                                                   PotentialTerm.power(4, 0.05)]))
    assert max(res.diagnostics["residuals"]) <= 1e-9


def test_secular_matrix_errors():
    with pytest.raises(ValueError):
        secular_matrix((0,), [], 0.0)


def test_secular_det_single():
    E = 0.7
    d = secular_det((0,), [PotentialTerm.power(4, 0.1)], E)
    b = beta(E, 0)
    expected = (1 - b) * normalization_N(E, 0) + 0.1 * 3 / (16 * S2) * E ** -2.5
    assert d == pytest.approx(expected, rel=1e-13)


def test_self_consistent_quartic_single():
    res = solve_self_consistent((0,), [PotentialTerm.power(4, 0.1)])
    cubic = np.roots([8, 0, -2, -0.3])
    positive = max(r.real for r in cubic if abs(r.imag) < 1e-12)
    assert res.energies[0] == pytest.approx(positive, abs=1e-12)


def test_self_consistent_cubic_single_on_shell():
    res = solve_self_consistent((0,), [PotentialTerm.power(3, 0.1)])
    assert res.energies[0] == pytest.approx(0.5, abs=1e-12)


def _quad_det(N, k, alpha, E):
    """Secular determinant from adaptive-quadrature matrix elements."""
    mat = np.zeros((N, N))
    for n in range(N):
        for m in range(N):
            f = lambda x: sturmian_eval(E, n, x) * alpha * x ** k * sturmian_eval(E, m, x)
            mat[n, m] = integrate.quad(f, -np.inf, np.inf, epsabs=1e-14, epsrel=1e-13, limit=200)[0]
        mat[n, n] += (1 - beta(E, n)) * normalization_N(E, n)
    return np.linalg.det(mat)


def test_self_consistent_against_independent_oracle():
    res = solve_self_consistent(range(2), [PotentialTerm.power(3, 0.1)])
    oracle = optimize.brentq(lambda e: _quad_det(2, 3, 0.1, e), 0.45, 0.52, xtol=1e-13)
    assert res.energies[0] == pytest.approx(oracle, abs=1e-9)


def test_self_consistent_scan_density():
    terms = [PotentialTerm.power(3, 0.1)]
    for N in (3, 4, 5):
        r1 = solve_self_consistent(range(N), terms, scan_points=400).energies
        r2 = solve_self_consistent(range(N), terms, scan_points=800).energies
        assert len(r1) == len(r2)
        np.testing.assert_allclose(r1, r2, atol=1e-9)


def test_self_consistent_diagnostics():
    res = solve_self_consistent((0,), [PotentialTerm.power(4, 0.1)], bracket=(0.05, 0.3))
    assert len(res.energies) == 0
    assert "message" in res.diagnostics
    res = solve_self_consistent((0, 1), [PotentialTerm.power(4, 0.1)])
    assert len(res.diagnostics["brackets"]) == len(res.energies)
    for (lo, hi), r in zip(res.diagnostics["brackets"], res.energies):
        assert lo <= r <= hi


@pytest.mark.parametrize("bracket", [(0.01, 2.0), (1.0, 0.5), (-1, 1)])
def test_self_consistent_bad_bracket(bracket):
    with pytest.raises(ValueError):
        solve_self_consistent((0,), [], bracket=bracket)


def test_self_consistent_harmonic_levels():
    res = solve_self_consistent(range(3), [], bracket=(0.05, 3.0))
    np.testing.assert_allclose(res.energies, [0.5, 1.5, 2.5], atol=1e-10)
