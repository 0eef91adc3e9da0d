import numpy as np
import pytest

from cartan import AlgebraKind
from connection import (
    Connection, ConnectionParams, SubdominantSolver, e_derivative, exact_action, integrate, psi_k,
    rotated_family, subdominant_solution,
)
from core.errors import DomainError, IntegrationError
from repkit import maximal_eigenpair, normalized_family, omega_h_twist, rep_A_standard

XS = [3.0, 2.5, 2.0, 1.5, 1.0, 0.5]


@pytest.fixture
def a1_rep():
    return rep_A_standard(1)


def test_params_validation(A2):
    with pytest.raises(DomainError):
        ConnectionParams(kind=A2, M=0.0)
    with pytest.raises(DomainError):
        ConnectionParams(kind=A2, M=1.0, ell=(0.1,))
    params = ConnectionParams(kind=A2, M=1.0, E=2)
    assert params.E == 2 + 0j
    assert params.ell == (0j, 0j)
    assert params.ell_is_zero
    assert params.with_E(1.5).E == 1.5
    assert not params.with_ell((0.1, 0.2)).ell_is_zero


def test_exact_action_derivative_is_root():
    M, h, E, x, d = 1.0, 3, 2.0, 3.0, 1e-5
    derivative = (exact_action(x + d, M, h, E) - exact_action(x - d, M, h, E)) / (2 * d)
    assert derivative == pytest.approx(25.0 ** (1.0 / 3.0), rel=1e-8)
    with pytest.raises(DomainError):
        exact_action(1.0, M, h, 5.0)
    with pytest.raises(DomainError):
        exact_action(-1.0, M, h, 0.0)


def test_ground_state_of_harmonic_oscillator(A1, a1_rep):
    """E = 1: Psi = e^{-x^2/2} (1, x) with unit asymptotic normalisation"""
    params = ConnectionParams(kind=A1, M=1.0, E=1.0, tol=1e-11)
    trace = subdominant_solution(a1_rep, params, XS + [0.0])
    for x, value in trace.samples:
        x = x.real
        expected = np.exp(-x ** 2 / 2) * np.array([1.0, x])
        np.testing.assert_allclose(value, expected, rtol=1e-7, atol=1e-9)


def test_first_excited_state_vanishes_at_origin(A1, a1_rep):
    params = ConnectionParams(kind=A1, M=1.0, E=3.0, tol=1e-11)
    trace = subdominant_solution(a1_rep, params, XS + [0.0])
    for x, value in trace.samples:
        x = x.real
        expected = np.exp(-x ** 2 / 2) * np.array([x, x ** 2 - 1.0])
        np.testing.assert_allclose(value, expected, rtol=1e-7, atol=1e-9)


def test_solution_satisfies_the_ode(A2):
    family = normalized_family(A2)
    params = ConnectionParams(kind=A2, M=1.0, E=0.5 + 0.2j, ell=(0.1, 0.25), tol=1e-11)
    rep = family.reps[1]
    d = 1e-4
    xs = [1.0 + d, 1.0, 1.0 - d]
    trace = subdominant_solution(rep, params, xs, family.eigen[1])
    (_, plus), (_, mid), (_, minus) = trace.samples
    conn = Connection(rep, params)
    assert conn.residual(1.0, mid, (plus - minus) / (2 * d)) < 1e-6


def test_sample_validation(A1, a1_rep):
    params = ConnectionParams(kind=A1, M=1.0, ell=(0.3,))
    solver = SubdominantSolver(a1_rep, params)
    with pytest.raises(DomainError):
        solver.solve([-1.0])
    with pytest.raises(DomainError):
        solver.solve([0.0])
    with pytest.raises(DomainError):
        integrate(a1_rep, params, 1.0, -1.0, np.ones(2))


def test_psi_k_zero_is_the_subdominant_solution(A2, params_A2):
    family = normalized_family(A2)
    rep, pair = family.reps[1], family.eigen[1]
    base = subdominant_solution(rep, params_A2, [1.0, 0.5], pair)
    rotated = psi_k(rep, params_A2, 0, [1.0, 0.5], pair)
    for (_, a), (_, b) in zip(base.samples, rotated.samples):
        np.testing.assert_allclose(a, b, rtol=1e-10)


def test_psi_k_sector_limit(A2, params_A2):
    rep = normalized_family(A2).reps[1]
    with pytest.raises(DomainError):
        psi_k(rep, params_A2, 2, [1.0])


def test_a1_wronskian_is_constant(A1, a1_rep):
    params = ConnectionParams(kind=A1, M=1.0, E=0.7, tol=1e-11)
    pair = maximal_eigenpair(a1_rep).maximal
    xs = [2.0, 1.0, 0.4]
    minus = psi_k(a1_rep, params, -0.5, xs, pair)
    plus = psi_k(a1_rep, params, 0.5, xs, pair)
    dets = [np.linalg.det(np.column_stack([a, b])) for (_, a), (_, b) in zip(minus.samples, plus.samples)]
    np.testing.assert_allclose(dets, dets[0], rtol=1e-8)
    assert abs(dets[0]) > 1e-3


def test_rotated_family_is_independent(A3):
    family = normalized_family(A3)
    params = ConnectionParams(kind=A3, M=1.0, E=0.3)
    matrix, smallest = rotated_family(family.reps[1], params, 2, 1.0, family.eigen[1])
    assert matrix.shape == (4, 2)
    assert smallest > 1e-3


def test_e_derivative_converges(A1, a1_rep):
    params = ConnectionParams(kind=A1, M=1.0, E=1.0, tol=1e-12)
    coarse = e_derivative(a1_rep, params, [1.0], dE=1e-3)
    fine = e_derivative(a1_rep, params, [1.0], dE=5e-4)
    np.testing.assert_allclose(coarse[0][1], fine[0][1], rtol=1e-4)


def test_tolerance_controls_accuracy(A1, a1_rep):
    exact = np.exp(-0.5) * np.array([1.0, 1.0])
    errors = []
    for tol in (1e-7, 1e-11):
        params = ConnectionParams(kind=A1, M=1.0, E=1.0, tol=tol)
        value = subdominant_solution(a1_rep, params, [1.0]).samples[0][1]
        errors.append(np.max(np.abs(value - exact)))
    assert errors[1] < errors[0] or errors[1] < 1e-12


def test_matching_radius_does_not_move_the_solution(A2):
    family = normalized_family(A2)
    params = ConnectionParams(kind=A2, M=1.0, E=0.5, ell=(0.1, 0.25), tol=1e-10)
    rep, pair = family.reps[1], family.eigen[1]
    base = subdominant_solution(rep, params, [1.0, 0.5], pair)
    doubled = subdominant_solution(rep, params.with_x_match(2.0 * base.meta['x_match']), [1.0, 0.5], pair)
    assert doubled.meta['x_match'] == pytest.approx(2.0 * base.meta['x_match'])
    for (_, a), (_, b) in zip(base.samples, doubled.samples):
        assert np.linalg.norm(a - b) / np.linalg.norm(a) < 100 * params.tol


def test_a1_rotated_solution_matches_closed_form(A1, a1_rep):
    """Psi_k(x, E) = omega^{-kH} Psi(omega^k x, 1) with Omega^k E = 1"""
    k = 0.25
    params = ConnectionParams(kind=A1, M=1.0, E=np.exp(-0.25j * np.pi), tol=1e-11)
    pair = maximal_eigenpair(a1_rep).maximal
    xs = [2.0, 1.0, 0.5]
    trace = psi_k(a1_rep, params, k, xs, pair)
    back = omega_h_twist(a1_rep, 1.0, -k)
    rot = np.exp(0.125j * np.pi)
    for x, value in trace.samples:
        y = rot * x.real
        expected = back @ (np.exp(-y ** 2 / 2) * np.array([1.0, y]))
        np.testing.assert_allclose(value, expected, rtol=1e-7, atol=1e-9)


def test_solution_approaches_leading_asymptotics(A1, a1_rep):
    params = ConnectionParams(kind=A1, M=1.0, E=1.0, tol=1e-11)
    solver = SubdominantSolver(a1_rep, params)
    deviations = []
    for x in (2.0, 4.0, 6.0):
        value = solver.solve([x]).samples[0][1]
        lead = solver.leading_term(x, 1.0)
        deviations.append(np.linalg.norm(value - lead) / np.linalg.norm(lead))
    assert deviations[0] > deviations[1] > deviations[2]
    assert deviations[2] < 1e-2

    z = solver.psi_to_z(6.0, 1.0, solver.solve([6.0]).samples[0][1])
    assert np.linalg.norm(z - solver.psi) / np.linalg.norm(solver.psi) < 2e-2

    trace = solver.solve([1.0])
    assert trace.meta['leading_deviation'] < 1e-2


def test_integration_failure_reports_last_step(A1, a1_rep, monkeypatch):
    from connection import integrator

    class Stalled:
        status = -1
        message = 'Required step size is less than spacing between numbers.'
        t = np.array([0.0, 0.125, 0.25])

    monkeypatch.setattr(integrator, 'solve_ivp', lambda *args, **kwargs: Stalled())
    params = ConnectionParams(kind=A1, M=1.0, E=1.0)
    with pytest.raises(IntegrationError) as excinfo:
        integrate(a1_rep, params, 2.0, 1.0, np.ones(2), [1.5])
    assert excinfo.value.location == pytest.approx(1.75)
