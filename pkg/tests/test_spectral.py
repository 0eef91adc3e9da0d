import logging

import numpy as np
import pytest

import shooting_oracle
from cartan import AlgebraKind
from connection import ConnectionParams
from core.errors import DomainError, NonGenericError
from repkit import normalized_family, rep_A_standard
from spectral import (
    QFunctions, build_qtable, certify_zero_count, check_resonance, find_q_zeros, find_zeros, frobenius_basis,
    integer_degree, q_decay_fit, q_functions, qq_residual, quasifatta_residuals, series_residual, weyl_data,
    winding_number, winding_number_of_path,
)


def a1_params(M, ell, tol=1e-11):
    return ConnectionParams(kind=AlgebraKind('A', 1), M=M, E=0.0, ell=ell, tol=tol)


# zero search on closed-form functions

def test_find_zeros_of_polynomial():
    zeros = find_zeros(lambda E: (E - 1.0) * (E - 2.5) * (E + 3.0), (0.0, 4.0), grid_points=41)
    assert [z.E.real for z in zeros] == pytest.approx([1.0, 2.5], abs=1e-10)
    assert all(z.refined for z in zeros)


def test_find_zeros_respects_max_count_and_phase():
    f = lambda E: 1j * np.sin(E)
    zeros = find_zeros(f, (1.0, 10.0), grid_points=91, max_count=2)
    assert [z.E.real for z in zeros] == pytest.approx([np.pi, 2 * np.pi], abs=1e-10)


def test_empty_window():
    assert find_zeros(np.sin, (2.0, 2.0)) == []
    assert find_zeros(lambda E: E + 10.0, (0.0, 5.0), grid_points=11) == []


def test_winding_number():
    circle = np.exp(2j * np.pi * np.linspace(0.0, 1.0, 50))
    assert winding_number_of_path(circle) == 1
    assert winding_number_of_path(circle[::-1]) == -1
    assert winding_number(lambda E: (E - 1.0) * (E - 2.0), (0.0, 3.0, -1.0, 1.0)) == 2
    assert winding_number(lambda E: E - 5.0, (0.0, 3.0, -1.0, 1.0)) == 0
    assert winding_number(np.sin, (-1.0, 7.0, -1.0, 1.0), n=128) == 3


def test_certified_count_spots_a_missing_zero(caplog):
    f = lambda E: (E - 1.0) * (E - 2.5) * (E + 3.0)
    zeros = find_zeros(f, (0.0, 4.0), grid_points=41)
    count = certify_zero_count(f, (0.0, 4.0), zeros, height=0.5, n=64)
    assert (count.winding, count.found) == (2, 2)
    assert count.consistent
    assert count.to_dict()['rectangle'] == [0.0, 4.0, -0.5, 0.5]

    with caplog.at_level(logging.WARNING, logger='spectral.zeros'):
        partial = certify_zero_count(f, (0.0, 4.0), zeros[:1], height=0.5, n=64)
    assert not partial.consistent
    assert 'argument principle counts 2 zeros' in caplog.text


# Frobenius analysis

def test_integer_degree():
    assert integer_degree(1.0, 3) == 3
    assert integer_degree(1.0 / 3.0, 3) == 1
    with pytest.raises(DomainError):
        integer_degree(0.7, 2)


def test_check_resonance():
    check_resonance(np.array([0.3, -0.3]))
    with pytest.raises(NonGenericError):
        check_resonance(np.array([0.5, -0.5]))


def test_resonant_ell_is_rejected():
    with pytest.raises(NonGenericError):
        frobenius_basis(rep_A_standard(1), a1_params(1.0, (0.5,)))


def test_zero_ell_is_not_generic(A2):
    with pytest.raises(NonGenericError):
        weyl_data(A2, 1, (0.0, 0.0), chamber='ell')


def test_series_solves_the_ode(A2, generic_ell_A2):
    rep = normalized_family(A2).reps[1]
    params = ConnectionParams(kind=A2, M=1.0, E=0.7, ell=generic_ell_A2)
    basis = frobenius_basis(rep, params)
    for column in range(3):
        assert series_residual(rep, params, basis, 0.3, column=column) < 1e-7


# spectral determinants

@pytest.mark.slow
def test_extraction_is_independent_of_x0(A2, generic_ell_A2, params_A2):
    q = QFunctions(A2, 1, params_A2.with_ell(generic_ell_A2))
    Q1, Qt1, _ = q.extract(1.3, x0=0.5)
    Q2, Qt2, _ = q.extract(1.3, x0=0.25)
    assert abs(Q1 - Q2) < 1e-8 * abs(Q1)
    assert abs(Qt1 - Qt2) < 1e-8 * abs(Qt1)


@pytest.mark.slow
def test_a1_zeros_at_zero_ell_are_odd_levels():
    q = q_functions(AlgebraKind('A', 1), 1, a1_params(1.0, ()))
    zeros = find_q_zeros(q, (0.0, 12.0), grid_points=49)
    assert [z.E.real for z in zeros] == pytest.approx([3.0, 7.0, 11.0], rel=1e-6)
    assert all(abs(z.E.imag) < 1e-8 for z in zeros)

    companion = find_zeros(q.Qtilde, (0.0, 12.0), grid_points=49)
    assert [z.E.real for z in companion] == pytest.approx([1.0, 5.0, 9.0], rel=1e-6)


@pytest.mark.slow
def test_zero_count_is_stable_and_certified():
    q = q_functions(AlgebraKind('A', 1), 1, a1_params(1.0, ()))
    coarse = find_q_zeros(q, (0.0, 12.0), grid_points=25)
    fine = find_q_zeros(q, (0.0, 12.0), grid_points=49)
    assert len(coarse) == len(fine) == 3
    np.testing.assert_allclose([z.E.real for z in coarse], [z.E.real for z in fine], rtol=1e-8)
    count = certify_zero_count(q.Q, (0.0, 12.0), fine, height=1.0, n=48)
    assert count.winding == 3
    assert count.consistent


@pytest.mark.slow
def test_qtable_carries_the_certificate():
    params = a1_params(1.0, ())
    table = build_qtable(AlgebraKind('A', 1), 1, params, window=(0.0, 8.0), max_zeros=1, bethe=False,
                         grid_points=33, certify=True)
    assert [z.E.real for z in table.zeros] == pytest.approx([3.0], rel=1e-6)
    assert table.certificate.winding == table.certificate.found == 2
    assert table.certificate.rectangle == pytest.approx((0.0, 8.0, -0.25, 0.25))
    assert table.to_dict()['certificate']['consistent'] is True


@pytest.mark.slow
def test_a1_zeros_harmonic_with_angular_momentum():
    ell = 0.3
    q = q_functions(AlgebraKind('A', 1), 1, a1_params(1.0, (ell,)))
    zeros = find_q_zeros(q, (0.0, 20.0), max_count=5)
    expected = [4 * k + 2 * ell + 3 for k in range(5)]
    assert [z.E.real for z in zeros] == pytest.approx(expected, rel=1e-6)


@pytest.mark.slow
def test_a1_zeros_match_shooting_oracle():
    M, ell = 1.5, 0.3
    q = q_functions(AlgebraKind('A', 1), 1, a1_params(M, (ell,)))
    zeros = find_q_zeros(q, (0.0, 40.0), max_count=5)
    expected = shooting_oracle.eigenvalues(M, ell, 5)
    assert len(zeros) == 5
    assert [z.E.real for z in zeros] == pytest.approx(expected, rel=1e-6)


@pytest.mark.slow
def test_qq_relation_a2(A2, generic_ell_A2, params_A2):
    params = params_A2.with_ell(generic_ell_A2)
    for E in (0.5, -1.0, 2.3, 1.5 + 0.5j, 3j):
        for node in (1, 2):
            assert abs(qq_residual(A2, node, params, E, relative=True)) < 1e-6


@pytest.mark.slow
def test_bethe_equations_a2(A2, generic_ell_A2, params_A2):
    params = params_A2.with_ell(generic_ell_A2)
    table = build_qtable(A2, 1, params, Es=[0.0, 1.0], window=(0.0, 40.0), max_zeros=3)
    assert len(table.zeros) == 3
    assert table.max_bethe < 1e-4
    for zero in table.zeros:
        up, down = quasifatta_residuals(A2, 1, params, zero.E)
        assert abs(up) < 1e-5 and abs(down) < 1e-5

    frame = table.to_frame()
    assert list(frame.columns) == ['E', 'Re Q', 'Im Q', 'Re Qtilde', 'Im Qtilde']
    assert len(table.to_dict()['zeros']) == 3


@pytest.mark.slow
def test_decay_on_negative_axis():
    fit = q_decay_fit(AlgebraKind('A', 2), 1, np.linspace(-20.0, -5.0, 7))
    assert fit['ratio'] == pytest.approx(1.0, rel=0.05)


def test_decay_fit_needs_negative_energies():
    with pytest.raises(DomainError):
        q_decay_fit(AlgebraKind('A', 2), 1, [1.0, -2.0])
