import numpy as np
import pytest
from scipy.special import airy

from core.errors import DomainError, RadiusError
from core.settings import AirySettings, Settings
from gairy import (
    airy_A, airy_D, airy_asymptote_A, airy_vector, airy_zero_value, compare_with_connection, component_powers,
    contour_spec, integrand, integrand_ode_residual, predicted_kappa, rotated_airy,
)
from repkit import rep_A_standard, rep_D_standard

S_SAMPLES = np.array([0.3 + 0.2j, 1.1, -0.7 + 0.5j, 2.0 - 1.5j])
XS = [0.5, 1.0, 2.0, 3.0]


def test_classical_airy_at_origin():
    assert airy_zero_value() == pytest.approx(airy(0.0)[0], rel=1e-14)
    assert abs(airy_A(2, 1, 0.0) - airy_zero_value()) < 1e-10


@pytest.mark.parametrize('x', [-2.0, 0.7, 2.5])
def test_classical_airy_and_derivative(x):
    ai, aip, _, _ = airy(x)
    vector = airy_vector('A', 2, x)
    assert abs(vector[0] - ai) < 1e-10
    # second component is s Phi_1, i.e. -d/dx of the first
    assert abs(vector[1] + aip) < 1e-10


@pytest.mark.parametrize('j', [1, 2, 3])
def test_asymptote(j):
    ratio = airy_A(3, j, 6.0) / airy_asymptote_A(3, j, 6.0)
    assert abs(ratio - 1.0) < 0.01


def test_asymptote_needs_positive_x():
    with pytest.raises(DomainError):
        airy_asymptote_A(3, 1, -1.0)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_integrand_solves_the_a_equation(n):
    rep = rep_A_standard(n - 1)
    assert integrand_ode_residual('A', n, S_SAMPLES, sum(rep.e), rep.e0) < 1e-12


@pytest.mark.parametrize('n', [3, 4, 5])
def test_integrand_solves_the_d_equation(n):
    rep = rep_D_standard(n)
    assert integrand_ode_residual('D', n, S_SAMPLES, sum(rep.e), rep.e0) < 1e-12


def test_d_components():
    n = 4
    assert len(component_powers('D', n)) == 2 * n
    phi = integrand('D', n, S_SAMPLES)
    assert phi.shape == (len(S_SAMPLES), 2 * n)
    np.testing.assert_allclose(phi[:, n], 2 * phi[:, n - 1])
    with pytest.raises(DomainError):
        airy_D(n, 2 * n + 1, 1.0)


def test_rotated_contours_are_conjugate():
    plus = rotated_airy(4, 1, 0.8)
    minus = rotated_airy(4, -1, 0.8)
    np.testing.assert_allclose(plus, np.conj(minus), rtol=1e-10, atol=1e-14)
    with pytest.raises(DomainError):
        rotated_airy(3, 2, 1.0)


def test_contour_limits():
    with pytest.raises(RadiusError):
        contour_spec('A', 3, 4, 0.0, lambda s: 1.0)
    with pytest.raises(DomainError):
        contour_spec('A', 3, 4, 0.0, lambda s: 0.0, rotation=3.0)
    spec = contour_spec('A', 3, 4, 1.0, lambda s: float(abs(np.exp(s ** 4 / 4 - s))))
    start, end = spec.endpoints()
    assert abs(np.exp(start ** 4 / 4 - start)) < 1e-14
    assert abs(np.exp(end ** 4 / 4 - end)) < 1e-14



def test_contour_tail_comes_from_settings():
    magnitude = lambda s: float(abs(np.exp(s ** 4 / 4 - s)))
    loose = contour_spec('A', 3, 4, 1.0, magnitude)
    strict = contour_spec('A', 3, 4, 1.0, magnitude, settings=Settings(airy=AirySettings(tail=1e-30)))
    assert strict.R > loose.R
    assert max(magnitude(s) for s in strict.endpoints()) < 1e-30

def test_bad_family():
    with pytest.raises(DomainError):
        airy_vector('E', 6, 1.0)
    with pytest.raises(DomainError):
        airy_vector('A', 1, 1.0)


@pytest.mark.slow
@pytest.mark.parametrize('family, n', [('A', 3), ('A', 4), ('D', 3)])
def test_quadrature_matches_connection(family, n):
    report = compare_with_connection(family, n, XS, tol=1e-12)
    assert report['max_deviation'] < 1e-8, report['deviations']
    assert report['kappa_mismatch'] < 1e-6
    assert report['predicted_kappa'] == pytest.approx(predicted_kappa(family, n))


@pytest.mark.slow
def test_rotated_quadrature_matches_rotated_solution():
    report = compare_with_connection('A', 5, XS, k=1, tol=1e-12)
    assert report['max_deviation'] < 1e-8, report['deviations']


@pytest.mark.slow
def test_rotated_d_quadrature_matches_rotated_solution():
    report = compare_with_connection('D', 4, XS, k=1, tol=1e-12)
    assert report['max_deviation'] < 1e-8, report['deviations']
