#!/usr/bin/env python3
"""
Generalized Airy Functions
Contour integrals (1/2 pi i) int Phi(s) e^{-xs} ds solving Psi' + (e + x e0) Psi = 0 on V^(1)
"""
import logging
from functools import lru_cache

import numpy as np
from scipy.special import gamma

from cartan import AlgebraKind, dual_coxeter
from core.errors import DomainError
from .contour import contour_spec, integrate_contour

logger = logging.getLogger(__name__)


def _check(family, n):
    family = family.upper()
    if family == 'A' and n < 2:
        raise DomainError("the A-family Airy function needs matrix size n >= 2")
    if family == 'D' and n < 3:
        raise DomainError("the D-family Airy function needs rank n >= 3")
    if family not in ('A', 'D'):
        raise DomainError(f"no Airy integral for family {family}")
    return family


def algebra_of(family, n):
    """A: matrix size n is A_{n-1}; D: rank n is D_n"""
    family = _check(family, n)
    return AlgebraKind('A', n - 1) if family == 'A' else AlgebraKind('D', n)


def contour_order(family, n):
    """N with Phi_1 ~ e^{s^N / N}"""
    family = _check(family, n)
    return n + 1 if family == 'A' else 2 * n - 1


@lru_cache(maxsize=32)
def component_powers(family, n):
    """Phi_j / Phi_1 as {power: coefficient} per component"""
    family = _check(family, n)
    if family == 'A':
        return tuple({j: 1.0} for j in range(n))
    comps = [{j: 1.0} for j in range(n - 1)]
    comps.append({n - 1: 0.5})
    comps.append({n - 1: 1.0})
    comps.extend({n + j - 2: 1.0} for j in range(2, n))
    comps.append({2 * n - 2: 0.5, -1: 0.25})
    return tuple(comps)


def _log_phi1(family, n, s):
    N = contour_order(family, n)
    value = s ** N / N
    if family.upper() == 'D':
        value = value - 0.5 * np.log(s)
    return value


def _poly(powers, s):
    return sum(c * s ** p for p, c in powers.items())


def integrand(family, n, s):
    """Phi(s) as an array of shape (len(s), dim); kappa = 1"""
    family = _check(family, n)
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    phi1 = np.exp(_log_phi1(family, n, s))
    return np.stack([_poly(p, s) * phi1 for p in component_powers(family, n)], axis=-1)


def integrand_derivative(family, n, s):
    """dPhi/ds, componentwise"""
    family = _check(family, n)
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    N = contour_order(family, n)
    phi1 = np.exp(_log_phi1(family, n, s))
    dlog = s ** (N - 1) - (0.5 / s if family == 'D' else 0.0)
    cols = []
    for powers in component_powers(family, n):
        poly = _poly(powers, s)
        dpoly = sum(c * p * s ** (p - 1) for p, c in powers.items() if p != 0)
        cols.append((dpoly + poly * dlog) * phi1)
    return np.stack(cols, axis=-1)


def _magnitude(family, n, x):
    def magnitude(s):
        return float(np.max(np.abs(integrand(family, n, s)[0])) * abs(np.exp(-x * s)))
    return magnitude


def _rotation(family, n, k):
    return 2.0 * np.pi * k / contour_order(family, n)


def airy_vector(family, n, x, k=0, points=None, settings=None):
    """All components along the contour rotated by e^{2 pi i k / N}"""
    family = _check(family, n)
    x = complex(x)
    spec = contour_spec(family, n, contour_order(family, n), x, _magnitude(family, n, x), _rotation(family, n, k),
                        settings=settings)

    def f(s):
        return integrand(family, n, s) * np.exp(-x * s)[:, None]

    return integrate_contour(spec, f, points, settings=settings) / (2j * np.pi)


def airy_A(n, j, x):
    """j-th component of the sl_n Airy function"""
    if not 1 <= j <= n:
        raise DomainError(f"component {j} outside 1..{n}")
    return airy_vector('A', n, x)[j - 1]


def airy_D(n, j, x):
    """j-th component of the D_n Airy function"""
    if not 1 <= j <= 2 * n:
        raise DomainError(f"component {j} outside 1..{2 * n}")
    return airy_vector('D', n, x)[j - 1]


def rotated_airy(n, k, x, family='A', settings=None):
    """Airy vector along the contour rotated by e^{2 pi i k / N}"""
    N = contour_order(family, n)
    if abs(2 * k) + 1 >= N:
        raise DomainError(f"|k| = {abs(k)} exceeds the {N} sectors of the contour")
    return airy_vector(family, n, x, k, settings=settings)


def airy_asymptote_A(n, j, x):
    """Steepest-descent leading term sqrt(1/(2 pi n)) x^{(2j-1-n)/(2n)} e^{-(n/(n+1)) x^{(n+1)/n}}"""
    x = float(x)
    if x <= 0:
        raise DomainError("the asymptotic formula needs x > 0")
    return np.sqrt(1.0 / (2 * np.pi * n)) * x ** ((2 * j - 1 - n) / (2 * n)) * np.exp(-(n / (n + 1)) * x ** ((n + 1) / n))


def airy_zero_value():
    """Classical Ai(0)"""
    return 3.0 ** (-2.0 / 3.0) / gamma(2.0 / 3.0)


def predicted_kappa(family, n):
    """sqrt(2 pi h) relating the contour normalisation to the unit-entry psi^(1)"""
    return np.sqrt(2 * np.pi * dual_coxeter(algebra_of(family, n)))


def integrand_ode_residual(family, n, s, e, e0):
    """max |(-s + e + e0 d/ds) Phi(s)| over the sample points"""
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    phi = integrand(family, n, s)
    dphi = integrand_derivative(family, n, s)
    res = -s[:, None] * phi + phi @ np.asarray(e).T + dphi @ np.asarray(e0).T
    scale = np.max(np.abs(phi), axis=1) * np.maximum(1.0, np.abs(s)) ** 2
    return float(np.max(np.max(np.abs(res), axis=1) / scale))
