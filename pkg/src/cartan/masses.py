#!/usr/bin/env python3
"""
Perron-Frobenius Masses
Maximal eigenvector of the incidence matrix, its closed forms, and the twist phases
"""
import logging

import numpy as np

from core.errors import DomainError

logger = logging.getLogger(__name__)


def pf_from_incidence(B, tol=1e-15, max_iter=5000):
    """Positive eigenvector of B normalised so that its first entry is 1"""
    B = np.asarray(B, dtype=float)
    n = B.shape[0]
    if n == 1:
        return np.ones(1)

    # B is bipartite, so iterate on B + 2I to separate the top eigenvalue from -mu
    shifted = B + 2.0 * np.eye(n)
    v = np.ones(n) / np.sqrt(n)
    for _ in range(max_iter):
        w = shifted @ v
        w /= np.linalg.norm(w)
        if np.max(np.abs(w - v)) < tol:
            v = w
            break
        v = w

    # one Rayleigh-quotient step
    mu = v @ B @ v
    try:
        y = np.linalg.solve(B - mu * np.eye(n), v)
        if np.all(np.isfinite(y)) and np.linalg.norm(y) > 0:
            y /= np.linalg.norm(y)
            if y[0] < 0:
                y = -y
            v = y
    except np.linalg.LinAlgError:
        logger.debug("Rayleigh step singular at mu = %.15g; keeping the power-iteration vector", mu)

    return v / v[0]


def pf_vector(data):
    """The masses lambda^(i) of an algebra (copy of data.pf)"""
    return np.array(data.pf, dtype=float)


def _ratio(a, b):
    return np.sin(a) / np.sin(b)


def closed_form_masses(kind):
    """Closed-form maximal eigenvalues lambda^(i) for every node"""
    n = kind.rank
    pi = np.pi
    if kind.family == 'A':
        return np.array([_ratio(i * pi / (n + 1), pi / (n + 1)) for i in range(1, n + 1)])
    if kind.family == 'D':
        h = 2 * n - 2
        chain = [_ratio(i * pi / h, pi / h) for i in range(1, n - 1)]
        spin = 1.0 / (2.0 * np.sin(pi / h))
        return np.array(chain + [spin, spin])
    if n == 6:
        # node 4 hangs off node 3: lambda^(4) = lambda^(3) / (2 cos(pi/12)) = sqrt(2)
        return np.array([
            1.0,
            _ratio(pi / 6, pi / 12),
            _ratio(pi / 4, pi / 12),
            _ratio(pi / 4, pi / 6),
            _ratio(pi / 6, pi / 12),
            1.0,
        ])
    if n == 7:
        return np.array([
            1.0,
            _ratio(pi / 9, pi / 18),
            _ratio(pi / 6, pi / 18),
            _ratio(2 * pi / 9, pi / 18),
            _ratio(2 * pi / 9, pi / 9),
            np.sin(pi / 9) * np.sin(2 * pi / 9) / (np.sin(pi / 6) * np.sin(pi / 18)),
            _ratio(2 * pi / 9, pi / 6),
        ])
    return np.array([
        1.0,
        _ratio(2 * pi / 30, pi / 30),
        _ratio(pi / 10, pi / 30),
        _ratio(2 * pi / 15, pi / 30),
        _ratio(pi / 6, pi / 30),
        _ratio(pi / 6, pi / 15),
        np.sin(pi / 6) * np.sin(pi / 15) / (np.sin(pi / 10) * np.sin(pi / 30)),
        _ratio(pi / 6, pi / 10),
    ])


def coxeter_check(data):
    """Residual of B pf = (gamma^{1/2} + gamma^{-1/2}) pf, with gamma = exp(2 pi i / h)"""
    gamma_half = np.exp(1j * np.pi / data.hvee)
    mu = (gamma_half + 1.0 / gamma_half).real
    residual = data.B @ data.pf - mu * data.pf
    return {
        'eigenvalue': mu,
        'expected': 2.0 * np.cos(np.pi / data.hvee),
        'residual': float(np.max(np.abs(residual))),
    }


class Phases:
    """gamma, omega and Omega for given (h, M), with exact fractional powers"""

    def __init__(self, hvee, M):
        if not M > 0:
            raise DomainError(f"M must be positive, got {M}")
        self.hvee = hvee
        self.M = float(M)

    def gamma_pow(self, a):
        return np.exp(2j * np.pi * a / self.hvee)

    def omega_pow(self, a):
        return np.exp(2j * np.pi * a / (self.hvee * (self.M + 1)))

    def Omega_pow(self, a):
        return np.exp(2j * np.pi * self.M * a / (self.M + 1))

    @property
    def gamma(self):
        return self.gamma_pow(1)

    @property
    def omega(self):
        return self.omega_pow(1)

    @property
    def Omega(self):
        return self.Omega_pow(1)

    def as_tuple(self):
        return self.gamma, self.omega, self.Omega


def phases(data, M):
    """(gamma, omega, Omega) for the algebra and exponent M"""
    return Phases(data.hvee, M).as_tuple()
