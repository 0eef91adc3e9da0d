#!/usr/bin/env python3
"""
Frobenius Basis at x = 0
Series solutions x^{-mu}(v + sum c_m x^m) of the connection for non-resonant l
"""
import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg as la

from connection import Connection, ell_matrix
from core.errors import DomainError, NonGenericError
from core.settings import DEFAULT_SETTINGS

logger = logging.getLogger(__name__)


@dataclass
class FrobeniusBasis:
    """One series per l-eigenvalue mu; columns ordered as the exponents"""
    exponents: np.ndarray       # -mu for each eigenvalue mu
    series: list                # series[a][m] is the coefficient vector c_m
    radius_hint: float

    @property
    def mus(self):
        return -self.exponents

    def evaluate(self, x, order=None):
        """Matrix whose columns are the basis solutions at x > 0"""
        x = complex(x)
        columns = []
        for mu, coeffs in zip(self.mus, self.series):
            upto = len(coeffs) if order is None else min(order, len(coeffs))
            powers = x ** np.arange(upto)
            total = sum(c * p for c, p in zip(coeffs[:upto], powers))
            columns.append(np.exp(-mu * np.log(x)) * total)
        return np.column_stack(columns)

    def tail(self, x, window):
        """Relative size of the last `window` terms of every series at x"""
        worst = 0.0
        for coeffs in self.series:
            head = sum(np.linalg.norm(c) * abs(x) ** m for m, c in enumerate(coeffs[:-window]))
            last = sum(np.linalg.norm(c) * abs(x) ** (len(coeffs) - window + m)
                       for m, c in enumerate(coeffs[-window:]))
            worst = max(worst, last / max(head, 1e-300))
        return worst


def integer_degree(M, hvee):
    mh = M * hvee
    if abs(mh - round(mh)) > 1e-12 or round(mh) < 1:
        raise DomainError(f"Frobenius analysis needs M h in the positive integers, got {mh}")
    return int(round(mh))


def check_resonance(mus, margin=1e-9, max_shift=None):
    """Raise when two exponents differ by a positive integer"""
    for a, mu_a in enumerate(mus):
        for b, mu_b in enumerate(mus):
            if a == b:
                continue
            diff = mu_a - mu_b
            nearest = round(diff.real)
            if nearest >= 1 and abs(diff - nearest) < margin:
                if max_shift is None or nearest <= max_shift:
                    raise NonGenericError(
                        f"exponents {mu_a:.6g} and {mu_b:.6g} differ by the integer {nearest}", pair=(mu_a, mu_b),
                    )


def frobenius_basis(rep, params, order=None, leading=None):
    """Series solutions around x = 0, one per eigenvector of the l-matrix

    leading maps a column index to a prescribed leading vector (used for chi and phi).
    """
    order = DEFAULT_SETTINGS.spectral.series_order if order is None else order
    mh = integer_degree(params.M, rep.data.hvee)
    L = ell_matrix(rep, params.ell)
    mus, vectors = la.eig(L)
    order_idx = np.argsort(-mus.real, kind='stable')
    mus, vectors = mus[order_idx], vectors[:, order_idx]
    check_resonance(mus)

    leading = leading or {}
    E = params.E
    A1 = sum(rep.e) - E * rep.e0           # coefficient of x^0
    e0 = rep.e0
    eye = np.eye(rep.dim)
    series = []
    for a, mu in enumerate(mus):
        c0 = np.asarray(leading.get(a, vectors[:, a]), dtype=complex)
        coeffs = [c0]
        for m in range(1, order + 1):
            rhs = -A1 @ coeffs[m - 1]
            if m - 1 - mh >= 0:
                rhs = rhs - e0 @ coeffs[m - 1 - mh]
            shift = (m - mu) * eye + L
            try:
                coeffs.append(la.solve(shift, rhs))
            except la.LinAlgError as exc:
                raise NonGenericError(f"resonant Frobenius recursion at order {m} for mu = {mu:.6g}", pair=(mu, m)) from exc
        series.append(coeffs)

    # geometric estimate of the convergence radius from the last coefficient ratios
    norms = [np.linalg.norm(c) for c in series[0]]
    tail_norms = [n for n in norms[-(mh + 2):] if n > 0]
    radius = 1.0
    if len(tail_norms) >= 2:
        radius = (tail_norms[0] / tail_norms[-1]) ** (1.0 / max(len(tail_norms) - 1, 1))
    return FrobeniusBasis(exponents=-mus, series=series, radius_hint=float(radius))


def series_residual(rep, params, basis, x, column=0, dx=1e-6):
    """|y' - A(x) y| / |y| of one truncated series at x, derivative by central difference"""
    conn = Connection(rep, params)
    y = lambda z: basis.evaluate(z)[:, column]
    derivative = (y(x + dx) - y(x - dx)) / (2 * dx)
    return conn.residual(x, y(x), derivative)
