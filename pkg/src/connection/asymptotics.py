#!/usr/bin/env python3
"""
Asymptotic Data
Truncated root q(x, E), the action S(x, E) and the leading subdominant behaviour
"""
import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg as la
from scipy.special import binom

from core.errors import DomainError
from repkit import require_maximal

logger = logging.getLogger(__name__)


def cpow(x, a):
    """Principal branch of x^a; integer exponents are taken exactly"""
    if float(a).is_integer():
        return complex(x) ** int(a)
    return np.exp(a * np.log(complex(x)))


def _check_cut(x):
    x = complex(x)
    if x.imag == 0.0 and x.real <= 0.0:
        raise DomainError(f"x = {x} lies on the cut (-inf, 0]")
    return x


@dataclass(frozen=True)
class QExpansion:
    """q(x, E) = x^M + sum_{j=1}^{s} c_j x^{M(1 - h j)}"""
    M: float
    hvee: int
    E: complex
    s: int
    c: tuple
    delta: float

    def exponent(self, j):
        return self.M * (1 - self.hvee * j)

    def is_log_term(self, j):
        return abs(self.exponent(j) + 1.0) < 1e-12

    def value(self, x):
        x = _check_cut(x)
        total = cpow(x, self.M)
        for j, cj in enumerate(self.c, start=1):
            total += cj * cpow(x, self.exponent(j))
        return total


def q_expansion(M, hvee, E):
    """Truncation of p^{1/h} with c_j = binom(1/h, j) (-E)^j for j <= s"""
    if not M > 0:
        raise DomainError(f"M must be positive, got {M}")
    s = int(np.floor((M + 1.0) / (hvee * M) + 1e-12))
    E = complex(E)
    c = tuple(complex(binom(1.0 / hvee, j)) * (-E) ** j for j in range(1, s + 1))
    delta = M * (hvee * (1 + s) - 1) - 1
    return QExpansion(M=float(M), hvee=hvee, E=E, s=s, c=c, delta=delta)


def action(x, qe):
    """S(x, E): termwise primitive of q, with c_s log x in the resonant case"""
    x = _check_cut(x)
    M = qe.M
    total = cpow(x, M + 1) / (M + 1)
    for j, cj in enumerate(qe.c, start=1):
        if qe.is_log_term(j):
            total += cj * np.log(x)
        else:
            power = qe.exponent(j) + 1
            total += cj * cpow(x, power) / power
    return total


def exact_action(x, M, hvee, E, rel_tol=1e-17, max_terms=400):
    """S_P(x) with S_P' = p^{1/h} exactly; needs |E| |x|^{-M h} < 1

    Equals action() plus terms that vanish as x grows.
    """
    x = _check_cut(x)
    E = complex(E)
    ratio = abs(E) * abs(x) ** (-M * hvee)
    if ratio >= 1.0:
        raise DomainError(f"binomial series for the action diverges at |x| = {abs(x):.4g}")
    total = cpow(x, M + 1) / (M + 1)
    if E == 0:
        return total
    s = int(np.floor((M + 1.0) / (hvee * M) + 1e-12))
    for j in range(1, max_terms):
        power = M * (1 - hvee * j) + 1
        coeff = binom(1.0 / hvee, j) * (-E) ** j
        if abs(power) < 1e-12:
            term = coeff * np.log(x)
        else:
            term = coeff * cpow(x, power) / power
        total += term
        if j > s and abs(term) < rel_tol * abs(total):
            break
    return total


def log_root(x, M, hvee, E):
    """log P with P = x^M (1 - E x^{-M h})^{1/h}, continuous with M log x at infinity"""
    x = complex(x)
    u = complex(E) * cpow(x, -M * hvee)
    return M * np.log(x) + np.log1p(-u) / hvee


def leading_behaviour(lam, psi, H_diag, S, log_q):
    """e^{-lambda S} q^{-H} psi for a diagonal grading"""
    return np.exp(-lam * S) * np.exp(-log_q * H_diag) * psi


def subdominant_initial(rep, params, x0, eigenpair=None):
    """Leading asymptotic value e^{-lambda S(x0)} exp(-log q(x0) H) psi"""
    pair = require_maximal(rep) if eigenpair is None else eigenpair
    hvee = rep.data.hvee
    qe = q_expansion(params.M, hvee, params.E)
    S = action(x0, qe)
    log_q = np.log(qe.value(x0))
    if rep.is_diagonal_grading:
        return leading_behaviour(pair.value, pair.psi, np.diag(rep.grading), S, log_q)
    return np.exp(-pair.value * S) * (la.expm(-log_q * rep.grading) @ pair.psi)
