#!/usr/bin/env python3
"""
Spectrum of Lambda
Maximal eigenpairs, twist conjugation and highest-weight vectors
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.linalg as la

from core.errors import ConstructionError, UnsupportedRepresentationError
from core.settings import DEFAULT_SETTINGS
from .builders import exterior_power, rep_D_standard
from .matrix_rep import lambda_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaximalEigenpair:
    value: float
    psi: np.ndarray            # right eigenvector, largest-modulus entry equal to 1
    psi_left: np.ndarray       # left eigenvector with psi_left @ psi = 1
    gap: float


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: np.ndarray
    maximal: Optional[MaximalEigenpair] = None
    notes: tuple = field(default=())

    @property
    def has_maximal(self):
        return self.maximal is not None


def normalize_max_entry(v):
    """Scale v so that its entry of largest modulus equals 1"""
    v = np.asarray(v, dtype=complex)
    pivot = v[np.argmax(np.abs(v))]
    return v / pivot


def fix_phase(v):
    """Unit norm with the largest-modulus entry real and positive"""
    v = np.asarray(v, dtype=complex)
    v = v / np.linalg.norm(v)
    pivot = v[np.argmax(np.abs(v))]
    return v * (abs(pivot) / pivot)


def maximal_eigenpair(rep, gap_threshold=None, imag_threshold=None, matrix=None, settings=None):
    """Full spectrum of Lambda and, when it exists, the maximal eigenpair"""
    settings = (settings or DEFAULT_SETTINGS).repkit
    gap_threshold = settings.gap_threshold if gap_threshold is None else gap_threshold
    imag_threshold = settings.imag_threshold if imag_threshold is None else imag_threshold

    L = lambda_matrix(rep) if matrix is None else matrix
    values, left, right = la.eig(L, left=True, right=True)
    order = np.argsort(-values.real)
    values, left, right = values[order], left[:, order], right[:, order]

    if len(values) == 1:
        gap = np.inf
    else:
        gap = values[0].real - values[1].real
    top = values[0]

    if gap <= gap_threshold or abs(top.imag) >= imag_threshold:
        logger.debug("%s: no maximal eigenvalue (top %s, gap %.2e)", rep.label, top, gap)
        return SpectrumReport(eigenvalues=values)

    psi = normalize_max_entry(right[:, 0])
    # scipy returns vl with vl^H L = lambda vl^H
    psi_left = np.conj(left[:, 0])
    psi_left = psi_left / (psi_left @ psi)
    maximal = MaximalEigenpair(value=float(top.real), psi=psi, psi_left=psi_left, gap=float(gap))
    return SpectrumReport(eigenvalues=values, maximal=maximal)


def require_maximal(rep, **kwargs):
    """maximal_eigenpair that raises when Lambda has no maximal eigenvalue"""
    report = maximal_eigenpair(rep, **kwargs)
    if not report.has_maximal:
        raise UnsupportedRepresentationError(f"{rep.label or rep.kind}: Lambda has no maximal eigenvalue")
    return report.maximal


def gamma_h_twist(rep, k):
    """gamma^{kH} = exp(2 pi i k H / h)"""
    scale = 2j * np.pi * k / rep.data.hvee
    if rep.is_diagonal_grading:
        return np.diag(np.exp(scale * np.diag(rep.grading)))
    return la.expm(scale * rep.grading)


def omega_h_twist(rep, M, k):
    """omega^{kH} = exp(2 pi i k H / (h (M + 1)))"""
    scale = 2j * np.pi * k / (rep.data.hvee * (M + 1.0))
    if rep.is_diagonal_grading:
        return np.diag(np.exp(scale * np.diag(rep.grading)))
    return la.expm(scale * rep.grading)


def twist_identity_residual(rep, k):
    """max |gamma^{kH} Lambda_{V_k} gamma^{-kH} - gamma^k Lambda_V|"""
    G = gamma_h_twist(rep, k)
    G_inv = gamma_h_twist(rep, -k)
    twisted = lambda_matrix(rep.with_twist(rep.twist_k + k))
    gamma_k = np.exp(2j * np.pi * k / rep.data.hvee)
    return float(np.max(np.abs(G @ twisted @ G_inv - gamma_k * lambda_matrix(rep))))


def highest_weight_vector(rep):
    """Unit vector killed by every e_i, largest entry real and positive"""
    null = la.null_space(np.vstack(rep.e))
    if null.shape[1] != 1:
        raise ConstructionError(f"{rep.label}: {null.shape[1]} independent highest-weight vectors")
    return fix_phase(null[:, 0])


def weight_of(rep, v):
    """Eigenvalues of the h_i on a weight vector"""
    norm = np.vdot(v, v)
    return np.array([np.vdot(v, H @ v) / norm for H in rep.h])


def spin_top_exterior(n, k=None):
    """Spectrum of Lambda on the (n-1)-th exterior power of V^(1) of D_n at twist n/2"""
    k = n / 2.0 if k is None else k
    rep = exterior_power(rep_D_standard(n, k), n - 1)
    return maximal_eigenpair(rep)
