#!/usr/bin/env python3
"""
Weyl Data
Extremal weights of V^(i) selected by the l-matrix, the vectors chi, phi and the phases theta_i, beta_j
"""
import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg as la

from cartan import cartan_data
from connection import ell_matrix
from core.errors import NonGenericError
from core.settings import DEFAULT_SETTINGS
from repkit import build_intertwiner, fix_phase, normalized_family, tensor_vectors, wedge_vectors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeylData:
    node: int
    lstar: complex          # l-eigenvalue of the dominant weight vector
    second: complex         # l-eigenvalue of the runner-up
    chi_vec: np.ndarray
    phi_vec: np.ndarray
    L_chi: complex          # (l + H)-eigenvalue on chi
    L_phi: complex
    theta: complex
    chamber: str = 'ell'

    @property
    def beta_numerator(self):
        return self.L_chi


def _eigen_sorted(matrix):
    values, vectors = la.eig(matrix)
    order = np.argsort(-values.real, kind='stable')
    return values[order], vectors[:, order]


def extremal_pair(rep, chamber_matrix, genericity, node=None):
    """Indices of the two eigenvectors of chamber_matrix with the largest real parts"""
    values, vectors = _eigen_sorted(chamber_matrix)
    if len(values) < 2:
        raise NonGenericError(f"node {node}: representation too small for a runner-up weight", pair=None)
    gap_top = values[0].real - values[1].real
    if gap_top <= genericity:
        raise NonGenericError(
            f"node {node}: dominant eigenvalues {values[0]:.6g} and {values[1]:.6g} tie", pair=(values[0], values[1]),
        )
    if len(values) > 2:
        gap_second = values[1].real - values[2].real
        if gap_second <= genericity:
            raise NonGenericError(
                f"node {node}: runner-up eigenvalues {values[1]:.6g} and {values[2]:.6g} tie", pair=(values[1], values[2]),
            )
    return values, vectors


def weyl_vectors(rep, ell, chamber=None, genericity=None, node=None):
    """chi and phi as eigenvectors of the chamber matrix (l by default)"""
    genericity = DEFAULT_SETTINGS.spectral.genericity if genericity is None else genericity
    L = ell_matrix(rep, ell)
    if chamber is None or chamber == 'ell':
        xi, chamber_name = L, 'ell'
    elif isinstance(chamber, str) and chamber.upper() == 'H':
        xi, chamber_name = rep.grading, 'H'
    else:
        xi, chamber_name = ell_matrix(rep, chamber), 'custom'
    _, vectors = extremal_pair(rep, xi, genericity, node)
    chi = fix_phase(vectors[:, 0])
    phi = fix_phase(vectors[:, 1])
    return L, chi, phi, chamber_name


def _rayleigh(matrix, v):
    return np.vdot(v, matrix @ v) / np.vdot(v, v)


def weyl_data(kind, i, ell, chamber=None, genericity=None, settings=None):
    """WeylData of node i; phi is scaled so that m_i(chi ^ phi) = tensor of the chi^(j)"""
    genericity = (settings or DEFAULT_SETTINGS).spectral.genericity if genericity is None else genericity
    data = cartan_data(kind)
    family = normalized_family(kind, settings)
    rep = family.reps[i]
    L, chi, phi, chamber_name = weyl_vectors(rep, ell, chamber, genericity, node=i)

    m = build_intertwiner(kind, i, settings=settings)
    image = m(wedge_vectors(chi, phi))
    neighbours = [weyl_vectors(family.reps[j], ell, chamber, genericity, node=j)[1] for j in data.neighbours(i)]
    target = tensor_vectors(neighbours)
    scale = np.vdot(target, image) / np.vdot(image, image)
    if abs(scale) < 1e-14 or not np.isfinite(scale):
        raise NonGenericError(f"node {i}: m_i annihilates chi ^ phi; the chamber is not generic", pair=None)
    mismatch = np.linalg.norm(scale * image - target) / np.linalg.norm(target)
    if mismatch > 1e-8:
        logger.warning("node %d: m_i(chi ^ phi) is not parallel to the tensor of chi^(j) (%.2e)", i, mismatch)
    phi = phi * scale

    LH = L + rep.grading
    L_chi, L_phi = _rayleigh(LH, chi), _rayleigh(LH, phi)
    return WeylData(
        node=i, lstar=_rayleigh(L, chi), second=_rayleigh(L, phi), chi_vec=chi, phi_vec=phi,
        L_chi=L_chi, L_phi=L_phi, theta=L_chi - L_phi, chamber=chamber_name,
    )


def beta_vector(kind, ell, M, chamber=None, settings=None):
    """beta_j = -w(omega_j)(l + h) / (M h)"""
    genericity = (settings or DEFAULT_SETTINGS).spectral.genericity
    data = cartan_data(kind)
    family = normalized_family(kind, settings)
    betas = []
    for j in data.nodes:
        rep = family.reps[j]
        L, chi, _, _ = weyl_vectors(rep, ell, chamber, genericity, node=j)
        betas.append(-_rayleigh(L + rep.grading, chi) / (M * data.hvee))
    return np.array(betas)
