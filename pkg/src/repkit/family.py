#!/usr/bin/env python3
"""
Normalised Families
All fundamental representations of an algebra with eigenvectors rescaled so that c_i = 1
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from cartan import AlgebraKind, cartan_data
from core.errors import ConstructionError, UnsupportedRepresentationError
from .builders import fundamental_rep, tensor_vectors, wedge_vectors
from .intertwiner import build_intertwiner
from .spectrum import MaximalEigenpair, gamma_h_twist, require_maximal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalizedFamily:
    kind: AlgebraKind
    reps: dict             # node -> MatrixRep
    eigen: dict            # node -> MaximalEigenpair (psi already rescaled)
    intertwiners: dict     # node -> Intertwiner
    c_before: np.ndarray   # c_i of the unscaled eigenvectors
    alpha: np.ndarray      # rescaling applied to psi^(i)
    normalized: bool = True

    def psi(self, i):
        return self.eigen[i].psi

    def psi_tensor(self, i):
        data = cartan_data(self.kind)
        return tensor_vectors([self.psi(j) for j in data.neighbours(i)])

    def c_constants(self):
        """c_i recomputed from the stored (rescaled) eigenvectors"""
        return np.array([wedge_constant(self, i) for i in cartan_data(self.kind).nodes])


def _wedge_image(rep, psi, m):
    """m_i(gamma^{H/2} psi ^ gamma^{-H/2} psi)"""
    plus = gamma_h_twist(rep, 0.5) @ psi
    minus = gamma_h_twist(rep, -0.5) @ psi
    return m(wedge_vectors(plus, minus))


def wedge_constant(family, i, check=1e-9):
    """c with m_i(gamma^{H/2} psi ^ gamma^{-H/2} psi) = c psi_tensor"""
    image = _wedge_image(family.reps[i], family.psi(i), family.intertwiners[i])
    target = family.psi_tensor(i)
    c = np.vdot(target, image) / np.vdot(target, target)
    mismatch = np.linalg.norm(image - c * target) / max(np.linalg.norm(image), 1e-300)
    if mismatch > check:
        raise ConstructionError(f"node {i}: wedge eigenvector is not mapped onto psi_tensor ({mismatch:.2e})")
    return c


def _rescale(eigenpair, factor):
    return MaximalEigenpair(
        value=eigenpair.value, psi=eigenpair.psi * factor,
        psi_left=eigenpair.psi_left / factor, gap=eigenpair.gap,
    )


def normalize_family(family):
    """Rescale psi^(j) by alpha = exp(-C^{-1} log c); a normalised family is returned unchanged"""
    if family.normalized:
        return family
    data = cartan_data(family.kind)
    c = family.c_constants()
    log_alpha = -np.linalg.solve(data.C.astype(float), np.log(c.astype(complex)))
    alpha = np.exp(log_alpha)
    eigen = {i: _rescale(family.eigen[i], alpha[i - 1]) for i in data.nodes}
    logger.debug("%s: c = %s, alpha = %s", family.kind, np.round(c, 12), np.round(alpha, 12))
    return NormalizedFamily(
        kind=family.kind, reps=family.reps, eigen=eigen, intertwiners=family.intertwiners,
        c_before=c, alpha=alpha * family.alpha, normalized=True,
    )


@lru_cache(maxsize=None)
def normalized_family(kind, settings=None):
    """Fundamental representations, maximal eigenpairs and intertwiners with c_i = 1 at every node"""
    kind = kind if isinstance(kind, AlgebraKind) else AlgebraKind.parse(kind)
    if kind.family == 'E':
        raise UnsupportedRepresentationError(f"Psi-system data for {kind} needs E-type representations")
    data = cartan_data(kind)
    reps = {i: fundamental_rep(kind, i, settings) for i in data.nodes}
    eigen = {i: require_maximal(reps[i], settings=settings) for i in data.nodes}
    intertwiners = {i: build_intertwiner(kind, i, settings=settings) for i in data.nodes}
    raw = NormalizedFamily(
        kind=kind, reps=reps, eigen=eigen, intertwiners=intertwiners,
        c_before=np.ones(data.rank), alpha=np.ones(data.rank, dtype=complex), normalized=False,
    )
    return normalize_family(raw)
