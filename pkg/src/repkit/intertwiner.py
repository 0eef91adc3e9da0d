#!/usr/bin/env python3
"""
Intertwiners m_i
Equivariant maps from the second exterior power of V^(i)_{1/2} onto M^(i)
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.linalg as la

from cartan import AlgebraKind, cartan_data
from core.errors import ConstructionError
from core.settings import DEFAULT_SETTINGS
from .builders import (
    exterior_power, fundamental_rep, neighbour_product, tensor_vectors, wedge_vectors,
)
from .spectrum import highest_weight_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Intertwiner:
    source_label: str
    target_label: str
    matrix: np.ndarray
    source: object
    target: object
    residual: float

    def __call__(self, vector):
        return self.matrix @ vector


def equivariance_residual(matrix, source, target):
    """max over generators of |m rho_src(g) - rho_tgt(g) m|, relative to |m|"""
    scale = max(np.max(np.abs(matrix)), 1.0)
    worst = 0.0
    for (_, g_src), (_, g_tgt) in zip(source.generators(), target.generators()):
        worst = max(worst, float(np.max(np.abs(matrix @ g_src - g_tgt @ matrix))))
    return worst / scale


def _span_pairs(source, target, s0, t0, rel_tol=1e-8):
    """Breadth-first search over words in the f_j applied to the pair (s0, t0)

    A pair is kept when its source vector enlarges the span of the kept sources.
    """
    basis = []          # orthonormal basis of the kept sources
    kept_s, kept_t = [], []
    queue = deque([(s0, t0)])

    def admit(s, t):
        norm = np.linalg.norm(s)
        if norm == 0.0:
            return False
        r = s.copy()
        for _ in range(2):
            for q in basis:
                r -= np.vdot(q, r) * q
        if np.linalg.norm(r) <= rel_tol * norm:
            return False
        basis.append(r / np.linalg.norm(r))
        kept_s.append(s)
        kept_t.append(t)
        return True

    admit(s0, t0)
    while queue:
        s, t = queue.popleft()
        for F_src, F_tgt in zip(source.f, target.f):
            s_new, t_new = F_src @ s, F_tgt @ t
            if admit(s_new, t_new):
                queue.append((s_new, t_new))
    return np.column_stack(kept_s), np.column_stack(kept_t)


def _solve_on_span(S, T):
    """m with m S = T and m = 0 on the orthogonal complement of span(S)"""
    Q, R = la.qr(S, mode='economic')
    return T @ la.solve_triangular(R, Q.conj().T)


@lru_cache(maxsize=None)
def build_intertwiner(kind, i, max_dim=None, threshold=None, settings=None):
    """m_i normalised by m_i(f_i v_i ^ v_i) = tensor of the v_j over the neighbours of i"""
    kind = kind if isinstance(kind, AlgebraKind) else AlgebraKind.parse(kind)
    limits = (settings or DEFAULT_SETTINGS).repkit
    max_dim = limits.max_dim if max_dim is None else max_dim
    threshold = limits.intertwiner_threshold if threshold is None else threshold
    data = cartan_data(kind)

    V = fundamental_rep(kind, i, settings)
    half = V.with_twist(V.twist_k + 0.5)
    source = exterior_power(half, 2, max_dim=max_dim)
    target = neighbour_product(kind, i, settings)

    v_i = highest_weight_vector(V)
    s0 = wedge_vectors(V.f[i - 1] @ v_i, v_i)
    t0 = tensor_vectors([highest_weight_vector(fundamental_rep(kind, j, settings)) for j in data.neighbours(i)])

    S, T = _span_pairs(source, target, s0, t0)
    logger.debug("m_%d of %s: submodule of dimension %d in %d -> %d", i, kind, S.shape[1], source.dim, target.dim)
    if S.shape[1] > target.dim:
        raise ConstructionError(f"m_{i} of {kind}: generated source span exceeds the target dimension")

    m = _solve_on_span(S, T)
    residual = equivariance_residual(m, source, target)
    if residual > threshold:
        raise ConstructionError(f"m_{i} of {kind}: equivariance residual {residual:.2e} exceeds {threshold:.0e}")

    return Intertwiner(
        source_label=f"wedge^2 V^({i})_{{1/2}} of {kind}",
        target_label=f"M^({i}) of {kind}",
        matrix=m, source=source, target=target, residual=residual,
    )
