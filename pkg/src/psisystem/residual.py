#!/usr/bin/env python3
"""
Psi-System Check
Compares m_i(Psi_{-1/2} ^ Psi_{1/2}) with the tensor product of the neighbouring Psi^(j)
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from cartan import AlgebraKind, cartan_data
from connection import psi_k, subdominant_solution
from core.errors import DomainError
from core.settings import DEFAULT_SETTINGS
from repkit import normalized_family
from .embed import tensor_embed, wedge_embed

logger = logging.getLogger(__name__)


@dataclass
class PsiSystemReport:
    node: int
    x_grid: list
    E: complex
    residuals: list
    max_residual: float
    tol: float = DEFAULT_SETTINGS.solver.tol
    normalization: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            'node': self.node, 'E': self.E, 'x_grid': list(self.x_grid),
            'residuals': list(self.residuals), 'max_residual': self.max_residual,
            'tol': self.tol, 'normalization': self.normalization,
        }


def default_grid(settings=None):
    grid = (settings or DEFAULT_SETTINGS).psi_system
    return list(np.geomspace(grid.x_min, grid.x_max, grid.points))


def _kind(kind):
    return kind if isinstance(kind, AlgebraKind) else AlgebraKind.parse(kind)


def _sides(family, i, params, x_grid, settings=None):
    """(left, right) arrays of shape (len(x_grid), dim M^(i))"""
    data = cartan_data(family.kind)
    rep = family.reps[i]
    pair = family.eigen[i]
    minus = psi_k(rep, params, -0.5, x_grid, eigenpair=pair, settings=settings)
    plus = psi_k(rep, params, 0.5, x_grid, eigenpair=pair, settings=settings)

    neighbour_traces = [
        subdominant_solution(family.reps[j], params, x_grid, eigenpair=family.eigen[j], settings=settings)
        for j in data.neighbours(i)
    ]
    m = family.intertwiners[i]
    left, right = [], []
    for idx in range(len(x_grid)):
        left.append(m(wedge_embed(minus.samples[idx][1], plus.samples[idx][1])))
        right.append(tensor_embed([t.samples[idx][1] for t in neighbour_traces]))
    return np.array(left), np.array(right)


def psi_system_residual(kind, i, params, x_grid=None, settings=None):
    """Relative residual of the Psi-system at node i on a grid of positive x"""
    kind = _kind(kind)
    data = cartan_data(kind)
    if not 1 <= i <= data.rank:
        raise DomainError(f"node {i} outside 1..{data.rank}")
    x_grid = sorted(default_grid(settings) if x_grid is None else [float(x) for x in x_grid], reverse=True)
    family = normalized_family(kind, settings)

    left, right = _sides(family, i, params, x_grid, settings)
    residuals = [
        float(np.linalg.norm(l - r) / max(np.linalg.norm(r), 1e-300)) for l, r in zip(left, right)
    ]
    report = PsiSystemReport(
        node=i, x_grid=x_grid, E=params.E, residuals=residuals,
        max_residual=max(residuals) if residuals else 0.0, tol=params.tol,
        normalization={
            'c_before': family.c_before[i - 1],
            'alpha': family.alpha[i - 1],
            'c_after': family.c_constants()[i - 1],
        },
    )
    logger.debug("%s node %d: max Psi-system residual %.3e", kind, i, report.max_residual)
    return report


def spin_node_consistency(kind, params, x_grid=None, settings=None):
    """max relative difference of the two left sides that both equal Psi^(n-2) for D_n"""
    kind = _kind(kind)
    if kind.family != 'D':
        raise DomainError("spin-node consistency applies to D_n only")
    n = kind.rank
    x_grid = sorted(default_grid(settings) if x_grid is None else [float(x) for x in x_grid], reverse=True)
    family = normalized_family(kind, settings)
    left_a, _ = _sides(family, n - 1, params, x_grid, settings)
    left_b, _ = _sides(family, n, params, x_grid, settings)
    diffs = [np.linalg.norm(a - b) / max(np.linalg.norm(a), 1e-300) for a, b in zip(left_a, left_b)]
    return float(max(diffs))
