#!/usr/bin/env python3
"""
QQ~-System and Bethe Equations
Residuals of the functional relations and the sampled Q table
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from cartan import Phases, cartan_data
from core.errors import DegenerateConfigurationError
from core.serialization import complex_columns
from .qfunctions import q_functions
from .weyl import beta_vector
from .zeros import certify_zero_count, find_q_zeros

logger = logging.getLogger(__name__)

COMMON_ZERO_TOL = 1e-10


def _setup(kind, i, params, chamber, settings=None):
    data = cartan_data(kind)
    q = q_functions(kind, i, params.with_E(0.0), chamber, settings)
    ph = Phases(data.hvee, params.M)
    return data, q, ph.omega_pow, ph.Omega_pow


def _neighbour_product(kind, i, params, E, chamber, settings=None):
    data = cartan_data(kind)
    value = 1.0 + 0j
    for j in data.neighbours(i):
        value *= q_functions(kind, j, params.with_E(0.0), chamber, settings).Q(E)
    return value


def qq_residual(kind, i, params, E, chamber=None, relative=False, settings=None):
    """prod_j Q^(j)(E)^{B_ij} - [w^{t/2} Q(W^{-1/2}E) Q~(W^{1/2}E) - w^{-t/2} Q(W^{1/2}E) Q~(W^{-1/2}E)]"""
    _, q, omega_pow, Omega_pow = _setup(kind, i, params, chamber, settings)
    theta = q.weyl.theta
    E = complex(E)
    Q_m, Qt_m = q(Omega_pow(-0.5) * E)
    Q_p, Qt_p = q(Omega_pow(0.5) * E)
    first = omega_pow(theta / 2) * Q_m * Qt_p
    second = omega_pow(-theta / 2) * Q_p * Qt_m
    lhs = _neighbour_product(kind, i, params, E, chamber, settings)
    residual = lhs - (first - second)
    if relative:
        scale = max(abs(lhs), abs(first), abs(second), 1e-300)
        return residual / scale
    return residual


def quasifatta_residuals(kind, i, params, E_zero, chamber=None, relative=True, settings=None):
    """Both specialisations of the QQ~-system at a zero E* of Q^(i)"""
    _, q, omega_pow, Omega_pow = _setup(kind, i, params, chamber, settings)
    theta = q.weyl.theta
    E_zero = complex(E_zero)
    Qt0 = q.Qtilde(E_zero)

    lhs_up = _neighbour_product(kind, i, params, Omega_pow(0.5) * E_zero, chamber, settings)
    rhs_up = -omega_pow(-theta / 2) * q.Q(Omega_pow(1) * E_zero) * Qt0
    lhs_down = _neighbour_product(kind, i, params, Omega_pow(-0.5) * E_zero, chamber, settings)
    rhs_down = omega_pow(theta / 2) * q.Q(Omega_pow(-1) * E_zero) * Qt0

    up, down = lhs_up - rhs_up, lhs_down - rhs_down
    if relative:
        up /= max(abs(lhs_up), abs(rhs_up), 1e-300)
        down /= max(abs(lhs_down), abs(rhs_down), 1e-300)
    return up, down


def bethe_residual(kind, i, params, E_zero, chamber=None, common_zero_tol=COMMON_ZERO_TOL, settings=None):
    """prod_j W^{beta_j C_ij} Q^(j)(W^{C_ij/2}E*) / Q^(j)(W^{-C_ij/2}E*) + 1"""
    data, _, _, Omega_pow = _setup(kind, i, params, chamber, settings)
    if chamber is None and params.ell_is_zero:
        chamber = 'H'
    betas = beta_vector(kind, params.ell, params.M, chamber, settings)
    E_zero = complex(E_zero)
    product = 1.0 + 0j
    for j in data.nodes:
        c = int(data.C[i - 1, j - 1])
        if c == 0:
            continue
        qj = q_functions(kind, j, params.with_E(0.0), chamber, settings)
        num = qj.Q(Omega_pow(c / 2) * E_zero)
        den = qj.Q(Omega_pow(-c / 2) * E_zero)
        if abs(den) < common_zero_tol * max(abs(num), abs(qj.Q(E_zero)), 1e-300):
            raise DegenerateConfigurationError(
                f"Q^({j}) vanishes at the shifted point {Omega_pow(-c / 2) * E_zero:.6g}; common zeros with Q^({i})"
            )
        product *= Omega_pow(betas[j - 1] * c) * num / den
    return product + 1.0


@dataclass
class QTable:
    """Q, Q~ sampled on an energy grid, with zeros and Bethe residuals"""
    kind: object
    node: int
    samples: list = field(default_factory=list)     # (E, Q, Qt)
    zeros: list = field(default_factory=list)       # QZero
    residuals: list = field(default_factory=list)   # Bethe residual per zero
    notes: tuple = ()
    certificate: object = None                       # ZeroCount when the search was certified

    def to_frame(self):
        Es = [s[0] for s in self.samples]
        data = {'E': np.real(Es)} if np.allclose(np.imag(Es), 0) else complex_columns({}, 'E', Es)
        complex_columns(data, 'Q', [s[1] for s in self.samples])
        complex_columns(data, 'Qtilde', [s[2] for s in self.samples])
        return pd.DataFrame(data)

    def to_dict(self):
        return {
            'algebra': str(self.kind),
            'node': self.node,
            'samples': [{'E': E, 'Q': Q, 'Qtilde': Qt} for E, Q, Qt in self.samples],
            'zeros': [
                {'E': z.E, 'abs_Q': z.abs_value, 'refined': z.refined, 'iterations': z.iterations,
                 'bethe_residual': r}
                for z, r in zip(self.zeros, self.residuals)
            ],
            'notes': list(self.notes),
            'certificate': self.certificate.to_dict() if self.certificate is not None else None,
        }

    @property
    def max_bethe(self):
        finite = [abs(r) for r in self.residuals if r is not None]
        return max(finite) if finite else 0.0


def build_qtable(kind, node, params, Es=(), window=None, max_zeros=None, chamber=None,
                 bethe=True, threads=1, grid_points=None, certify=False, settings=None):
    """Sample Q, Q~ on Es, locate zeros on the window and attach Bethe residuals

    With certify, the zeros on the whole window are checked against an argument-principle
    count before max_zeros is applied.
    """
    q = q_functions(kind, node, params.with_E(0.0), chamber, settings)
    Es = [complex(E) for E in Es]
    if threads and threads > 1 and len(Es) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(q, Es))
    else:
        values = [q(E) for E in Es]

    table = QTable(kind=kind, node=node, samples=[(E, Q, Qt) for E, (Q, Qt) in zip(Es, values)])
    if window is None and not bethe:
        return table

    window = q.settings.zero_window if window is None else window
    zeros = find_q_zeros(q, window, max_count=None if certify else max_zeros, grid_points=grid_points,
                         threads=threads, settings=settings)
    table.notes = ('zero search restricted to the real window; complex zeros are not reported',)
    if certify:
        table.certificate = certify_zero_count(q.Q, window, zeros, n=grid_points, threads=threads, settings=settings)
        if not table.certificate.consistent:
            table.notes += (f"argument principle counts {table.certificate.winding} zeros, "
                            f"{table.certificate.found} located",)
        zeros = zeros[:max_zeros] if max_zeros is not None else zeros
    table.zeros = zeros
    for z in table.zeros:
        if not bethe or not z.refined:
            table.residuals.append(None)
            continue
        table.residuals.append(bethe_residual(kind, node, params, z.E, chamber, settings=settings))
    return table
