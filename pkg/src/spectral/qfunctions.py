#!/usr/bin/env python3
"""
Spectral Determinants
Q^(i)(E) and Q~^(i)(E) as coefficients of the subdominant solution at x = 0
"""
import logging
from functools import lru_cache

import numpy as np

from cartan import AlgebraKind, cartan_data
from connection import ConnectionParams, SubdominantSolver
from core.errors import AccuracyError, DomainError
from core.settings import DEFAULT_SETTINGS
from repkit import normalized_family
from .frobenius import frobenius_basis, integer_degree
from .weyl import weyl_data

logger = logging.getLogger(__name__)

X0_CANDIDATES = (1.0, 0.7, 0.5, 0.35, 0.25, 0.18, 0.125)


class QFunctions:
    """Evaluator of (Q, Q~) at node i for fixed (M, l); E varies"""

    def __init__(self, kind, node, params, chamber=None, settings=None):
        self.kind = kind if isinstance(kind, AlgebraKind) else AlgebraKind.parse(kind)
        self.node = node
        self.params = params
        self.lab_settings = settings or DEFAULT_SETTINGS
        self.settings = self.lab_settings.spectral
        data = cartan_data(self.kind)
        if not 1 <= node <= data.rank:
            raise DomainError(f"node {node} outside 1..{data.rank}")
        self.mh = integer_degree(params.M, data.hvee)
        self.family = normalized_family(self.kind, settings)
        self.rep = self.family.reps[node]
        self.eigenpair = self.family.eigen[node]
        self.l_is_zero = params.ell_is_zero
        self.chamber = ('H' if chamber is None else chamber) if self.l_is_zero else chamber
        self.weyl = weyl_data(self.kind, node, params.ell, chamber=self.chamber, settings=settings)

    def _solver(self, E):
        return SubdominantSolver(self.rep, self.params.with_E(E), eigenpair=self.eigenpair, settings=self.lab_settings)

    def basis(self, E, order=None):
        """Frobenius basis whose chi and phi columns carry the Weyl-data normalisation"""
        params = self.params.with_E(E)
        mus = frobenius_basis(self.rep, params, order=1).mus
        a_chi = int(np.argmin(np.abs(mus - self.weyl.lstar)))
        a_phi = int(np.argmin(np.abs(mus - self.weyl.second)))
        leading = {a_chi: self.weyl.chi_vec, a_phi: self.weyl.phi_vec}
        return frobenius_basis(self.rep, params, order=order, leading=leading), a_chi, a_phi

    def choose_x0(self, basis):
        """Largest candidate radius where the series tail is below the tolerance"""
        window = self.mh + 1
        for x0 in X0_CANDIDATES:
            if basis.tail(x0, window) < self.settings.tail:
                return x0
        return None

    def extract(self, E, x0=None):
        """(Q, Q~, x0) at energy E"""
        E = complex(E)
        if self.l_is_zero:
            Q, Qt = self.at_zero(E)
            return Q, Qt, 0.0

        order = self.settings.series_order
        for _ in range(4):
            basis, a_chi, a_phi = self.basis(E, order)
            chosen = x0 if x0 is not None else self.choose_x0(basis)
            if chosen is not None and basis.tail(chosen, self.mh + 1) < self.settings.tail:
                break
            order *= 2
        else:
            raise AccuracyError(f"Frobenius series tail above {self.settings.tail:.0e}; use a smaller x0 or larger order")

        psi = self._solver(E).solve([chosen]).samples[0][1]
        B = basis.evaluate(chosen)
        norms = np.linalg.norm(B, axis=0)
        cond = np.linalg.cond(B / norms)
        if cond > self.settings.condition_limit:
            raise AccuracyError(f"Frobenius basis at x0 = {chosen} has condition {cond:.2e}")
        coeffs = np.linalg.solve(B, psi)
        logger.debug("node %d, E = %s: x0 = %.3g, order %d, condition %.2e", self.node, E, chosen, order, cond)
        return coeffs[a_chi], coeffs[a_phi], chosen

    def at_zero(self, E):
        """l = 0: projections of Psi(0, E) on chi and phi"""
        psi0 = self._solver(E).solve([0.0]).samples[0][1]
        chi, phi = self.weyl.chi_vec, self.weyl.phi_vec
        return np.vdot(chi, psi0) / np.vdot(chi, chi), np.vdot(phi, psi0) / np.vdot(phi, phi)

    def __call__(self, E):
        Q, Qt, _ = self.extract(E)
        return Q, Qt

    def Q(self, E):
        return self(E)[0]

    def Qtilde(self, E):
        return self(E)[1]


@lru_cache(maxsize=64)
def q_functions(kind, node, params, chamber=None, settings=None):
    """Cached QFunctions (params and settings are hashable)"""
    return QFunctions(kind, node, params, chamber, settings)


def extract_QQ(kind, i, params, E=None, x0=None, settings=None):
    """(Q^(i)(E), Q~^(i)(E)) for generic l"""
    E = params.E if E is None else E
    Q, Qt, _ = q_functions(kind, i, params.with_E(0.0), settings=settings).extract(E, x0)
    return Q, Qt


def q_at_zero_l0(kind, i, params, E=None, chamber='H', settings=None):
    """(Q, Q~) for l = 0 from Psi(0, E) and the Weyl vectors of the chosen chamber"""
    if not params.ell_is_zero:
        raise DomainError("q_at_zero_l0 requires l = 0")
    E = params.E if E is None else E
    return q_functions(kind, i, params.with_E(0.0), chamber, settings).at_zero(complex(E))


def linear_potential_params(kind, tol=None, settings=None):
    """M = 1/h, l = 0: p(x, E) = x - E"""
    kind = kind if isinstance(kind, AlgebraKind) else AlgebraKind.parse(kind)
    hvee = cartan_data(kind).hvee
    tol = (settings or DEFAULT_SETTINGS).solver.tol if tol is None else tol
    return ConnectionParams(kind=kind, M=1.0 / hvee, E=0.0, tol=tol)


def q_decay_fit(kind, node, Es, tol=None, settings=None):
    """Fit log|Q| = a |E|^{(h+1)/h} + b log|E| + c on E < 0 for the linear potential

    Returns the ratio of a to -lambda^(i) h/(h+1) and the fitted coefficients.
    """
    kind = kind if isinstance(kind, AlgebraKind) else AlgebraKind.parse(kind)
    hvee = cartan_data(kind).hvee
    params = linear_potential_params(kind, tol, settings)
    q = q_functions(kind, node, params, settings=settings)
    Es = np.asarray(Es, dtype=float)
    if np.any(Es >= 0):
        raise DomainError("the decay fit uses negative energies")
    logs = np.array([np.log(abs(q.at_zero(E)[0])) for E in Es])
    mag = np.abs(Es)
    design = np.column_stack([mag ** ((hvee + 1.0) / hvee), np.log(mag), np.ones_like(mag)])
    (a, b, c), *_ = np.linalg.lstsq(design, logs, rcond=None)
    lam = q.eigenpair.value
    expected = -lam * hvee / (hvee + 1.0)
    return {'ratio': a / expected, 'a': a, 'b': b, 'c': c, 'expected': expected}
