#!/usr/bin/env python3
"""
Connection Integrator
Adaptive complex Runge-Kutta integration of Psi' = -(l/x + e + p(x, E) e0) Psi along straight segments
"""
import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from cartan import AlgebraKind
from core.errors import DomainError, IntegrationError
from core.settings import DEFAULT_SETTINGS
from .asymptotics import cpow

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConnectionParams:
    """Data of L(x, E) = d/dx + l/x + e + (x^{M h} - E) e0"""
    kind: AlgebraKind
    M: float
    E: complex = 0.0
    ell: tuple = ()
    tol: float = DEFAULT_SETTINGS.solver.tol
    x_match: float = None

    def __post_init__(self):
        if not self.M > 0:
            raise DomainError(f"M must be positive, got {self.M}")
        if not self.ell:
            object.__setattr__(self, 'ell', (0.0,) * self.kind.rank)
        if len(self.ell) != self.kind.rank:
            raise DomainError(f"ell needs {self.kind.rank} coefficients, got {len(self.ell)}")
        object.__setattr__(self, 'ell', tuple(complex(v) for v in self.ell))
        object.__setattr__(self, 'E', complex(self.E))

    @property
    def ell_is_zero(self):
        return all(v == 0 for v in self.ell)

    def with_E(self, E):
        return ConnectionParams(self.kind, self.M, E, self.ell, self.tol, self.x_match)

    def with_tol(self, tol):
        return ConnectionParams(self.kind, self.M, self.E, self.ell, tol, self.x_match)

    def with_ell(self, ell):
        return ConnectionParams(self.kind, self.M, self.E, tuple(ell), self.tol, self.x_match)

    def with_x_match(self, x_match):
        return ConnectionParams(self.kind, self.M, self.E, self.ell, self.tol, x_match)


@dataclass
class SolutionTrace:
    """Values of a vector solution sampled along a ray, ordered by decreasing |x|"""
    rep_label: str
    ray_angle: float
    samples: list
    k: complex = 0.0
    meta: dict = field(default_factory=dict)

    @property
    def xs(self):
        return np.array([x for x, _ in self.samples])

    @property
    def values(self):
        return np.array([v for _, v in self.samples])

    def value_at(self, x, rel=1e-12):
        for xi, v in self.samples:
            if abs(xi - x) <= rel * max(abs(x), 1.0):
                return v
        raise KeyError(x)


def ell_matrix(rep, ell):
    """l = sum_j l_j h_j acting on the representation"""
    return sum(complex(c) * h for c, h in zip(ell, rep.h))


class Connection:
    """Right-hand side of the linear ODE in one representation"""

    def __init__(self, rep, params):
        self.rep = rep
        self.params = params
        self.hvee = rep.data.hvee
        self.mh = params.M * self.hvee
        self.e_sum = sum(rep.e)
        self.e0 = rep.e0
        self.ell = ell_matrix(rep, params.ell)
        self.has_ell = not params.ell_is_zero

    def potential(self, x):
        return cpow(x, self.mh) - self.params.E if x != 0 else -self.params.E

    def matrix(self, x):
        """A(x) with Psi' = A(x) Psi"""
        A = -(self.e_sum + self.potential(x) * self.e0)
        if self.has_ell:
            A = A - self.ell / x
        return A

    def rhs(self, x, psi):
        return self.matrix(x) @ psi

    def residual(self, x, psi, dpsi):
        """|Psi' - A Psi| / |Psi|"""
        return np.linalg.norm(dpsi - self.rhs(x, psi)) / max(np.linalg.norm(psi), 1e-300)


def integrate(rep, params, x_from, x_to, init, sample_xs=(), connection=None):
    """Integrate from x_from to x_to along the straight segment, recording the sample points"""
    x_from, x_to = complex(x_from), complex(x_to)
    conn = connection if connection is not None else Connection(rep, params)
    init = np.asarray(init, dtype=complex)
    direction = x_to - x_from

    if direction == 0:
        return SolutionTrace(rep.label, float(np.angle(x_from)), [(x_from, init)], meta={'tol': params.tol})

    # segment must avoid 0 unless the l/x term is absent
    t0 = -(x_from * np.conj(direction)).real / abs(direction) ** 2
    closest = x_from + np.clip(t0, 0.0, 1.0) * direction
    if abs(closest) < 1e-14 * max(abs(x_from), abs(x_to)) and conn.has_ell:
        raise DomainError("integration segment passes through the singular point x = 0")

    ts = []
    for x in sample_xs:
        t = ((complex(x) - x_from) / direction)
        if abs(t.imag) > 1e-9 or not -1e-12 <= t.real <= 1 + 1e-12:
            raise DomainError(f"sample x = {x} is not on the segment")
        ts.append(min(max(t.real, 0.0), 1.0))
    ts = sorted(set(ts + [1.0]))

    if not np.any(init):
        samples = [(x_from + t * direction, np.zeros_like(init)) for t in ts]
        return SolutionTrace(rep.label, float(np.angle(x_to if x_to != 0 else x_from)), samples, meta={'tol': params.tol})

    scale = np.max(np.abs(init))

    def f(t, y):
        return direction * conn.rhs(x_from + t * direction, y)

    sol = solve_ivp(
        f, (0.0, 1.0), init, method='DOP853', dense_output=True,
        rtol=params.tol, atol=params.tol * scale * 1e-6,
    )
    if sol.status != 0:
        # last accepted step
        t_fail = sol.t[-1] if len(sol.t) else 0.0
        raise IntegrationError(f"connection integration failed: {sol.message}", location=x_from + t_fail * direction)

    values = sol.sol(ts)
    samples = [(x_from + t * direction, values[:, idx]) for idx, t in enumerate(ts)]
    samples[-1] = (x_to, sol.y[:, -1])
    logger.debug("integrated %s from %s to %s in %d evaluations", rep.label, x_from, x_to, sol.nfev)
    angle = float(np.angle(x_to if x_to != 0 else x_from))
    return SolutionTrace(rep.label, angle, samples, meta={'tol': params.tol, 'nfev': int(sol.nfev)})
