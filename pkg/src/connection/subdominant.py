#!/usr/bin/env python3
"""
Subdominant Solutions
Fastest-decaying solution at large x, its rotations Psi_k and related diagnostics
"""
import logging

import numpy as np
import scipy.linalg as la
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from core.errors import DomainError, IntegrationError
from core.settings import DEFAULT_SETTINGS
from repkit import lambda_matrix, omega_h_twist, require_maximal
from .asymptotics import cpow, exact_action, log_root, subdominant_initial
from .integrator import Connection, SolutionTrace, ell_matrix, integrate

logger = logging.getLogger(__name__)


class SubdominantSolver:
    """Subdominant solution Psi(x, E) of one connection

    Psi is fixed by Psi ~ e^{-lambda S} q^{-H} psi. It is computed in the gauge
    Z = e^{lambda S_P} P^{H} Psi with P = p^{1/h}: a formal 1/s series at a far
    radius, a stiff sweep down to x_match, then the raw connection inward.
    """

    def __init__(self, rep, params, eigenpair=None, settings=None):
        self.rep = rep
        self.params = params
        self.settings = (settings or DEFAULT_SETTINGS).solver
        self.pair = require_maximal(rep, settings=settings) if eigenpair is None else eigenpair
        self.lam = self.pair.value
        self.psi = self.pair.psi
        self.psi_left = self.pair.psi_left
        self.hvee = rep.data.hvee
        self.M = params.M
        self.mh = params.M * self.hvee
        self.conn = Connection(rep, params)

        self.Lambda = lambda_matrix(rep)
        self.T = self.Lambda - self.lam * np.eye(rep.dim)
        self.H = rep.grading
        self.H_diag = np.diag(self.H) if rep.is_diagonal_grading else None
        self.ell = ell_matrix(rep, params.ell) if not params.ell_is_zero else np.zeros_like(self.T)

        spectrum = la.eigvals(self.Lambda)
        others = np.delete(spectrum, np.argmin(np.abs(spectrum - self.lam)))
        self.spectral_gap = float(np.min(np.abs(others - self.lam))) if len(others) else 1.0

    # gauge helpers

    def _power_H(self, log_value, sign=1):
        if self.H_diag is not None:
            return np.diag(np.exp(sign * log_value * self.H_diag))
        return la.expm(sign * log_value * self.H)

    def z_to_psi(self, x, E, Z):
        """Psi = e^{-lambda S_P} P^{-H} Z"""
        S = exact_action(x, self.M, self.hvee, E)
        logP = log_root(x, self.M, self.hvee, E)
        return np.exp(-self.lam * S) * (self._power_H(logP, -1) @ Z)

    def psi_to_z(self, x, E, psi_value):
        S = exact_action(x, self.M, self.hvee, E)
        logP = log_root(x, self.M, self.hvee, E)
        return np.exp(self.lam * S) * (self._power_H(logP, 1) @ psi_value)

    def leading_term(self, x, E):
        """e^{-lambda S} q^{-H} psi with the truncated root q"""
        return subdominant_initial(self.rep, self.params.with_E(E), x, self.pair)

    def leading_deviation(self, x, E, psi_value):
        """|Psi - leading term| relative to the leading term, None once it underflows"""
        lead = self.leading_term(x, E)
        scale = np.linalg.norm(lead)
        if not np.isfinite(scale) or scale == 0.0:
            return None
        return float(np.linalg.norm(psi_value - lead) / scale)

    # radii

    def x_min(self, E):
        """Smallest radius where the binomial series of the action converges comfortably"""
        if E == 0:
            return 0.0
        return (2.0 * abs(E)) ** (1.0 / self.mh)

    def matching_radius(self, E, sample_radius=0.0):
        """Smallest x >= x_min with |lambda| Re S_P(x) >= match_threshold"""
        target = self.settings.match_threshold
        lo = max(self.x_min(E), 1e-3)

        def excess(x):
            return abs(self.lam) * exact_action(x, self.M, self.hvee, E).real - target

        if excess(lo) >= 0:
            x_match = lo
        else:
            hi = max(2.0 * lo, 1.0)
            while excess(hi) < 0:
                hi *= 2.0
            x_match = brentq(excess, lo, hi, xtol=1e-12)
        if self.params.x_match is not None:
            x_match = max(x_match, float(self.params.x_match))
        return max(x_match, float(sample_radius))

    def far_radius(self, E, x_match):
        radius = x_match
        if E != 0:
            radius = max(radius, (abs(E) / self.settings.far_epsilon) ** (1.0 / self.mh))
        s_needed = self.settings.far_action / self.spectral_gap
        radius = max(radius, ((self.M + 1.0) * s_needed) ** (1.0 / (self.M + 1.0)))
        return radius

    # formal series at the far radius

    def formal_series(self, x, max_terms=60):
        """Z(x) = sum_k z_k s^{-k}, s = x^{M+1}/(M+1), optimally truncated"""
        n = self.rep.dim
        D = (self.ell - self.M * self.H) / (self.M + 1.0)
        drift = self.psi_left @ D @ self.psi
        if abs(drift) > 1e-8:
            logger.warning("%s: psi_L D psi = %.3e is not zero; series normalisation is approximate", self.rep.label, abs(drift))
        projector = np.eye(n) - np.outer(self.psi, self.psi_left)
        resolvent = la.inv(self.T + np.outer(self.psi, self.psi_left)) @ projector

        s = cpow(x, self.M + 1.0) / (self.M + 1.0)
        z = self.psi.astype(complex)
        total = z.copy()
        last = np.inf
        used = 0
        for k in range(max_terms):
            y = resolvent @ ((k * np.eye(n) - D) @ z)
            a = (self.psi_left @ D @ y) / (k + 1.0)
            z = y + a * self.psi
            term = z * s ** (-(k + 1))
            size = np.linalg.norm(term)
            if size > last:
                break
            total += term
            used = k + 1
            last = size
            if size < 1e-18 * np.linalg.norm(total):
                break
        logger.debug("%s: formal series at |x| = %.4g used %d terms (last %.2e)", self.rep.label, abs(x), used, last)
        return total

    # gauge sweep

    def _z_sweep(self, E, angle, r_far, r_match):
        """Stiff inward sweep of Z along the ray arg x = angle in the variable t = log r"""
        phase = np.exp(1j * angle)
        Z_far = self.formal_series(r_far * phase)
        if r_far <= r_match * (1 + 1e-14):
            return Z_far

        M, mh = self.M, self.mh

        def jac(t, _z=None):
            x = np.exp(t) * phase
            u = E * cpow(x, -mh) if E != 0 else 0.0
            logP = M * np.log(x) + (np.log1p(-u) / self.hvee if E != 0 else 0.0)
            xP = x * np.exp(logP)
            dlog = M / (1.0 - u)
            return -xP * self.T - self.ell + dlog * self.H

        # Radau works on real systems, so split Z into real and imaginary parts
        n = self.rep.dim

        def real_jac(t, _y=None):
            J = jac(t)
            return np.block([[J.real, -J.imag], [J.imag, J.real]])

        def f(t, y):
            return real_jac(t) @ y

        y0 = np.concatenate([Z_far.real, Z_far.imag])
        sol = solve_ivp(
            f, (np.log(r_far), np.log(r_match)), y0, method="Radau", jac=real_jac,
            rtol=self.params.tol, atol=self.params.tol * 1e-3,
        )
        if sol.status != 0:
            raise IntegrationError(f"gauge sweep failed: {sol.message}", location=np.exp(sol.t[-1]) * phase)
        logger.debug("%s: gauge sweep %.4g -> %.4g took %d steps", self.rep.label, r_far, r_match, len(sol.t))
        return sol.y[:n, -1] + 1j * sol.y[n:, -1]

    def value_at_match(self, E, angle=0.0, sample_radius=0.0):
        """(x_match on the ray, Psi there, radii used)"""
        r_match = self.matching_radius(E, sample_radius)
        r_far = self.far_radius(E, r_match)
        Z = self._z_sweep(E, angle, r_far, r_match)
        x = r_match * np.exp(1j * angle)
        psi = self.z_to_psi(x, E, Z)
        deviation = self.leading_deviation(x, E, psi) if angle == 0.0 else None
        if deviation is not None:
            logger.debug("%s: leading asymptotics off by %.2e at x_match = %.4g", self.rep.label, deviation, r_match)
        return x, psi, {'x_match': r_match, 'x_far': r_far, 'leading_deviation': deviation}

    # public solutions

    def solve(self, sample_xs, E=None):
        """Psi at real sample points (ordered by decreasing x)"""
        E = self.params.E if E is None else complex(E)
        xs = sorted((complex(x) for x in sample_xs), key=lambda z: -abs(z))
        for x in xs:
            if x.imag != 0 or x.real < 0:
                raise DomainError(f"sample x = {x} is not on the positive real axis")
            if x == 0 and self.conn.has_ell:
                raise DomainError("x = 0 is a singular point when l is not zero")
        radius = max((abs(x) for x in xs), default=0.0)
        x_match, psi_match, radii = self.value_at_match(E, 0.0, radius)
        return self._inward(x_match, psi_match, xs, E, 0.0, radii)

    def _inward(self, x_start, psi_start, xs, E, angle, radii, connection=None):
        params = self.params.with_E(E)
        conn = connection if connection is not None else (
            self.conn if E == self.params.E else Connection(self.rep, params)
        )
        samples = []
        current_x, current = x_start, psi_start
        if not xs:
            samples = [(x_start, psi_start)]
        else:
            end = xs[-1]
            trace = integrate(self.rep, params, current_x, end, current, xs, connection=conn)
            lookup = dict(trace.samples)
            for x in xs:
                match = min(lookup, key=lambda z: abs(z - x))
                samples.append((x, lookup[match]))
        meta = {'tol': self.params.tol, **radii}
        return SolutionTrace(self.rep.label, angle, samples, meta=meta)


def subdominant_solution(rep, params, sample_xs, eigenpair=None, settings=None):
    """Psi(x, E) at positive real sample points"""
    return SubdominantSolver(rep, params, eigenpair, settings).solve(sample_xs)


def _arc(solver, E, r, theta, psi_start, conn):
    """Carry a solution along the circle |x| = r from angle 0 to theta by straight chords"""
    chords = max(1, int(solver.settings.arc_chords))
    angles = np.linspace(0.0, theta, chords + 1)
    current = psi_start
    params = solver.params.with_E(E)
    for a0, a1 in zip(angles[:-1], angles[1:]):
        x0, x1 = r * np.exp(1j * a0), r * np.exp(1j * a1)
        trace = integrate(solver.rep, params, x0, x1, current, connection=conn)
        current = trace.samples[-1][1]
    return current


def psi_k(rep, params, k, sample_xs, eigenpair=None, settings=None):
    """Psi_k(x, E) = omega^{-k H} Psi(omega^k x, Omega^k E) at positive real samples"""
    hvee = rep.data.hvee
    M = params.M
    theta = 2.0 * np.pi * k / (hvee * (M + 1.0))
    if abs(theta) > np.pi / (2.0 * (M + 1.0)) + 1e-12:
        raise DomainError(f"rotation k = {k} leaves the sector |arg x| < pi/(2(M+1))")

    solver = SubdominantSolver(rep, params, eigenpair, settings)
    E_rot = params.E * np.exp(2j * np.pi * M * k / (M + 1.0))
    xs = sorted((float(np.real(x)) for x in sample_xs), reverse=True)
    radius = max(xs, default=0.0)

    x_match, psi_match, radii = solver.value_at_match(E_rot, 0.0, radius)
    r = abs(x_match)
    conn = Connection(rep, params.with_E(E_rot))
    psi_arc = _arc(solver, E_rot, r, theta, psi_match, conn) if theta != 0 else psi_match

    rot = np.exp(1j * theta)
    rotated_xs = [x * rot for x in xs]
    trace = solver._inward(r * rot, psi_arc, rotated_xs, E_rot, theta, radii, connection=conn)

    back = omega_h_twist(rep, M, -k)
    samples = [(complex(x), back @ v) for x, (_, v) in zip(xs, trace.samples)]
    return SolutionTrace(rep.label, 0.0, samples, k=k, meta={**trace.meta, 'rotation': theta, 'E_rotated': E_rot})


def rotated_family(rep, params, l, x, eigenpair=None, settings=None):
    """Columns Psi_{(1-l)/2}, ..., Psi_{(l-1)/2} at x and their smallest normalised singular value"""
    if l < 1:
        raise DomainError("l must be at least 1")
    ks = [(1 - l) / 2.0 + j for j in range(l)]
    columns = [psi_k(rep, params, k, [x], eigenpair, settings).samples[0][1] for k in ks]
    matrix = np.column_stack(columns)
    normalised = matrix / np.linalg.norm(matrix, axis=0)
    sv = la.svdvals(normalised)
    return matrix, float(sv[-1])


def e_derivative(rep, params, xs, dE=1e-4, eigenpair=None, settings=None):
    """Central difference dPsi/dE at the samples"""
    plus = subdominant_solution(rep, params.with_E(params.E + dE), xs, eigenpair, settings)
    minus = subdominant_solution(rep, params.with_E(params.E - dE), xs, eigenpair, settings)
    return [(x, (vp - vm) / (2 * dE)) for (x, vp), (_, vm) in zip(plus.samples, minus.samples)]
