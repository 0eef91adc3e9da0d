#!/usr/bin/env python3
"""
Airy Contours
Two rays joined by an arc, truncated where the integrand is negligible, with Gauss-Legendre panels
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from core.errors import AccuracyError, DomainError, RadiusError
from core.settings import DEFAULT_SETTINGS

logger = logging.getLogger(__name__)

MAX_RADIUS = 80.0
MAX_DOUBLINGS = 8


@lru_cache(maxsize=16)
def legendre_rule(points):
    """Gauss-Legendre nodes and weights on [-1, 1]"""
    nodes, weights = np.polynomial.legendre.leggauss(points)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _panel_rule(a, b, panels, points):
    """Composite rule on [a, b] (real parameter)"""
    nodes, weights = legendre_rule(points)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    t = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    return t, w


@dataclass(frozen=True)
class ContourSpec:
    """Path from e^{i(phi - theta)} inf to e^{i(phi + theta)} inf through the arc |s| = rho0"""
    family: str
    n: int
    order: int           # N, the exponent of the dominant term s^N / N
    theta: float         # half opening, pi / N
    rotation: float      # phi, the rotation angle of the whole contour
    rho0: float
    R: float

    def discretize(self, panels, points):
        """Nodes s and weights ds of the composite rule (incoming ray, arc, outgoing ray)"""
        lo, hi = self.rotation - self.theta, self.rotation + self.theta
        r, wr = _panel_rule(self.rho0, self.R, panels, points)
        a, wa = _panel_rule(lo, hi, panels, points)

        s_in = r[::-1] * np.exp(1j * lo)
        w_in = -wr[::-1] * np.exp(1j * lo)
        s_arc = self.rho0 * np.exp(1j * a)
        w_arc = 1j * s_arc * wa
        s_out = r * np.exp(1j * hi)
        w_out = wr * np.exp(1j * hi)
        return np.concatenate([s_in, s_arc, s_out]), np.concatenate([w_in, w_arc, w_out])

    def endpoints(self):
        return self.R * np.exp(1j * (self.rotation - self.theta)), self.R * np.exp(1j * (self.rotation + self.theta))


def contour_spec(family, n, order, x, magnitude, rotation=0.0, tail=None, settings=None):
    """Contour whose truncated ends carry integrand magnitude below tail

    magnitude(s) returns the largest |component| of the integrand times e^{-xs}.
    """
    tail = (settings or DEFAULT_SETTINGS).airy.tail if tail is None else tail
    theta = np.pi / order
    if abs(rotation) + theta >= np.pi:
        raise DomainError(f"rotated contour at {rotation:.4g} rad would cross the branch cut")
    rho0 = max(0.5, abs(x) ** (1.0 / (order - 1)))

    R = max(2.0, 2.0 * rho0)
    while True:
        ends = [R * np.exp(1j * (rotation + sign * theta)) for sign in (-1, 1)]
        worst = max(magnitude(s) for s in ends)
        if worst < tail:
            break
        R *= 1.25
        if R > MAX_RADIUS:
            raise RadiusError(f"integrand still {worst:.2e} at |s| = {MAX_RADIUS}; |x| = {abs(x):.4g} is too large")
    logger.debug("contour %s%d: rho0 = %.3g, R = %.3g, end magnitude %.2e", family, n, rho0, R, worst)
    return ContourSpec(family=family, n=n, order=order, theta=theta, rotation=rotation, rho0=rho0, R=R)


def integrate_contour(spec, integrand, points=None, stability=None, settings=None):
    """Panel-doubling quadrature of a vector integrand along the contour"""
    quadrature = (settings or DEFAULT_SETTINGS).airy
    points = quadrature.gauss_points if points is None else points
    stability = quadrature.stability if stability is None else stability

    panels = 4
    previous = None
    for _ in range(MAX_DOUBLINGS):
        s, w = spec.discretize(panels, points)
        current = w @ integrand(s)
        if previous is not None:
            change = np.max(np.abs(current - previous))
            if change <= stability * max(1.0, np.max(np.abs(current))):
                return current
        previous = current
        panels *= 2
    raise AccuracyError(f"contour quadrature did not stabilise to {stability:.0e} after {MAX_DOUBLINGS} doublings")
