#!/usr/bin/env python3
"""
Zero Search
Grid scan with secant refinement on a real window, and an argument-principle certificate
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from core.settings import DEFAULT_SETTINGS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QZero:
    E: complex
    value: complex
    refined: bool
    iterations: int
    scale: float

    @property
    def abs_value(self):
        return abs(self.value)


def sample_function(f, points, threads=1):
    """f at every point, optionally on a thread pool"""
    points = list(points)
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return np.array(list(pool.map(f, points)), dtype=complex)
    return np.array([f(p) for p in points], dtype=complex)


def secant(f, a, b, fa=None, fb=None, max_iter=60, xtol=1e-12):
    """Secant iteration on an analytic function; returns (root, f(root), iterations, converged)"""
    fa = f(a) if fa is None else fa
    fb = f(b) if fb is None else fb
    for it in range(1, max_iter + 1):
        denom = fb - fa
        if denom == 0:
            return b, fb, it, False
        c = b - fb * (b - a) / denom
        fc = f(c)
        a, fa, b, fb = b, fb, c, fc
        if abs(b - a) <= xtol * max(1.0, abs(b)):
            return b, fb, it, True
    return b, fb, max_iter, False


def _candidate_intervals(grid, values):
    """Sign changes of the phase-aligned real part and interior minima of |f|"""
    ref = values[np.argmax(np.abs(values))]
    aligned = (values * np.conj(ref) / abs(ref)).real if abs(ref) > 0 else values.real
    mags = np.abs(values)
    found = set()
    for k in range(len(grid) - 1):
        if aligned[k] == 0 or np.sign(aligned[k]) != np.sign(aligned[k + 1]):
            found.add(k)
    for k in range(1, len(grid) - 1):
        if mags[k] < mags[k - 1] and mags[k] < mags[k + 1]:
            left = k - 1 if mags[k - 1] < mags[k + 1] else k
            if left not in found and left - 1 not in found and left + 1 not in found:
                found.add(left)
    return sorted(found)


def find_zeros(f, window, grid_points=None, max_count=None, max_secant=None, threads=1, rel_tol=1e-8, settings=None):
    """Zeros of f on a real window, ordered by real part"""
    search = (settings or DEFAULT_SETTINGS).spectral
    grid_points = search.grid_points if grid_points is None else grid_points
    max_secant = search.max_secant if max_secant is None else max_secant
    lo, hi = float(window[0]), float(window[1])
    if not hi > lo:
        return []

    grid = np.linspace(lo, hi, grid_points)
    values = sample_function(f, grid, threads)
    zeros = []
    for k in _candidate_intervals(grid, values):
        scale = float(max(abs(values[k]), abs(values[k + 1])))
        root, froot, its, converged = secant(f, grid[k], grid[k + 1], values[k], values[k + 1], max_secant)
        if not lo - 1e-9 <= np.real(root) <= hi + 1e-9:
            continue
        refined = converged and abs(froot) < rel_tol * max(scale, 1e-300)
        if not refined:
            logger.warning("unrefined zero candidate near E = %.6g (|f| = %.2e)", np.real(root), abs(froot))
        if any(abs(root - z.E) < 1e-8 * max(1.0, abs(root)) for z in zeros):
            continue
        zeros.append(QZero(E=complex(root), value=complex(froot), refined=refined, iterations=its, scale=scale))
    zeros.sort(key=lambda z: z.E.real)
    if max_count is not None:
        zeros = zeros[:max_count]
    return zeros


def winding_number_of_path(values):
    """Winding number around 0 of a closed path, by counting crossings of the positive real axis"""
    x, y = np.real(values), np.imag(values)
    if x[-1] != x[0] or y[-1] != y[0]:
        x, y = np.append(x, x[0]), np.append(y, y[0])
    winding = 0
    above = y[0] >= 0
    for k in range(1, len(x)):
        if (y[k] >= 0) != above:
            above = y[k] >= 0
            if x[k] > 0 and x[k - 1] > 0:
                winding += 2 * above - 1
            elif not (x[k] <= 0 and x[k - 1] <= 0):
                crossing = (x[k - 1] * y[k] - x[k] * y[k - 1]) / (y[k] - y[k - 1])
                if crossing > 0:
                    winding += 2 * above - 1
    return int(winding)


def rectangle_path(rectangle, points_per_side):
    """Counter-clockwise boundary of (re_lo, re_hi, im_lo, im_hi)"""
    re_lo, re_hi, im_lo, im_hi = rectangle
    t = np.linspace(0.0, 1.0, points_per_side, endpoint=False)
    bottom = re_lo + (re_hi - re_lo) * t + 1j * im_lo
    right = re_hi + 1j * (im_lo + (im_hi - im_lo) * t)
    top = re_hi - (re_hi - re_lo) * t + 1j * im_hi
    left = re_lo + 1j * (im_hi - (im_hi - im_lo) * t)
    return np.concatenate([bottom, right, top, left, [bottom[0]]])


def winding_number(f, rectangle, n=64, threads=1):
    """Number of zeros of an analytic f inside the rectangle (argument principle)"""
    path = rectangle_path(rectangle, n)
    values = sample_function(f, path, threads)
    return winding_number_of_path(values)


@dataclass(frozen=True)
class ZeroCount:
    """Argument-principle count around a real window against the zeros located on it"""
    rectangle: tuple
    winding: int
    found: int

    @property
    def consistent(self):
        return self.winding == self.found

    def to_dict(self):
        return {'rectangle': list(self.rectangle), 'winding': self.winding, 'found': self.found,
                'consistent': self.consistent}


def certify_zero_count(f, window, zeros, height=None, n=None, threads=1, settings=None):
    """Compare the zeros found on window with the winding number of f around a thin rectangle

    The rectangle spans the window and reaches height above and below the real axis
    (one scan spacing by default), so complex zeros close to the window are counted too.
    """
    search = (settings or DEFAULT_SETTINGS).spectral
    lo, hi = float(window[0]), float(window[1])
    if not hi > lo:
        return ZeroCount(rectangle=(lo, hi, 0.0, 0.0), winding=0, found=0)
    n = search.grid_points if n is None else n
    height = (hi - lo) / max(n - 1, 1) if height is None else height
    rectangle = (lo, hi, -height, height)
    winding = winding_number(f, rectangle, n, threads)
    found = sum(1 for z in zeros if lo <= z.E.real <= hi and abs(z.E.imag) <= height)
    count = ZeroCount(rectangle=rectangle, winding=winding, found=found)
    if not count.consistent:
        logger.warning("argument principle counts %d zeros in %s but %d were located", winding, rectangle, found)
    return count


def find_q_zeros(q, window=None, max_count=None, grid_points=None, threads=1, settings=None):
    """Zeros of Q^(i) on a real energy window (q is a QFunctions evaluator)"""
    settings = settings or q.lab_settings
    window = settings.spectral.zero_window if window is None else window
    logger.info("searching zeros of Q^(%d) on [%g, %g]; real-window search may miss complex zeros",
                q.node, window[0], window[1])
    return find_zeros(q.Q, window, grid_points=grid_points, max_count=max_count, threads=threads, settings=settings)
