"""
Scalar Shooting Oracle
Eigenvalues of -u'' + (x^{2M} + L(L+1)/x^2) u = E u on (0, inf), u ~ x^{L+1} at 0, by Wronskian matching
"""
import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

RTOL = 1e-12
ATOL = 1e-14


def potential(x, M, L):
    return x ** (2 * M) + L * (L + 1) / x ** 2


def _rhs(M, L, E):
    def f(x, y):
        return [y[1], (potential(x, M, L) - E) * y[0]]
    return f


def _left(E, M, L, x0, x_mid):
    # regular branch with its first correction
    c = -E / (2 * (2 * L + 3))
    u = x0 ** (L + 1) * (1 + c * x0 ** 2)
    du = (L + 1) * x0 ** L + c * (L + 3) * x0 ** (L + 2)
    sol = solve_ivp(_rhs(M, L, E), (x0, x_mid), [u, du], method='DOP853', rtol=RTOL, atol=ATOL * abs(u))
    return sol.y[:, -1]


def _right(E, M, L, X, x_mid):
    q = potential(X, M, L) - E
    dq = 2 * M * X ** (2 * M - 1) - 2 * L * (L + 1) / X ** 3
    u, du = 1e-30, -1e-30 * (np.sqrt(q) + dq / (4 * q))
    sol = solve_ivp(_rhs(M, L, E), (X, x_mid), [u, du], method='DOP853', rtol=RTOL, atol=1e-300)
    return sol.y[:, -1]


def far_point(E, M, action=40.0):
    return max((action * (M + 1)) ** (1.0 / (M + 1)), (2 * abs(E) + 1) ** (1.0 / (2 * M)) + 2.0)


def mismatch(E, M, L, x0=1e-3, x_mid=1.0):
    """Normalised Wronskian of the regular and the decaying solutions at x_mid"""
    left = _left(E, M, L, x0, x_mid)
    right = _right(E, M, L, far_point(E, M), x_mid)
    w = left[0] * right[1] - left[1] * right[0]
    return w / (np.linalg.norm(left) * np.linalg.norm(right))


def eigenvalues(M, L, count, step=0.2, E_max=60.0):
    """First count eigenvalues, bracketed on a grid and refined with brentq"""
    found = []
    grid = np.arange(step, E_max, step)
    previous = mismatch(grid[0], M, L)
    for a, b in zip(grid[:-1], grid[1:]):
        current = mismatch(b, M, L)
        if np.sign(current) != np.sign(previous):
            found.append(brentq(mismatch, a, b, args=(M, L), xtol=1e-13, rtol=1e-14))
            if len(found) == count:
                break
        previous = current
    return np.array(found)
