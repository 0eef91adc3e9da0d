#!/usr/bin/env python3
"""
Half-Spin Representations of D_n
Fermionic Clifford construction restricted to even and odd Fock parity
"""
import logging
from functools import reduce

import numpy as np
import scipy.linalg as la

from cartan import AlgebraKind
from core.errors import ConstructionError, DomainError
from .builders import rep_D_standard, form_matrix_D
from .matrix_rep import make_rep, validate_rep

logger = logging.getLogger(__name__)

_SIGMA_PLUS = np.array([[0.0, 0.0], [1.0, 0.0]])   # |0> -> |1>
_Z = np.diag([1.0, -1.0])
_I2 = np.eye(2)


def _creation(n, k):
    """a_k^dagger on n fermionic modes with a Jordan-Wigner string (k is 0-based)"""
    factors = [_Z] * k + [_SIGMA_PLUS] + [_I2] * (n - k - 1)
    return reduce(np.kron, factors)


def clifford_generators(n):
    """gamma_a for the basis u_1..u_2n, with {gamma_a, gamma_b} = B_ab"""
    S = np.diag(form_matrix_D(n))
    gammas = [None] * (2 * n)
    for k in range(n):
        create = _creation(n, k)
        gammas[k] = create
        gammas[2 * n - 1 - k] = S[k] * create.T
    return gammas


def spin_image(A, gammas, B_inv):
    """rho(A) = 1/2 sum K_ab gamma_a gamma_b with K = A B^{-1}"""
    K = A @ B_inv
    dim = gammas[0].shape[0]
    out = np.zeros((dim, dim), dtype=complex)
    for a, b in zip(*np.nonzero(K)):
        out += 0.5 * K[a, b] * (gammas[a] @ gammas[b])
    return out


def fock_parity(n):
    """Occupation-number parity of each Fock basis state (bit 0 is mode n)"""
    states = np.arange(2 ** n)
    return np.array([bin(s).count('1') % 2 for s in states])


def _highest_weight(e_mats, dim):
    stacked = np.vstack(e_mats) if e_mats else np.zeros((1, dim))
    null = la.null_space(stacked)
    if null.shape[1] != 1:
        raise ConstructionError(f"half-spin block has {null.shape[1]} highest-weight vectors")
    return null[:, 0]


def spin_reps_D(n, k=0.0):
    """(V^(n-1), V^(n)) of D_n, each of dimension 2^{n-1}, evaluated at zeta = exp(2 pi i k)"""
    if n < 3:
        raise DomainError("D_n requires n >= 3")
    kind = AlgebraKind('D', n)
    standard = rep_D_standard(n, 0.0)
    B = form_matrix_D(n)[:, ::-1]           # B_{k,k'} = S_kk
    B_inv = np.linalg.inv(B)
    gammas = clifford_generators(n)

    lift = lambda A: spin_image(np.asarray(A), gammas, B_inv)
    e = [lift(X) for X in standard.e]
    f = [lift(X) for X in standard.f]
    h = [lift(X) for X in standard.h]
    e0 = lift(standard.e0)

    parity = fock_parity(n)
    blocks = {}
    for p in (0, 1):
        idx = np.nonzero(parity == p)[0]
        sub = lambda X: X[np.ix_(idx, idx)]
        e_b, f_b, h_b = [sub(X) for X in e], [sub(X) for X in f], [sub(X) for X in h]
        v = _highest_weight(e_b, len(idx))
        weights = [np.vdot(v, H @ v).real for H in h_b]
        label = n - 1 if abs(weights[n - 2] - 1.0) < 1e-9 else n
        logger.debug("D%d parity %d block has highest weight %s -> node %d", n, p, np.round(weights, 9), label)
        rep = make_rep(kind, e_b, f_b, h_b, sub(e0), k, f"V^({label}) of {kind}")
        validate_rep(rep)
        blocks[label] = rep

    if set(blocks) != {n - 1, n}:
        raise ConstructionError(f"half-spin blocks of D{n} do not carry weights omega_{n - 1} and omega_{n}")
    return blocks[n - 1], blocks[n]
