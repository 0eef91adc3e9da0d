#!/usr/bin/env python3
"""
Representation Builders
Standard representations of A_n and D_n, exterior and tensor powers, fundamental representations
"""
import logging
from functools import lru_cache, reduce
from itertools import combinations

import numpy as np
from scipy.special import comb

from cartan import AlgebraKind, cartan_data
from core.errors import DomainError, UnsupportedRepresentationError
from core.settings import DEFAULT_SETTINGS
from .matrix_rep import MatrixRep, make_rep, trivial_rep, validate_rep, note_grading_sign

logger = logging.getLogger(__name__)


def _unit(dim, i, j, value=1.0):
    """value * E_ij with 1-based indices"""
    m = np.zeros((dim, dim), dtype=complex)
    m[i - 1, j - 1] = value
    return m


def _as_kind(kind):
    return kind if isinstance(kind, AlgebraKind) else AlgebraKind.parse(kind)


def rep_A_standard(n, k=0.0):
    """Defining representation C^{n+1} of A_n evaluated at zeta = exp(2 pi i k)"""
    if n < 1:
        raise DomainError("A_n requires n >= 1")
    kind = AlgebraKind('A', n)
    d = n + 1
    e = [_unit(d, i, i + 1) for i in range(1, n + 1)]
    f = [_unit(d, i + 1, i) for i in range(1, n + 1)]
    h = [_unit(d, i, i) - _unit(d, i + 1, i + 1) for i in range(1, n + 1)]
    e0 = _unit(d, d, 1)
    rep = make_rep(kind, e, f, h, e0, k, f"V^(1) of {kind}")
    notes = note_grading_sign(kind, rep.grading)
    if notes:
        rep = MatrixRep(**{**rep.__dict__, 'notes': notes})
    return rep


def rep_D_standard(n, k=0.0):
    """Defining representation C^{2n} of D_n preserving the form B(u_i, u_i') = S_ii"""
    if n < 3:
        raise DomainError("D_n requires n >= 3")
    kind = AlgebraKind('D', n)
    d = 2 * n
    e, f, h = [], [], []
    for i in range(1, n):
        ei = _unit(d, i, i + 1) + _unit(d, 2 * n - i, 2 * n + 1 - i)
        e.append(ei)
        f.append(ei.T.copy())
        h.append(_commutator(ei, ei.T))
    en = 0.5 * (_unit(d, n - 1, n + 1) + _unit(d, n, n + 2))
    fn = 2.0 * (_unit(d, n + 1, n - 1) + _unit(d, n + 2, n))
    e.append(en)
    f.append(fn)
    h.append(_commutator(en, fn))
    e0 = 0.5 * (_unit(d, 2 * n - 1, 1) + _unit(d, 2 * n, 2))
    return make_rep(kind, e, f, h, e0, k, f"V^(1) of {kind}")


def _commutator(X, Y):
    return X @ Y - Y @ X


def form_matrix_D(n):
    """S = diag((-1)^{k+1}) for k <= n, mirrored on k' = 2n + 1 - k"""
    s = np.array([(-1) ** (k + 1) for k in range(1, n + 1)], dtype=float)
    return np.diag(np.concatenate([s, s[::-1]]))


def anti_transpose(G):
    """G^{at} = J G^T J with J the anti-diagonal identity"""
    return G.T[::-1, ::-1]


def anti_transpose_residual(rep):
    """max over generators of |G S + S G^{at}| for the defining D_n representation"""
    n = rep.kind.rank
    S = form_matrix_D(n)
    worst = 0.0
    for _, G in rep.generators():
        worst = max(worst, float(np.max(np.abs(G @ S + S @ anti_transpose(G)))))
    return worst


@lru_cache(maxsize=None)
def exterior_basis(dim, p):
    """Lexicographic basis of the p-th exterior power and its index lookup"""
    basis = list(combinations(range(dim), p))
    return basis, {b: idx for idx, b in enumerate(basis)}


def _sorted_sign(indices):
    """Sign of the permutation sorting indices, or 0 on a repeated index"""
    idx = list(indices)
    if len(set(idx)) < len(idx):
        return 0, None
    sign = 1
    for a in range(len(idx)):
        for b in range(len(idx) - 1 - a):
            if idx[b] > idx[b + 1]:
                idx[b], idx[b + 1] = idx[b + 1], idx[b]
                sign = -sign
    return sign, tuple(idx)


def wedge_derivation(X, p):
    """Action of X on the p-th exterior power by the Leibniz rule"""
    dim = X.shape[0]
    basis, index = exterior_basis(dim, p)
    out = np.zeros((len(basis), len(basis)), dtype=complex)
    columns = [np.nonzero(X[:, c])[0] for c in range(dim)]
    for col, wedge in enumerate(basis):
        for slot, c in enumerate(wedge):
            for a in columns[c]:
                replaced = wedge[:slot] + (a,) + wedge[slot + 1:]
                sign, key = _sorted_sign(replaced)
                if sign:
                    out[index[key], col] += sign * X[a, c]
    return out


def wedge_vectors(*vectors):
    """Coordinates of v_1 ^ ... ^ v_p in the lexicographic exterior basis"""
    V = np.column_stack([np.asarray(v, dtype=complex) for v in vectors])
    dim, p = V.shape
    basis, _ = exterior_basis(dim, p)
    if p == 2:
        rows = np.array(basis)
        a, b = V[:, 0], V[:, 1]
        return a[rows[:, 0]] * b[rows[:, 1]] - a[rows[:, 1]] * b[rows[:, 0]]
    return np.array([np.linalg.det(V[list(rows), :]) for rows in basis])


def tensor_vectors(vectors):
    """Kronecker product of the vectors in order (the empty product is [1])"""
    return reduce(np.kron, [np.asarray(v, dtype=complex) for v in vectors], np.ones(1, dtype=complex))


def exterior_power(rep, p, max_dim=None):
    """p-th exterior power of a representation"""
    if not 1 <= p <= rep.dim:
        raise DomainError(f"exterior power p={p} outside 1..{rep.dim}")
    max_dim = DEFAULT_SETTINGS.repkit.max_dim if max_dim is None else max_dim
    new_dim = int(comb(rep.dim, p, exact=True))
    if new_dim > max_dim:
        raise UnsupportedRepresentationError(
            f"exterior power of dimension {new_dim} exceeds the cap {max_dim}"
        )
    lift = lambda X: wedge_derivation(np.asarray(X), p)
    result = MatrixRep(
        kind=rep.kind, dim=new_dim,
        e=tuple(lift(X) for X in rep.e), f=tuple(lift(X) for X in rep.f),
        h=tuple(lift(X) for X in rep.h), e0=lift(rep.e0), grading=lift(rep.grading),
        twist_k=rep.twist_k, label=f"wedge^{p} {rep.label}", notes=rep.notes,
    )
    return result


def tensor_product(reps, max_dim=None):
    """Tensor product with the Leibniz action; all factors share the algebra and zeta"""
    reps = list(reps)
    if not reps:
        raise DomainError("tensor_product needs at least one factor (use trivial_rep)")
    kind = reps[0].kind
    for r in reps[1:]:
        if r.kind != kind:
            raise DomainError(f"tensor_product kind mismatch: {kind} vs {r.kind}")
        if abs(r.zeta - reps[0].zeta) > 1e-12:
            raise DomainError("tensor_product factors evaluated at different zeta")
    if len(reps) == 1:
        return reps[0]

    max_dim = DEFAULT_SETTINGS.repkit.max_dim if max_dim is None else max_dim
    dims = [r.dim for r in reps]
    total = int(np.prod(dims))
    if total > max_dim:
        raise UnsupportedRepresentationError(f"tensor product of dimension {total} exceeds the cap {max_dim}")

    def leibniz(mats):
        acc = np.zeros((total, total), dtype=complex)
        for slot, X in enumerate(mats):
            factors = [np.eye(d) for d in dims]
            factors[slot] = X
            acc += reduce(np.kron, factors)
        return acc

    n = len(reps[0].e)
    return MatrixRep(
        kind=kind, dim=total,
        e=tuple(leibniz([r.e[i] for r in reps]) for i in range(n)),
        f=tuple(leibniz([r.f[i] for r in reps]) for i in range(n)),
        h=tuple(leibniz([r.h[i] for r in reps]) for i in range(n)),
        e0=leibniz([r.e0 for r in reps]), grading=leibniz([r.grading for r in reps]),
        twist_k=reps[0].twist_k, label=' (x) '.join(r.label for r in reps),
    )


@lru_cache(maxsize=None)
def fundamental_rep(kind, i, settings=None):
    """V^(i) = L(omega_i) evaluated at twist p(i)/2"""
    kind = _as_kind(kind)
    limits = (settings or DEFAULT_SETTINGS).repkit
    data = cartan_data(kind)
    if not 1 <= i <= data.rank:
        raise DomainError(f"node {i} outside 1..{data.rank} for {kind}")
    twist = data.p(i) / 2.0
    n = kind.rank

    if kind.family == 'A':
        base = rep_A_standard(n, (i - 1) / 2.0)
        rep = base if i == 1 else exterior_power(base, i, max_dim=limits.max_dim)
    elif kind.family == 'D':
        if i <= n - 2:
            base = rep_D_standard(n, (i - 1) / 2.0)
            rep = base if i == 1 else exterior_power(base, i, max_dim=limits.max_dim)
        else:
            from .spin import spin_reps_D
            rep = spin_reps_D(n, twist)[0 if i == n - 1 else 1]
    else:
        raise UnsupportedRepresentationError(f"explicit representations of {kind} are not available")

    rep = MatrixRep(**{**rep.__dict__, 'twist_k': twist, 'label': f"V^({i}) of {kind}"})
    validate_rep(rep, limits.chevalley_threshold)
    logger.debug("built %s (dim %d, twist %s)", rep.label, rep.dim, twist)
    return rep


def neighbour_product(kind, i, settings=None):
    """M^(i): tensor product of V^(j) over the neighbours j of i, in increasing order"""
    kind = _as_kind(kind)
    data = cartan_data(kind)
    reps = [fundamental_rep(kind, j, settings) for j in data.neighbours(i)]
    if not reps:
        return trivial_rep(kind, (data.p(i) + 1) / 2.0)
    return tensor_product(reps, max_dim=(settings or DEFAULT_SETTINGS).repkit.max_dim)
