#!/usr/bin/env python3
"""
Matrix Representations
Chevalley generators, e0 and the grading element of one evaluation representation
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from cartan import cartan_data
from core.errors import ConstructionError
from core.settings import DEFAULT_SETTINGS

logger = logging.getLogger(__name__)

_sign_note_logged = set()


def _commutator(X, Y):
    return X @ Y - Y @ X


@dataclass(frozen=True)
class MatrixRep:
    """Evaluation representation V_k of the affine algebra at level zero

    e, f, h hold the Chevalley generators of nodes 1..n (index 0 is node 1),
    e0 already includes the evaluation factor zeta = exp(2 pi i k) and grading
    is the element H with [H, e_i] = e_i.
    """
    kind: object
    dim: int
    e: tuple
    f: tuple
    h: tuple
    e0: np.ndarray
    grading: np.ndarray
    twist_k: complex = 0.0
    label: str = ''
    notes: tuple = field(default=())

    @property
    def data(self):
        return cartan_data(self.kind)

    @property
    def zeta(self):
        return np.exp(2j * np.pi * self.twist_k)

    @property
    def is_diagonal_grading(self):
        H = self.grading
        return not np.any(H - np.diag(np.diag(H)))

    def generators(self):
        """Every generator with a short name, e0 included"""
        items = []
        for idx, (e, f, h) in enumerate(zip(self.e, self.f, self.h), start=1):
            items += [(f'e{idx}', e), (f'f{idx}', f), (f'h{idx}', h)]
        items.append(('e0', self.e0))
        return items

    def with_twist(self, k):
        """The same representation evaluated at zeta = exp(2 pi i k)"""
        factor = np.exp(2j * np.pi * (k - self.twist_k))
        return MatrixRep(
            kind=self.kind, dim=self.dim, e=self.e, f=self.f, h=self.h,
            e0=self.e0 * factor, grading=self.grading, twist_k=k,
            label=self.label,
            notes=self.notes,
        )

    def __repr__(self):
        return f"<MatrixRep {self.label or self.kind} dim={self.dim} k={self.twist_k}>"


def grading_element(kind, h):
    """H = sum_j a_j h_j with sum_j a_j C_ji = 1"""
    data = cartan_data(kind)
    a = np.linalg.solve(data.C.T.astype(float), np.ones(data.rank))
    H = sum(a_j * h_j for a_j, h_j in zip(a, h))
    return np.asarray(H, dtype=complex)


def make_rep(kind, e, f, h, e0_untwisted, k, label, notes=()):
    """Assemble a MatrixRep from untwisted generators"""
    e = tuple(np.asarray(m, dtype=complex) for m in e)
    f = tuple(np.asarray(m, dtype=complex) for m in f)
    h = tuple(np.asarray(m, dtype=complex) for m in h)
    zeta = np.exp(2j * np.pi * k)
    grading = grading_element(kind, h)
    rep = MatrixRep(
        kind=kind, dim=e[0].shape[0] if e else 1, e=e, f=f, h=h,
        e0=zeta * np.asarray(e0_untwisted, dtype=complex), grading=grading,
        twist_k=k, label=label, notes=tuple(notes),
    )
    for arr in (*rep.e, *rep.f, *rep.h, rep.e0, rep.grading):
        arr.setflags(write=False)
    return rep


def trivial_rep(kind, k=0.0):
    """One-dimensional representation on which every generator is zero"""
    n = cartan_data(kind).rank
    zero = np.zeros((1, 1), dtype=complex)
    return MatrixRep(
        kind=kind, dim=1, e=(zero,) * n, f=(zero,) * n, h=(zero,) * n,
        e0=zero, grading=zero, twist_k=k, label=f"trivial of {kind}",
    )


def lambda_matrix(rep):
    """Lambda = e0 + e_1 + ... + e_n"""
    return rep.e0 + sum(rep.e)


def rep_residuals(rep):
    """Max-norm residuals of the Chevalley and grading relations"""
    data = rep.data
    C = data.C
    n = data.rank
    res = {'hh': 0.0, 'he': 0.0, 'hf': 0.0, 'ef': 0.0, 'grading': 0.0, 'grading_e0': 0.0}

    for i in range(n):
        for j in range(n):
            res['hh'] = max(res['hh'], np.max(np.abs(_commutator(rep.h[i], rep.h[j]))))
            res['he'] = max(res['he'], np.max(np.abs(_commutator(rep.h[i], rep.e[j]) - C[i, j] * rep.e[j])))
            res['hf'] = max(res['hf'], np.max(np.abs(_commutator(rep.h[i], rep.f[j]) + C[i, j] * rep.f[j])))
            target = rep.h[i] if i == j else 0.0
            res['ef'] = max(res['ef'], np.max(np.abs(_commutator(rep.e[i], rep.f[j]) - target)))
        res['grading'] = max(res['grading'], np.max(np.abs(_commutator(rep.grading, rep.e[i]) - rep.e[i])))

    res['grading_e0'] = float(np.max(np.abs(
        _commutator(rep.grading, rep.e0) + (data.hvee - 1) * rep.e0
    )))
    res = {k: float(v) for k, v in res.items()}
    res['max'] = max(res.values())
    return res


def validate_rep(rep, threshold=None):
    """Raise ConstructionError when a relation fails; return the residual report"""
    threshold = DEFAULT_SETTINGS.repkit.chevalley_threshold if threshold is None else threshold
    res = rep_residuals(rep)
    if res['max'] > threshold:
        worst = max((k for k in res if k != 'max'), key=res.get)
        raise ConstructionError(
            f"{rep.label or rep.kind}: relation '{worst}' residual {res[worst]:.2e} exceeds {threshold:.0e}"
        )
    return res


def note_grading_sign(kind, H):
    """Log once per algebra when the derived grading of A_n is diag(n/2, ..., -n/2)"""
    if kind.family != 'A':
        return ()
    n = kind.rank
    expected = np.arange(n, -n - 1, -2) / 2.0
    if np.allclose(np.diag(H).real, expected) and kind not in _sign_note_logged:
        _sign_note_logged.add(kind)
        logger.warning(
            "%s: grading element from [H, e_i] = e_i is diag(n/2, ..., -n/2); "
            "the closed form diag(-n/2, ..., n/2) has the opposite sign", kind,
        )
    if np.allclose(np.diag(H).real, expected):
        return ('grading element is diag(n/2, ..., -n/2), the negative of diag(-n/2, ..., n/2)',)
    return ()
