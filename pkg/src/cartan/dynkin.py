#!/usr/bin/env python3
"""
Dynkin Data
Cartan and incidence matrices, dual Coxeter numbers and node parity for ADE algebras
"""
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from core.errors import DomainError
from .masses import pf_from_incidence

FAMILIES = ('A', 'D', 'E')


@dataclass(frozen=True)
class AlgebraKind:
    """Simply-laced family and rank"""
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"Unknown family '{self.family}' (expected A, D or E)")
        if not isinstance(self.rank, (int, np.integer)) or isinstance(self.rank, bool):
            raise DomainError(f"Rank must be an integer, got {self.rank!r}")
        if self.family == 'A' and self.rank < 1:
            raise DomainError("A_n requires n >= 1")
        if self.family == 'D' and self.rank < 3:
            raise DomainError("D_n requires n >= 3")
        if self.family == 'E' and self.rank not in (6, 7, 8):
            raise DomainError("E_n requires n in {6, 7, 8}")

    @classmethod
    def parse(cls, text):
        """Parse names such as 'A3', 'd4' or 'E_8'"""
        match = re.fullmatch(r'\s*([ADEade])_?(\d+)\s*', str(text))
        if not match:
            raise DomainError(f"Cannot parse algebra '{text}'")
        return cls(match.group(1).upper(), int(match.group(2)))

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class CartanData:
    """Static data of one ADE algebra (nodes are numbered from 1)"""
    kind: AlgebraKind
    C: np.ndarray
    B: np.ndarray
    hvee: int
    parity: tuple
    pf: np.ndarray

    @property
    def rank(self):
        return self.kind.rank

    @property
    def nodes(self):
        return range(1, self.rank + 1)

    def neighbours(self, i):
        """Nodes j with B_ij = 1"""
        return [j for j in self.nodes if self.B[i - 1, j - 1]]

    def p(self, i):
        return self.parity[i - 1]


def _edges(kind):
    n = kind.rank
    if kind.family == 'A':
        return [(i, i + 1) for i in range(1, n)]
    if kind.family == 'D':
        chain = [(i, i + 1) for i in range(1, n - 2)]
        return chain + [(n - 2, n - 1), (n - 2, n)]
    # E series: the branch node hangs off the third node from the short end
    if n == 6:
        return [(1, 2), (2, 3), (3, 5), (5, 6), (3, 4)]
    if n == 7:
        return [(1, 2), (2, 3), (3, 4), (4, 6), (6, 7), (4, 5)]
    return [(1, 2), (2, 3), (3, 4), (4, 5), (5, 7), (7, 8), (5, 6)]


def dual_coxeter(kind):
    n = kind.rank
    if kind.family == 'A':
        return n + 1
    if kind.family == 'D':
        return 2 * n - 2
    return {6: 12, 7: 18, 8: 30}[n]


def incidence_matrix(kind):
    n = kind.rank
    B = np.zeros((n, n), dtype=int)
    for i, j in _edges(kind):
        B[i - 1, j - 1] = B[j - 1, i - 1] = 1
    return B


def node_parity(B):
    """p(1) = 0 and p(i) = p(j) + 1 for a neighbour j < i"""
    n = B.shape[0]
    parity = [0] * n
    for i in range(1, n):
        lower = [j for j in range(i) if B[i, j]]
        if not lower:
            raise DomainError(f"Node {i + 1} has no lower-numbered neighbour")
        parity[i] = (parity[lower[0]] + 1) % 2
    return tuple(parity)


@lru_cache(maxsize=None)
def _cartan_data(kind):
    B = incidence_matrix(kind)
    C = 2 * np.eye(kind.rank, dtype=int) - B
    hvee = dual_coxeter(kind)
    parity = node_parity(B)
    pf = pf_from_incidence(B)
    for arr in (B, C, pf):
        arr.setflags(write=False)
    return CartanData(kind=kind, C=C, B=B, hvee=hvee, parity=parity, pf=pf)


def cartan_data(kind):
    """Cartan data for an AlgebraKind or a name such as 'E6'"""
    if not isinstance(kind, AlgebraKind):
        kind = AlgebraKind.parse(kind)
    return _cartan_data(kind)
