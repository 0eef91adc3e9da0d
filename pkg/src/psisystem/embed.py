#!/usr/bin/env python3
"""
Wedge and Tensor Coordinates
Vectors of the second exterior power and of tensor products in the bases used by repkit
"""
import numpy as np

from core.errors import DomainError
from repkit import tensor_vectors, wedge_vectors


def wedge_embed(u, v):
    """Coordinates of u ^ v in the lexicographic basis e_a ^ e_b, a < b"""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.ndim != 1 or u.shape != v.shape:
        raise DomainError(f"wedge_embed needs two vectors of equal length, got {u.shape} and {v.shape}")
    if u.size < 2:
        raise DomainError("wedge of vectors of length < 2 is zero-dimensional")
    return wedge_vectors(u, v)


def tensor_embed(vectors):
    """Kronecker coordinates of v_1 (x) ... (x) v_m; the empty product is [1]"""
    vectors = [np.asarray(v, dtype=complex) for v in vectors]
    for v in vectors:
        if v.ndim != 1:
            raise DomainError("tensor_embed takes one-dimensional vectors")
    return tensor_vectors(vectors)
