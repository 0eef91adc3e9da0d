from .weyl import WeylData, weyl_data, weyl_vectors, extremal_pair, beta_vector
from .frobenius import FrobeniusBasis, frobenius_basis, integer_degree, check_resonance, series_residual
from .qfunctions import (
    QFunctions, q_functions, extract_QQ, q_at_zero_l0, linear_potential_params, q_decay_fit,
)
from .zeros import (
    QZero, ZeroCount, find_zeros, find_q_zeros, certify_zero_count, secant,
    winding_number, winding_number_of_path, rectangle_path,
)
from .relations import QTable, qq_residual, quasifatta_residuals, bethe_residual, build_qtable

__all__ = [
    'WeylData', 'weyl_data', 'weyl_vectors', 'extremal_pair', 'beta_vector',
    'FrobeniusBasis', 'frobenius_basis', 'integer_degree', 'check_resonance', 'series_residual',
    'QFunctions', 'q_functions', 'extract_QQ', 'q_at_zero_l0', 'linear_potential_params', 'q_decay_fit',
    'QZero', 'ZeroCount', 'find_zeros', 'find_q_zeros', 'certify_zero_count',
    'secant', 'winding_number', 'winding_number_of_path', 'rectangle_path',
    'QTable', 'qq_residual', 'quasifatta_residuals', 'bethe_residual', 'build_qtable',
]
