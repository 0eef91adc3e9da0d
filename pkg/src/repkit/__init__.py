from .matrix_rep import (
    MatrixRep, make_rep, trivial_rep, lambda_matrix, grading_element, rep_residuals, validate_rep,
)
from .builders import (
    rep_A_standard, rep_D_standard, exterior_power, tensor_product, fundamental_rep, neighbour_product,
    exterior_basis, wedge_vectors, tensor_vectors, form_matrix_D, anti_transpose, anti_transpose_residual,
)
from .spin import spin_reps_D, clifford_generators
from .spectrum import (
    SpectrumReport, MaximalEigenpair, maximal_eigenpair, require_maximal, normalize_max_entry, fix_phase,
    gamma_h_twist, omega_h_twist, twist_identity_residual, highest_weight_vector, weight_of,
    spin_top_exterior,
)
from .intertwiner import Intertwiner, build_intertwiner, equivariance_residual
from .family import NormalizedFamily, normalized_family, normalize_family, wedge_constant

__all__ = [
    'MatrixRep', 'make_rep', 'trivial_rep', 'lambda_matrix', 'grading_element', 'rep_residuals', 'validate_rep',
    'rep_A_standard', 'rep_D_standard', 'exterior_power', 'tensor_product', 'fundamental_rep',
    'neighbour_product', 'exterior_basis', 'wedge_vectors', 'tensor_vectors', 'form_matrix_D',
    'anti_transpose', 'anti_transpose_residual',
    'spin_reps_D', 'clifford_generators',
    'SpectrumReport', 'MaximalEigenpair', 'maximal_eigenpair', 'require_maximal', 'normalize_max_entry',
    'fix_phase', 'gamma_h_twist', 'omega_h_twist', 'twist_identity_residual', 'highest_weight_vector',
    'weight_of', 'spin_top_exterior',
    'Intertwiner', 'build_intertwiner', 'equivariance_residual',
    'NormalizedFamily', 'normalized_family', 'normalize_family', 'wedge_constant',
]
