from .asymptotics import (
    QExpansion, q_expansion, action, exact_action, log_root, cpow, subdominant_initial,
)
from .integrator import ConnectionParams, SolutionTrace, Connection, ell_matrix, integrate
from .subdominant import (
    SubdominantSolver, subdominant_solution, psi_k, rotated_family, e_derivative,
)

__all__ = [
    'QExpansion', 'q_expansion', 'action', 'exact_action', 'log_root', 'cpow', 'subdominant_initial',
    'ConnectionParams', 'SolutionTrace', 'Connection', 'ell_matrix', 'integrate',
    'SubdominantSolver', 'subdominant_solution', 'psi_k', 'rotated_family', 'e_derivative',
]
