from .embed import wedge_embed, tensor_embed
from .residual import PsiSystemReport, psi_system_residual, spin_node_consistency, default_grid

__all__ = [
    'wedge_embed', 'tensor_embed',
    'PsiSystemReport', 'psi_system_residual', 'spin_node_consistency', 'default_grid',
]
