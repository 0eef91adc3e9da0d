from .contour import ContourSpec, contour_spec, integrate_contour, legendre_rule
from .functions import (
    airy_A, airy_D, airy_vector, airy_asymptote_A, rotated_airy, integrand, integrand_derivative,
    integrand_ode_residual, component_powers, contour_order, algebra_of, predicted_kappa, airy_zero_value,
)
from .validation import compare_with_connection, linear_connection

__all__ = [
    'ContourSpec', 'contour_spec', 'integrate_contour', 'legendre_rule',
    'airy_A', 'airy_D', 'airy_vector', 'airy_asymptote_A', 'rotated_airy', 'integrand', 'integrand_derivative',
    'integrand_ode_residual', 'component_powers', 'contour_order', 'algebra_of', 'predicted_kappa',
    'airy_zero_value',
    'compare_with_connection', 'linear_connection',
]
