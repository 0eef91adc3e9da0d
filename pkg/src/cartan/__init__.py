from .dynkin import AlgebraKind, CartanData, cartan_data, dual_coxeter, incidence_matrix, node_parity
from .masses import pf_vector, pf_from_incidence, closed_form_masses, coxeter_check, phases, Phases

__all__ = [
    'AlgebraKind', 'CartanData', 'cartan_data', 'dual_coxeter', 'incidence_matrix', 'node_parity',
    'pf_vector', 'pf_from_incidence', 'closed_form_masses', 'coxeter_check', 'phases', 'Phases',
]
