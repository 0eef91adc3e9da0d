from .errors import (
    OdeImError, DomainError, UnsupportedRepresentationError, ConstructionError,
    IntegrationError, NonGenericError, AccuracyError, RadiusError,
    DegenerateConfigurationError,
)
from .settings import (
    Settings, SolverSettings, RepkitSettings, PsiSystemSettings, SpectralSettings,
    AirySettings, StoreSettings, load_settings, DEFAULT_SETTINGS, BASE_DIR, CONFIG_FILE,
)
from .serialization import (
    SCHEMA_VERSION, encode, decode_complex, make_document, write_json, write_csv,
    complex_columns, trace_frame,
)

__all__ = [
    'OdeImError', 'DomainError', 'UnsupportedRepresentationError', 'ConstructionError',
    'IntegrationError', 'NonGenericError', 'AccuracyError', 'RadiusError',
    'DegenerateConfigurationError',
    'Settings', 'SolverSettings', 'RepkitSettings', 'PsiSystemSettings', 'SpectralSettings',
    'AirySettings', 'StoreSettings', 'load_settings', 'DEFAULT_SETTINGS', 'BASE_DIR', 'CONFIG_FILE',
    'SCHEMA_VERSION', 'encode', 'decode_complex', 'make_document', 'write_json', 'write_csv',
    'complex_columns', 'trace_frame',
]
