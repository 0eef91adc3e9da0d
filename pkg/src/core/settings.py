#!/usr/bin/env python3
"""
ODE/IM Lab Settings
Default tolerances and paths, optionally overridden by config/lab_config.json
"""
import json
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from .errors import DomainError

BASE_DIR = Path(__file__).resolve().parents[2]
CONFIG_FILE = BASE_DIR / 'config' / 'lab_config.json'


@dataclass(frozen=True)
class SolverSettings:
    """Connection ODE integration"""
    tol: float = 1e-10
    match_threshold: float = 25.0   # |lambda| Re S at the matching radius
    far_action: float = 60.0        # action where the formal series starts
    far_epsilon: float = 1e-14      # |E| x^{-M h} at the far radius
    arc_chords: int = 12


@dataclass(frozen=True)
class RepkitSettings:
    """Representation construction and spectra"""
    gap_threshold: float = 1e-8
    imag_threshold: float = 1e-10
    chevalley_threshold: float = 1e-12
    intertwiner_threshold: float = 1e-9
    max_dim: int = 1500


@dataclass(frozen=True)
class PsiSystemSettings:
    """Default x grid of the Psi-system check"""
    x_min: float = 0.2
    x_max: float = 2.0
    points: int = 16


@dataclass(frozen=True)
class SpectralSettings:
    """Frobenius series, Q extraction and zero search"""
    genericity: float = 1e-6
    series_order: int = 40
    tail: float = 1e-12
    condition_limit: float = 1e12
    zero_window: tuple = (0.0, 40.0)
    grid_points: int = 81
    max_secant: int = 60


@dataclass(frozen=True)
class AirySettings:
    """Contour quadrature"""
    tail: float = 1e-14
    stability: float = 1e-12
    gauss_points: int = 24


@dataclass(frozen=True)
class StoreSettings:
    """SQLite results store"""
    path: str = 'data/odeim_results.db'

    @property
    def url(self):
        path = Path(self.path)
        if not path.is_absolute():
            path = BASE_DIR / path
        return f'sqlite:///{path}'


@dataclass(frozen=True)
class Settings:
    """All laboratory settings"""
    solver: SolverSettings = field(default_factory=SolverSettings)
    repkit: RepkitSettings = field(default_factory=RepkitSettings)
    psi_system: PsiSystemSettings = field(default_factory=PsiSystemSettings)
    spectral: SpectralSettings = field(default_factory=SpectralSettings)
    airy: AirySettings = field(default_factory=AirySettings)
    store: StoreSettings = field(default_factory=StoreSettings)


def _overlay(section, values, name):
    known = {f.name for f in fields(section)}
    unknown = set(values) - known
    if unknown:
        raise DomainError(f"Unknown keys in config section '{name}': {sorted(unknown)}")
    cleaned = {k: tuple(v) if isinstance(v, list) else v for k, v in values.items()}
    return replace(section, **cleaned)


def load_settings(path=None):
    """Load settings from JSON, falling back to defaults when the file is absent"""
    settings = Settings()
    path = Path(path) if path is not None else CONFIG_FILE
    if not path.exists():
        return settings

    with open(path, 'r') as f:
        raw = json.load(f)

    sections = {f.name for f in fields(settings)}
    unknown = set(raw) - sections
    if unknown:
        raise DomainError(f"Unknown config sections: {sorted(unknown)}")

    updates = {name: _overlay(getattr(settings, name), values, name) for name, values in raw.items()}
    return replace(settings, **updates)


DEFAULT_SETTINGS = Settings()
