#!/usr/bin/env python3
"""
ODE/IM Lab Errors
Exception hierarchy shared by every package; each class knows its CLI exit code
"""


class OdeImError(Exception):
    """Base class for all laboratory errors"""
    exit_code = 1


class DomainError(OdeImError, ValueError):
    """Input outside the mathematical domain of an operation"""
    exit_code = 2


class UnsupportedRepresentationError(OdeImError):
    """Representation not available or without a maximal eigenvalue"""
    exit_code = 3


class ConstructionError(OdeImError):
    """A constructed object failed its own self-check"""
    exit_code = 4


class IntegrationError(OdeImError):
    """ODE solver stopped before reaching the end of the path"""
    exit_code = 5

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location

    def __str__(self):
        base = super().__str__()
        if self.location is None:
            return base
        return f"{base} (at x = {complex(self.location):.6g})"


class NonGenericError(OdeImError):
    """Resonant or tied eigenvalues of the l-matrix"""
    exit_code = 6

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class AccuracyError(OdeImError):
    """Numerical conditioning too poor for the requested accuracy"""
    exit_code = 7


class RadiusError(OdeImError):
    """Quadrature tail bound cannot be met"""
    exit_code = 8


class DegenerateConfigurationError(OdeImError):
    """Q functions share a zero at the shifted Bethe points"""
    exit_code = 9
