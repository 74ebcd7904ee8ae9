"""Exception taxonomy.

PreconditionError descendants map to CLI exit code 2, ConvergenceError
descendants to exit code 3.  InternalCheckError marks violated internal
invariants (never expected on valid inputs).
"""
from __future__ import annotations


class NevlabError(Exception):
    pass


class PreconditionError(NevlabError):
    """Invalid input or unmet operation precondition."""


class ParseError(PreconditionError):
    """Syntax error; carries the 0-based offset into the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InhomogeneousFormError(PreconditionError):
    pass


class DegenerateCurveError(PreconditionError):
    pass


class GeneralPositionError(PreconditionError):
    """Carries the offending subset of target indices when known."""

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        super().__init__(message)
        self.witness = witness


class ConvergenceError(NevlabError):
    """Numerical routine exhausted its budget without converging."""


class QuadratureError(ConvergenceError):
    def __init__(self, message: str, suggested_radius: float | None = None):
        super().__init__(message)
        self.suggested_radius = suggested_radius


class WindingError(ConvergenceError):
    pass


class InternalCheckError(NevlabError):
    """An invariant that should be unconditionally true failed."""


class RadiusPerturbedWarning(UserWarning):
    """Reported when a radius was nudged off a zero modulus."""
