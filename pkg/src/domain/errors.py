from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from domain.symplectic import PhysicalityReport


class SteerlabError(Exception):
    """Base exception for Gaussian steering analysis errors."""

    ...


class InvalidInputError(SteerlabError, ValueError):
    """Raised when an argument is outside its admissible range or has the wrong shape."""

    def __init__(self, msg: str = "Invalid input."):
        super().__init__(msg)


class InconsistentInvariantsError(SteerlabError):
    """Raised when symplectic invariants admit no real canonical form."""

    def __init__(self, msg: str = "Symplectic invariants are inconsistent with a physical state."):
        super().__init__(msg)


class NumericalDegeneracyError(SteerlabError):
    """Raised when a closed-form expression hits a singular denominator or negative radicand."""

    def __init__(self, msg: str = "Numerically degenerate configuration."):
        super().__init__(msg)


class UnsupportedVariantError(SteerlabError):
    """Raised when an operation is not defined for the given measurement variant."""

    def __init__(self, msg: str = "Operation not supported for this measurement variant."):
        super().__init__(msg)


class InternalConsistencyError(SteerlabError):
    """Raised when two independent evaluations of the same criterion disagree."""

    def __init__(self, msg: str = "Internal consistency check failed."):
        super().__init__(msg)


class UnphysicalStateError(SteerlabError):
    """Raised when a covariance matrix violates the uncertainty relation."""

    def __init__(self, report: PhysicalityReport, msg: str = "Covariance matrix violates the uncertainty relation."):
        super().__init__(msg)
        self.report = report


class OutputError(SteerlabError):
    """Raised when a result file cannot be written."""

    def __init__(self, msg: str = "Output path is not writable."):
        super().__init__(msg)
