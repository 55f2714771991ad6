"""Exception hierarchy shared across the package."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .params import FeasibilityReport


class CorrBetaError(ValueError):
    """Base class for all errors raised by ``corrbeta``."""


class InvalidTarget(CorrBetaError):
    """Marginal shapes or correlation outside their admissible domain."""


class InvalidInput(CorrBetaError):
    """Argument outside the domain of a numerical routine."""


class InvalidShape(InvalidInput):
    """Non-positive gamma shape."""


class Infeasible(CorrBetaError):
    """The requested target maps to a non-positive Dirichlet parameter."""

    def __init__(self, report: FeasibilityReport):
        self.report = report
        super().__init__(
            "target is infeasible; violated restrictions: " + ", ".join(report.violated)
        )


class TooManyRejections(CorrBetaError):
    """Johnk rejection loop exhausted its attempt budget for one draw."""

    def __init__(self, max_attempts: int):
        self.max_attempts = max_attempts
        super().__init__(f"no acceptance within {max_attempts} Johnk trials")
