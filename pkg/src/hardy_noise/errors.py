"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HardyNoiseError(Exception):
    """Base class for all package errors."""


class InvalidInput(HardyNoiseError, ValueError):
    """An argument violates a documented precondition."""


class InvalidSpec(InvalidInput):
    """A Schmidt specification violates one of its invariants.

    ``invariant`` is a short machine-readable tag (e.g. ``"p1 = p2"``).
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        msg = invariant if not detail else f"{invariant} ({detail})"
        super().__init__(msg)


class ColoredNoiseRequiresTwoQubits(InvalidInput):
    pass


class DensityError(InvalidInput):
    """A matrix failed a density-operator check.

    ``deviation`` is the measured size of the violation.
    """

    invariant = "density"

    def __init__(self, deviation: float, detail: str = ""):
        self.deviation = float(deviation)
        msg = f"{self.invariant}: deviation {self.deviation:.3e}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotHermitian(DensityError):
    invariant = "not Hermitian"


class TraceNotOne(DensityError):
    invariant = "trace != 1"


class NotPositive(DensityError):
    invariant = "negative eigenvalue"


class DimensionMismatch(InvalidInput):
    pass


class ConsistencyError(HardyNoiseError, ArithmeticError):
    """Internal numerical cross-check failed (e.g. a probability far outside [0, 1])."""
