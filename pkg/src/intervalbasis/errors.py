"""Exception hierarchy.

Every error carries a ``kind`` (the class name) so the CLI can report it in a
machine-readable way.
"""

from __future__ import annotations


class IntervalBasisError(Exception):
    """Base class for all errors raised by this package."""

    @property
    def kind(self) -> str:
        return type(self).__name__

    @property
    def detail(self) -> str:
        return str(self)


class DivisionByZero(IntervalBasisError, ZeroDivisionError):
    pass


class MixedFields(IntervalBasisError, TypeError):
    pass


class DimensionMismatch(IntervalBasisError, ValueError):
    pass


class ShapeMismatch(IntervalBasisError, ValueError):
    """A structure map has the wrong shape. ``index`` is the 1-based map index."""

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"structure map {index} has the wrong shape")


class IndexOutOfRange(IntervalBasisError, IndexError):
    pass


class ConvergenceFailure(IntervalBasisError, ArithmeticError):
    pass


class InconsistentSystem(IntervalBasisError, ArithmeticError):
    pass


class NotClosedUnderFaces(IntervalBasisError, ValueError):
    def __init__(self, simplex, missing_face):
        self.simplex = tuple(simplex)
        self.missing_face = tuple(missing_face)
        super().__init__(
            f"simplex {list(self.simplex)} is present but its face "
            f"{list(self.missing_face)} is not"
        )


class NotASubcomplex(IntervalBasisError, ValueError):
    pass


class NotAChainComplex(IntervalBasisError, ValueError):
    pass


class NotInCycleSpace(IntervalBasisError, ArithmeticError):
    pass


class TolMismatch(IntervalBasisError, ArithmeticError):
    pass


class ParseError(IntervalBasisError, ValueError):
    pass


class StepError(IntervalBasisError):
    """Aggregates failures of independent per-step tasks.

    ``failures`` is a list of ``(step, exception)`` pairs sorted by step.
    """

    def __init__(self, failures):
        self.failures = sorted(failures, key=lambda item: item[0])
        parts = [f"step {step}: {exc.__class__.__name__}: {exc}" for step, exc in self.failures]
        super().__init__("; ".join(parts))

    @property
    def kind(self) -> str:
        kinds = {getattr(exc, "kind", type(exc).__name__) for _, exc in self.failures}
        return kinds.pop() if len(kinds) == 1 else "StepError"
