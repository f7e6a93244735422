"""Exception hierarchy.

Three families matter to callers (and map onto CLI exit codes):

* :class:`MathematicalRejection` -- the input is outside the supported class
  (not quasihomogeneous, non-isolated, ambiguous weights).
* :class:`NumericError` -- a floating-point procedure failed its guard.
* :class:`InternalConsistencyError` -- an identity that must hold for valid
  input was violated; always an upstream bug, never a valid result.
"""


class SinglabError(Exception):
    """Base class for all package errors."""

    kind = "Error"

    def __init__(self, message="", hint=None):
        super().__init__(message)
        self.hint = hint

    def to_dict(self):
        d = {"error": self.kind, "message": str(self)}
        if self.hint:
            d["hint"] = self.hint
        return d


class ParseError(SinglabError, ValueError):
    kind = "ParseError"

    def __init__(self, message, position=None, hint=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message, hint)
        self.position = position

    def to_dict(self):
        d = super().to_dict()
        if self.position is not None:
            d["position"] = self.position
        return d


class MathematicalRejection(SinglabError):
    kind = "MathematicalRejection"


class NoSolution(MathematicalRejection):
    kind = "NoSolution"


class NonUnique(MathematicalRejection):
    kind = "NonUnique"


class NonPositive(MathematicalRejection):
    kind = "NonPositive"


class NonIsolated(MathematicalRejection):
    kind = "NonIsolated"


class NotSingular(MathematicalRejection):
    kind = "NotSingular"


class NumericError(SinglabError):
    kind = "NumericError"


class ConvergenceBudgetExceeded(NumericError):
    kind = "ConvergenceBudgetExceeded"


class SingularPoint(NumericError):
    kind = "SingularPoint"


class PhaseStepTooLarge(NumericError):
    kind = "PhaseStepTooLarge"


class DriftExceeded(NumericError):
    kind = "DriftExceeded"


class InternalConsistencyError(SinglabError):
    kind = "InternalConsistencyError"


class SymmetryViolation(InternalConsistencyError):
    kind = "SymmetryViolation"


class OrderViolation(InternalConsistencyError):
    kind = "OrderViolation"


class IntegralityViolation(InternalConsistencyError):
    kind = "IntegralityViolation"


class ConsistencyViolation(InternalConsistencyError):
    kind = "ConsistencyViolation"
