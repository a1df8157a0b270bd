"""Exception types.

Two families matter to callers: ``DegenerateError`` (the input sits on or
near an excluded configuration) and ``InfeasibleError`` (the input is
well-formed but no transformation with the requested property exists).
"""


class QuatCrossError(Exception):
    code = "error"


class DegenerateError(QuatCrossError):
    code = "degenerate"


class InfeasibleError(QuatCrossError):
    code = "infeasible"


class DivisionByZero(DegenerateError, ZeroDivisionError):
    code = "division_by_zero"


class SingularMatrix(DegenerateError):
    code = "singular_matrix"


class DuplicatePoints(DegenerateError):
    code = "duplicate_points"


class DegenerateInput(DegenerateError):
    code = "degenerate_input"


class InfiniteCrossRatio(DegenerateError):
    code = "infinite_cross_ratio"


class ZeroVector(DegenerateError):
    code = "zero_vector"


class HypothesisViolation(DegenerateError):
    code = "hypothesis_violation"


class FitFailure(DegenerateError):
    code = "fit_failure"


class GeneratorExhausted(QuatCrossError):
    code = "generator_exhausted"


class NormMismatch(InfeasibleError):
    code = "norm_mismatch"


class Infeasible(InfeasibleError):
    code = "infeasible"


class InvariantMismatch(InfeasibleError):
    """Raised when two configurations have different Moebius invariants.

    ``reason`` names the first failed condition: ``"norm"``,
    ``"real_part"`` or ``"distance"`` (the imaginary-part distance of the
    two cross-ratios in the five point problem).
    """

    code = "invariant_mismatch"

    def __init__(self, message, reason="norm"):
        super().__init__(message)
        self.reason = reason
