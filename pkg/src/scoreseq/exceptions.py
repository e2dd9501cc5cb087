"""Exception types shared across the toolkit.

Every error carries a short machine-readable ``code`` so the CLI can emit
structured error payloads and pick the right exit status.
"""


class ScoreSeqError(Exception):
    """Base class for all toolkit errors."""

    code = "error"


class DimensionError(ScoreSeqError):
    """Operands have incompatible lengths or shapes."""

    code = "dimension"


class ValidationError(ScoreSeqError):
    """A value violates a type invariant (sortedness, sums, ranges)."""

    code = "validation"


class NotMajorizedError(ScoreSeqError):
    """The target sequence is not majorized by the reference sequence."""

    code = "not_majorized"


class BoundaryError(ScoreSeqError):
    """The sequence sits on the feasible boundary, where no finite rating fit exists."""

    code = "boundary"


class ConvergenceError(ScoreSeqError):
    """The iterative solver ran out of iterations; carries the best residual seen."""

    code = "convergence"

    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class DecompositionError(ScoreSeqError):
    """No perfect matching on the positive support during decomposition."""

    code = "decomposition"


class NotTransitiveError(ScoreSeqError):
    """The win matrix is not strongly stochastically transitive."""

    code = "not_transitive"


class PerturbationRangeError(ScoreSeqError):
    """A perturbation would push a probability outside [0, 1]."""

    code = "range"


class SingularObjectiveError(ScoreSeqError):
    """The objective is infinite at a probability of exactly 0 or 1."""

    code = "singular_objective"


class EnumerationSizeError(ScoreSeqError):
    """Exhaustive enumeration was requested beyond the supported size."""

    code = "size"
