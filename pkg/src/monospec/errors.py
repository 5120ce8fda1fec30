"""Exception hierarchy shared across the package."""


class MonospecError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionError(MonospecError):
    """Matrix shape is unusable for the requested operation."""


class NegativeEntry(MonospecError):
    """An entry is negative beyond the working tolerance."""


class RowSumError(MonospecError):
    """A row sum differs from 1 beyond the working tolerance."""


class MonotoneViolation(MonospecError):
    """Stochastic dominance fails between a pair of consecutive rows.

    Indices follow the mathematical 1-based convention: row ``k`` is not
    dominated by row ``k+1`` at column ``r``; ``deficit`` is the amount by
    which the suffix sum of row ``k`` exceeds that of row ``k+1``.
    """

    def __init__(self, k, r, deficit):
        self.k = int(k)
        self.r = int(r)
        self.deficit = float(deficit)
        super().__init__(
            f"row {self.k} is not dominated by row {self.k + 1}: "
            f"suffix sums from column {self.r} differ by {self.deficit:.3e}"
        )


class WitnessInvalid(MonospecError):
    """A corner-value witness does not satisfy the lifting system."""


class ConvergenceError(MonospecError):
    """Iterative root finding failed to reach the target residual."""


class PerronFailure(MonospecError):
    """Power iteration failed to converge on a non-negative block."""


class StochasticityFailure(MonospecError):
    """Diagonal similarity produced rows that are not stochastic.

    Signals numerical breakdown; carries the offending 0-based row index.
    """

    def __init__(self, row, error):
        self.row = int(row)
        self.error = float(error)
        super().__init__(
            f"similarity output row {self.row} deviates from sum 1 by {self.error:.3e}"
        )


class UnsupportedN(MonospecError):
    """No predicate is available for the requested dimension."""


class DomainError(MonospecError):
    """Scalar argument outside the documented domain."""


class AlphaOutOfRange(MonospecError):
    """Family parameter outside the family's declared range."""


class OutOfRegion(MonospecError):
    """Requested spectrum target lies outside the attainable region."""


class InvalidVector(MonospecError):
    """A vector fails to be stochastic within tolerance."""


class NotOnCurve(MonospecError):
    """An eigenvalue pair does not satisfy the named curve equation."""


class InternalBoundaryMismatch(MonospecError):
    """Family spectrum disagrees with the boundary parameterization.

    Raised loudly: this indicates an implementation bug, not bad input.
    """


class UnknownExperiment(MonospecError):
    """Experiment name not recognised by the driver."""
