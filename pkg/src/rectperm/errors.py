"""Exception hierarchy for rectperm.

Every domain failure raises a subclass of PermutonError so callers (and the
CLI exit-code mapping) can distinguish domain errors from I/O problems.
"""


class PermutonError(Exception):
    """Base class for all rectperm domain errors."""


class InvalidOrder(PermutonError):
    """Grid order n is not a positive integer."""


class NotAPermutation(PermutonError):
    """Sequence is not a permutation of 0..n-1."""


class NotAPermuton(PermutonError):
    """Matrix fails the grid-permuton invariants (nonnegativity / marginals)."""


class ShapeError(PermutonError):
    """Input matrix is not square."""


class OddOrder(PermutonError):
    """Operation requires an even grid order."""


class InvalidShift(PermutonError):
    """Shift amount is not 0 or n/2."""


class SinkhornDiverged(PermutonError):
    """Sinkhorn normalization did not converge within max_iters."""

    def __init__(self, residual: float, max_iters: int):
        self.residual = residual
        self.max_iters = max_iters
        super().__init__(
            f"Sinkhorn did not converge in {max_iters} iterations "
            f"(marginal residual {residual:.3e})"
        )


class BadWeights(PermutonError):
    """Mixture weights are negative or do not sum to 1."""


class OrderMismatch(PermutonError):
    """Operands have different grid orders."""


class OverlapError(PermutonError):
    """Blocks in a block specification overlap."""


class RectError(PermutonError):
    """Rectangle is out of range for the grid order."""


class DegenerateRect(PermutonError):
    """Toric-quartet operation on a full-width or full-height rectangle."""


class NotACandidate(PermutonError):
    """Adversary requested for a half-periodic permuton (a Chebyshev center)."""


class NotACenter(PermutonError):
    """Witness operation requires a half-periodic first argument."""


class BadWitnessSquare(PermutonError):
    """Square is not a valid trivial-witness square for the measure."""


class RangeError(PermutonError):
    """Parameter outside its admissible range."""


class InternalError(PermutonError):
    """A construction that must succeed failed; indicates a defect."""


class IoError(PermutonError):
    """File could not be read or written."""


class FormatError(PermutonError):
    """Permuton file is malformed or fails validation."""
