"""Exception hierarchy.

Three families matter to callers (and to the CLI exit-code mapping):

* ``InputError`` - a value is structurally broken (bad dimensions,
  malformed data).  CLI exit code 1 when raised during parsing.
* ``ValidationError`` - the value is well-formed but outside the
  admissible class (band pattern, spectral-function membership,
  triangularity, ...).  CLI exit code 2.
* ``NumericalDecisionError`` - a tolerance-based decision could not be
  made safely (ambiguous zero-norm test, iteration cap, vanishing
  denominator).  CLI exit code 3.
"""


class BandSpecError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BandSpecError):
    """Structurally invalid input (dimensions, shapes, malformed data)."""


class MixedDimension(InputError):
    """Vector polynomials with different component counts were combined."""


class DimensionMismatch(InputError):
    """Operands disagree on the component count n or the dimension N."""


class IndexOutOfRange(InputError):
    """An index argument lies outside its documented range."""


class ValidationError(BandSpecError):
    """Well-formed value outside the admissible class."""


class LeadingZero(ValidationError):
    """First entry of the outermost diagonal is <= 0 (the first
    degeneration index would be 1, which the class forbids)."""


class NonContiguousPositiveRun(ValidationError):
    """A positive entry appears after a zero inside a constrained
    diagonal range (the pattern must be positive-run then zero-run)."""


class NegativeConstrainedEntry(ValidationError):
    """A diagonal entry that the class constrains to be >= 0 is negative."""


class InnermostDegeneration(ValidationError):
    """The innermost off-diagonal has an exact zero in its constrained
    range, which would push the degeneration count past n-1."""


class ZeroPivot(ValidationError):
    """The recurrence needs to divide by a diagonal entry that the
    profile claims positive but which is <= 0 (inconsistent input)."""


class NotSymmetric(ValidationError):
    """A dense matrix handed to the eigensolver is not symmetric."""


class MembershipViolation(ValidationError):
    """A constructed spectral function violates its own invariants,
    signaling a matrix outside the class or numerical breakdown."""


class ZeroJump(ValidationError):
    """A spectral-function jump vector is identically zero."""


class DeadComponent(ValidationError):
    """Some component j has alpha_j(x_k) = 0 at every node."""


class RankSumMismatch(ValidationError):
    """Sum of merged per-node jump ranks differs from N."""


class NotTriangular(ValidationError):
    """The first n orthonormal basis members do not form an upper
    triangular constant system with nonzero diagonal."""


class BandViolation(ValidationError):
    """An inner product outside the declared band is above tolerance."""


class ProfileMismatch(ValidationError):
    """Height-derived degeneration indices disagree with the indices
    inferred from the zero pattern of the assembled matrix."""


class NonPositiveMass(ValidationError):
    """A chain body has mass <= 0."""


class NegativeSpring(ValidationError):
    """A spring constant is negative."""


class NumericalDecisionError(BandSpecError):
    """A tolerance-based decision could not be made safely."""


class NoConvergence(NumericalDecisionError):
    """The eigensolver failed to converge."""


class IterationCapExceeded(NumericalDecisionError):
    """Gram-Schmidt exceeded its height-derived iteration cap; the input
    is not an admissible spectral function or tol_zero is ill-chosen."""


class AmbiguousNorm(NumericalDecisionError):
    """A Gram-Schmidt residual norm falls within a factor 10 of the
    zero-norm threshold; the zero/nonzero decision is unsafe."""


class DivisionByZero(NumericalDecisionError):
    """A denominator in the continued-fraction check vanishes."""
