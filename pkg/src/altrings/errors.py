"""Exception hierarchy.

Three tiers matter to callers (and map to CLI exit codes):
input problems, violated mathematical preconditions, and broken internal
invariants (the last always indicates a bug).
"""


class AltRingsError(Exception):
    """Base class for all library errors."""


class InputError(AltRingsError):
    """Malformed input: bad file, bad recipe, bad serialized value."""


class PreconditionError(AltRingsError):
    """A documented mathematical precondition does not hold."""


class InternalInvariantError(AltRingsError):
    """A theorem-backed invariant failed; indicates a bug, not bad input."""


class AlgebraMismatchError(PreconditionError):
    """Operands belong to different algebras or have mismatched dimensions."""


class UnitValidationError(PreconditionError):
    """The claimed multiplicative identity fails unit laws."""


class NotAlternativeError(PreconditionError):
    """Operation requires an alternative algebra."""


class NotIdempotentError(PreconditionError):
    """Supplied element is not idempotent."""


class TrivialIdempotentError(PreconditionError):
    """Supplied idempotent is 0 or the unit; a nontrivial one is required."""


class AmbiguityError(PreconditionError):
    """A Peirce construction invariant failed (corrupt or inconsistent data)."""


class PreconditionFailedError(PreconditionError):
    """Required Peirce conditions do not hold for this context."""


class LieLawViolatedError(PreconditionError):
    """Map does not satisfy the Lie product rule."""


class HypothesisFailedError(PreconditionError):
    """A diagonal-corner hypothesis (a or b) fails for the supplied map."""

    def __init__(self, which: str, message: str):
        super().__init__(message)
        self.which = which  # "a" or "b"


class NotDerivationError(PreconditionError):
    """Matrix fails the Leibniz rule on some basis pair."""


class NotCentralError(PreconditionError):
    """Element claimed central is not in the center."""


class NormalizationFailedError(PreconditionError):
    """Idempotent normalization did not land in the center."""


class NoSplitError(PreconditionError):
    """No central element matches the required diagonal corner."""


class NonUniqueSplitError(PreconditionError):
    """Diagonal split is not unique (corner conditions are violated)."""
