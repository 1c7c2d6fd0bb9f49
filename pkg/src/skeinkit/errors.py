"""Exception types. Every error carries a stable ``code`` string used in reports."""

from __future__ import annotations


class SkeinkitError(Exception):
    code = "SKEINKIT_ERROR"


class InputError(SkeinkitError):
    """Bad user input (exit code 2 at the CLI)."""

    code = "INPUT_ERROR"


class MalformedPD(InputError):
    code = "MALFORMED_PD"


class BadArcMultiplicity(InputError):
    code = "BAD_ARC_MULTIPLICITY"


class NonplanarSuspect(InputError):
    code = "NONPLANAR_SUSPECT"


class StateLengthMismatch(InputError):
    code = "STATE_LENGTH_MISMATCH"


class ArcNotFound(InputError):
    code = "ARC_NOT_FOUND"


class InadmissibleTriple(InputError):
    code = "INADMISSIBLE_TRIPLE"


class StrandMismatch(InputError):
    code = "STRAND_MISMATCH"


class NotATwistRegion(InputError):
    code = "NOT_A_TWIST_REGION"


class ZeroTwist(InputError):
    code = "ZERO_TWIST"


class NotAdequate(InputError):
    code = "NOT_ADEQUATE"


class InconsistentInput(InputError):
    code = "INCONSISTENT_INPUT"


class HypothesesViolated(InputError):
    code = "HYPOTHESES_VIOLATED"


class FitInconsistent(SkeinkitError):
    code = "FIT_INCONSISTENT"


class SlicingFailed(SkeinkitError):
    code = "SLICING_FAILED"


class ResourceError(SkeinkitError):
    """A configured budget was exceeded (exit code 3 at the CLI)."""

    code = "RESOURCE_BUDGET"


class TooManyCrossings(ResourceError):
    code = "TOO_MANY_CROSSINGS"


class WidthExceeded(ResourceError):
    code = "WIDTH_EXCEEDED"


class InexactDivision(SkeinkitError):
    """Raised when a division that must be exact leaves a remainder.

    This always indicates a bug in an evaluation engine, never bad input.
    """

    code = "INEXACT_DIVISION"
