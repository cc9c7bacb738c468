"""Exception hierarchy shared by the whole package.

Exit-code mapping used by the CLI: precondition / input errors exit with 2,
internal invariant violations (a bug, never expected on valid inputs) exit
with 3.
"""


class LcsApproxError(Exception):
    """Base class for all package errors."""


class PreconditionError(LcsApproxError):
    """A documented operation precondition was violated by the caller."""


class SizeLimitError(PreconditionError):
    """An instance exceeds a configured size cap (the message names the cap)."""


class InvalidSymbolError(PreconditionError):
    """A symbol id is not part of the relevant alphabet."""


class InvalidSubalphabetError(PreconditionError):
    """A subalphabet argument is malformed (unknown ids or fewer than 2)."""


class InvalidAlphabetError(PreconditionError):
    """An operation received strings over an unsupported alphabet."""


class SegmentationError(PreconditionError):
    """A left/middle/right split is degenerate (empty or overlapping ends)."""


class SpecError(PreconditionError):
    """An instance spec or config file is invalid (the message names the field)."""


class UnknownSymbolError(PreconditionError):
    """Ingestion found a byte outside the explicitly given alphabet."""


class AlphabetTooLargeError(PreconditionError):
    """Ingestion found more than 255 distinct byte values."""


class WitnessError(LcsApproxError):
    """A witness failed validation where validity is an internal invariant."""


class ContradictionError(LcsApproxError):
    """An internal step that is provably impossible on valid inputs happened."""
