"""
Exception hierarchy for slipcheck.

Library code raises these; only the command line front end turns them into
exit codes and JSON diagnostics.
"""


class SlipcheckError(ValueError):
    """Base class for every error raised by slipcheck."""


class DegreeMismatchError(SlipcheckError):
    """Two multidegrees (or a degree and a ring) have different Pic ranks."""


class RingMismatchError(SlipcheckError):
    """Operands live in different rings."""


class NotHomogeneousError(SlipcheckError):
    """A polynomial that must be multihomogeneous is not."""


class NotGradedError(SlipcheckError):
    """A ring map does not respect the gradings it claims to respect."""


class PreconditionError(SlipcheckError):
    """A construction or criterion was called outside its hypotheses."""


class InputError(SlipcheckError):
    """Malformed user input: polynomial text, ring or map descriptors, files."""
