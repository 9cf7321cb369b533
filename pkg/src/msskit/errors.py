"""Exception types shared across the package."""


class MssKitError(Exception):
    """Base class for all domain errors raised by msskit."""


class NotAdmissibleError(MssKitError, ValueError):
    """Input text or symbols do not form an admissible sequence."""


class RunLengthError(MssKitError, ValueError):
    """An interior L-run is longer than the head run, so the word cannot
    be shift-maximal and has no canonical block form.

    ``position`` is the 0-based index of the R that opens the offending run.
    """

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class NotMssError(MssKitError, ValueError):
    """Operation requires an MSS-sequence (shift-maximal) input."""


class ShapeError(MssKitError, ValueError):
    """Sequence does not match the required composite shape."""


class LocateError(MssKitError, RuntimeError):
    """The parameter search failed to bracket or converge."""
