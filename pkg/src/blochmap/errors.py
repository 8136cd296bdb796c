"""Exception types raised by the package."""


class InputError(ValueError):
    """An argument is outside its documented domain."""


class UnphysicalStateError(InputError):
    """A state fails its physical constraints (Bloch norm, trace, positivity)."""


class NotCompletelyPositiveError(InputError):
    """A Kraus construction was requested for a map that is not completely positive.

    ``violated_inequality`` is the 1-based index of the first damping-eigenvalue
    inequality that fails (see :func:`blochmap.cp.bloch_inequality_lhs`).
    """

    def __init__(self, message: str, violated_inequality: int | None = None):
        super().__init__(message)
        self.violated_inequality = violated_inequality


class DefectiveGeneratorError(ValueError):
    """The generator is not diagonalizable over the 4-dimensional operator space."""
