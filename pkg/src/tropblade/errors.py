"""Exception hierarchy. Every error is a ``ValueError`` so callers can catch broadly."""


class TropBladeError(ValueError):
    """Base class for all input and precondition errors raised by the package."""


class DegenerateInputError(TropBladeError):
    """Empty sets, full-ground sets, or grounds with fewer than three elements."""


class LabelError(TropBladeError):
    """A label is outside the ground set."""


class SizeError(TropBladeError):
    """Mismatched or out-of-range subset sizes."""


class ValidationError(TropBladeError):
    """A collection is not weakly separated; ``pair`` names the offending sets."""

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


class FlipError(TropBladeError):
    """A flip descriptor does not apply to the collection."""


class PreconditionError(TropBladeError):
    """An operation was called outside its documented domain."""


class ArityError(TropBladeError):
    """A face label ``L`` has the wrong size for the requested operation."""


class CompletionError(TropBladeError):
    """Seed propagation stalled before every coordinate was determined."""


class ContradictionError(TropBladeError):
    """Seed propagation derived inconsistent values; ``octahedron`` names the witness."""

    def __init__(self, message: str, octahedron=None):
        super().__init__(message)
        self.octahedron = octahedron


class StructureError(TropBladeError):
    """A plabic structure violated an invariant during construction or boundary."""
