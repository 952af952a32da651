"""Exception types shared across the package."""


class HomybError(Exception):
    """Base class for every error this package raises on purpose."""


class ParamMismatchError(HomybError):
    """Values over different parameter sets were combined."""


class ParseError(HomybError):
    """A scalar expression failed to parse."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class EvalError(HomybError):
    """Evaluation failed: missing assignment, or zero at a negative exponent."""


class NonInvertibleError(HomybError):
    """Negative power of a scalar that is not a monomial."""


class DimensionError(HomybError):
    """Matrix or vector dimensions do not conform."""


class StructureError(HomybError):
    """A structure definition is internally inconsistent (shapes, payload keys)."""


class PreconditionError(HomybError):
    """A constructor precondition is violated (validation, involutivity, centrality)."""


class UnknownEntryError(HomybError):
    """Catalog lookup with an id that does not exist."""


class ConstructionWarning(UserWarning):
    """A stated hypothesis is violated but the build proceeds (e.g. u not fixed by alpha)."""
