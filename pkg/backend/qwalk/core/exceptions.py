"""Exception hierarchy shared by the library and the CLI"""

from typing import Any


class QWalkError(Exception):
    """Base error carrying a message and structured details"""

    exit_code: int = 1

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.message = message
        self.details: dict[str, Any] = details

    def __str__(self) -> str:
        if not self.details:
            return self.message
        extras = ", ".join(f"{key}={value}" for key, value in self.details.items())
        return f"{self.message} ({extras})"


class InputParseError(QWalkError):
    """Input could not be parsed against the JSON schemas"""

    exit_code = 2


class PreconditionError(QWalkError):
    """An operation was called with inputs violating its preconditions"""

    exit_code = 3


class ParameterError(PreconditionError):
    """Invalid family, grid or numeric parameters"""


class GraphError(PreconditionError):
    """Malformed multigraph"""


class DesignError(PreconditionError):
    """Block list is not a 2-design"""


class RotationError(PreconditionError):
    """Rotation system does not list every outgoing arc exactly once"""


class ConstructionError(PreconditionError):
    """A walk cannot be assembled from the given object"""


class FrameError(PreconditionError):
    """Reflection frame has mismatched dimensions or non-orthonormal columns"""


class SpectralError(PreconditionError):
    """Matrix cannot be decomposed"""


class RecognitionError(PreconditionError):
    """Value lies outside [-1, 1] beyond tolerance"""


class InfeasibleParametersError(PreconditionError):
    """Strongly regular graph parameters are not feasible"""


class UnsupportedError(PreconditionError):
    """Request outside the supported scope"""


class UnsupportedExactError(UnsupportedError):
    """Exact arithmetic is not available for this walk"""


class TransferInvariantError(QWalkError):
    """A structural guarantee about transfer verdicts was violated"""

    exit_code = 3
