"""Common schemas shared by the CLI commands"""

from typing import Any

from pydantic import BaseModel

from qwalk.core.exceptions import QWalkError


class ErrorResponse(BaseModel):
    """Error diagnostic schema"""

    error: str
    message: str
    details: dict[str, Any] | None = None
    exit_code: int

    @classmethod
    def from_exception(cls, exc: QWalkError) -> "ErrorResponse":
        return cls(
            error=type(exc).__name__,
            message=exc.message,
            details={key: str(value) for key, value in exc.details.items()} or None,
            exit_code=exc.exit_code,
        )

    def one_line(self) -> str:
        """Single-line rendering for stderr"""
        if not self.details:
            return f"{self.error}: {self.message}"
        extras = ", ".join(f"{key}={value}" for key, value in self.details.items())
        return f"{self.error}: {self.message} ({extras})"
