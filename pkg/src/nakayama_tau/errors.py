"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations

from typing import Any, Optional, Tuple


class NakayamaError(Exception):
    """Root of every error raised by nakayama_tau."""


class UsageError(NakayamaError):
    """The caller passed something the operation is not defined for."""


class LiteralError(UsageError):
    """A textual literal could not be parsed."""

    def __init__(self, message: str, text: str, position: int = 0) -> None:
        self.text = text
        self.position = position
        super().__init__(f"{message} (at position {position} in {text!r})")


class InvariantViolation(NakayamaError):
    """A structural fact the engine relies on did not hold."""

    def __init__(self, message: str, witnesses: Optional[Tuple[Any, ...]] = None) -> None:
        self.witnesses = tuple(witnesses or ())
        super().__init__(message)
