from __future__ import annotations

from dataclasses import dataclass

from .syntax import SourceLocation

CODES = frozenset({
    "MISSING_SYMBOL",
    "CANNOT_OVERRIDE_FINAL",
    "ABSTRACT_NOT_IMPLEMENTED",
    "ASSIGN_TO_FINAL",
    "ACCESS_VIOLATION",
    "STATIC_MISMATCH",
    "TYPE_MISMATCH",
    "CANNOT_INSTANTIATE_ABSTRACT",
    "CANNOT_EXTEND_FINAL",
    "AMBIGUOUS_CALL",
    "UNRESOLVED_NAME",
    "TYPE_UNKNOWN",
})


@dataclass(frozen=True, order=True)
class Diagnostic:
    location: SourceLocation
    code: str
    message: str = ""

    def __post_init__(self) -> None:
        if self.code not in CODES:
            raise ValueError(f"unknown diagnostic code {self.code}")

    def __str__(self) -> str:
        return f"{self.location.file}:{self.location.line}:{self.location.column} {self.code} {self.message}"
