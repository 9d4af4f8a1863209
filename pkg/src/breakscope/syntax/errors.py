from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class SourceLocation:
    file: str
    line: int
    column: int

    def __post_init__(self) -> None:
        if self.line < 1 or self.column < 1:
            raise ValueError(f"invalid location {self.line}:{self.column}")
        if not self.file or "\\" in self.file:
            raise ValueError(f"invalid location file {self.file!r}")

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


class MiniJSyntaxError(Exception):
    """Base class for lexing and parsing failures."""

    def __init__(self, message: str, location: SourceLocation):
        super().__init__(f"{location}: {message}")
        self.message = message
        self.location = location


class LexError(MiniJSyntaxError):
    pass


class ParseError(MiniJSyntaxError):
    def __init__(self, message: str, location: SourceLocation, expected: frozenset[str] = frozenset()):
        if expected:
            message = f"{message} (expected one of: {', '.join(sorted(expected))})"
        super().__init__(message, location)
        self.expected = expected
