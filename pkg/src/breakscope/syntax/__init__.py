"""Lexer, parser and AST for the Mini-J language subset."""

from pathlib import Path

from .errors import LexError, MiniJSyntaxError, ParseError, SourceLocation
from .lexer import Token, tokenize
from .nodes import *  # noqa: F401,F403
from .parser import Parser, parse_source
from .printer import declaration_list, render


def parse_tree(root, files: dict[str, str] | None = None):
    """Parse every ``.java`` file below ``root`` (or the given in-memory map).

    Paths in locations are relative to ``root`` and use forward slashes.
    Units come back sorted by path.
    """
    if files is None:
        root = Path(root)
        files = {
            p.relative_to(root).as_posix(): p.read_text(encoding="utf-8")
            for p in root.rglob("*.java")
        }
    return [parse_source(text, path) for path, text in sorted(files.items())]


__all__ = [
    "LexError",
    "MiniJSyntaxError",
    "ParseError",
    "Parser",
    "SourceLocation",
    "Token",
    "declaration_list",
    "parse_source",
    "parse_tree",
    "render",
    "tokenize",
]
