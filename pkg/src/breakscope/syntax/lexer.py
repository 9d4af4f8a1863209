"""Tokenizer for Mini-J sources."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LexError, SourceLocation

KEYWORDS = frozenset({
    "package", "import", "class", "interface", "extends", "implements",
    "public", "protected", "private", "static", "final", "abstract",
    "void", "boolean", "char", "byte", "short", "int", "long", "float", "double",
    "return", "this", "new", "true", "false", "null",
})

PUNCT = {
    ";": "semi",
    ",": "comma",
    ".": "dot",
    "(": "lparen",
    ")": "rparen",
    "{": "lbrace",
    "}": "rbrace",
    "[": "lbracket",
    "]": "rbracket",
    "=": "assign",
    "@": "at",
}

ESCAPES = {"n": "\n", "t": "\t", "\\": "\\", '"': '"', "'": "'"}


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    loc: SourceLocation

    def __str__(self) -> str:
        if self.kind in ("kw", "ident"):
            return f"{self.kind}:{self.value}"
        return self.kind


def _is_ident_start(ch: str) -> bool:
    return ch.isascii() and (ch.isalpha() or ch in "_$")


def _is_ident_part(ch: str) -> bool:
    return ch.isascii() and (ch.isalnum() or ch in "_$")


def tokenize(source: str, file: str) -> list[Token]:
    """Split ``source`` into tokens; whitespace and comments are dropped."""
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)

    def advance(count: int = 1) -> None:
        nonlocal i, line, col
        for _ in range(count):
            if source[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = source[i]
        loc = SourceLocation(file, line, col)
        if ch in " \t\r\n\f":
            advance()
        elif source.startswith("//", i):
            while i < n and source[i] != "\n":
                advance()
        elif source.startswith("/*", i):
            end = source.find("*/", i + 2)
            if end < 0:
                raise LexError("unterminated block comment", loc)
            advance(end + 2 - i)
        elif _is_ident_start(ch):
            start = i
            while i < n and _is_ident_part(source[i]):
                advance()
            word = source[start:i]
            tokens.append(Token("kw" if word in KEYWORDS else "ident", word, loc))
        elif ch.isascii() and ch.isdigit():
            tokens.append(_number(source, i, loc))
            advance(len(tokens[-1].value))
        elif ch == '"' or ch == "'":
            text, width = _quoted(source, i, loc)
            kind = "string" if ch == '"' else "char"
            if kind == "char" and len(text) != 1:
                raise LexError("character literal must hold exactly one character", loc)
            tokens.append(Token(kind, text, loc))
            advance(width)
        elif ch in PUNCT:
            tokens.append(Token(PUNCT[ch], ch, loc))
            advance()
        else:
            raise LexError(f"unexpected character {ch!r}", loc)
    return tokens


def _number(source: str, i: int, loc: SourceLocation) -> Token:
    j = i
    n = len(source)
    while j < n and source[j].isascii() and source[j].isdigit():
        j += 1
    kind = "int"
    if j + 1 < n and source[j] == "." and source[j + 1].isascii() and source[j + 1].isdigit():
        kind = "double"
        j += 1
        while j < n and source[j].isascii() and source[j].isdigit():
            j += 1
    if j < n and source[j] in "lL" and kind == "int":
        kind = "long"
        j += 1
    elif j < n and source[j] in "fF":
        kind = "float"
        j += 1
    elif j < n and source[j] in "dD":
        kind = "double"
        j += 1
    if j < n and _is_ident_part(source[j]):
        raise LexError("malformed numeric literal", loc)
    return Token(kind, source[i:j], loc)


def _quoted(source: str, i: int, loc: SourceLocation) -> tuple[str, int]:
    quote = source[i]
    j = i + 1
    out: list[str] = []
    while True:
        if j >= len(source) or source[j] == "\n":
            raise LexError("unterminated literal", loc)
        ch = source[j]
        if ch == quote:
            return "".join(out), j + 1 - i
        if ch == "\\":
            esc = source[j + 1] if j + 1 < len(source) else ""
            if esc not in ESCAPES:
                raise LexError(f"unsupported escape \\{esc}", loc)
            out.append(ESCAPES[esc])
            j += 2
        else:
            out.append(ch)
            j += 1
