"""Recursive-descent parser producing :mod:`breakscope.syntax.nodes` trees.

Dotted chains such as ``a.b.c`` are left as nested :class:`FieldAccess`
nodes; deciding which prefix names a type is the resolver's job.
"""

from __future__ import annotations

from typing import Optional

from .errors import ParseError, SourceLocation
from .lexer import Token, tokenize
from .nodes import (
    MODIFIERS,
    PRIMITIVES,
    Annotation,
    Assign,
    Block,
    Call,
    Cast,
    CompilationUnit,
    CtorAst,
    Expr,
    ExprStmt,
    FieldAccess,
    FieldAst,
    Import,
    Literal,
    LocalVar,
    MethodAst,
    Name,
    New,
    Param,
    Return,
    Stmt,
    This,
    TypeDeclAst,
    TypeRef,
)

_LITERAL_TOKENS = {"int", "long", "float", "double", "string", "char"}
_PRIMARY_START = _LITERAL_TOKENS | {"ident", "lparen"}
_PRIMARY_KW = {"this", "new", "true", "false", "null"}


class Parser:
    def __init__(self, tokens: list[Token], file: str = "<input>"):
        self.tokens = tokens
        self.pos = 0
        self.file = file

    # token helpers

    def peek(self, offset: int = 0) -> Optional[Token]:
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else None

    def at(self, kind: str, value: Optional[str] = None, offset: int = 0) -> bool:
        tok = self.peek(offset)
        if tok is None or tok.kind != kind:
            return False
        return value is None or tok.value == value

    def at_kw(self, *words: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == "kw" and tok.value in words

    def _here(self) -> SourceLocation:
        tok = self.peek()
        if tok is not None:
            return tok.loc
        if self.tokens:
            last = self.tokens[-1].loc
            return SourceLocation(last.file, last.line, last.column + len(self.tokens[-1].value))
        return SourceLocation(self.file, 1, 1)

    def fail(self, message: str, *expected: str) -> ParseError:
        tok = self.peek()
        found = "end of input" if tok is None else repr(tok.value)
        return ParseError(f"{message}, found {found}", self._here(), frozenset(expected))

    def expect(self, kind: str, value: Optional[str] = None) -> Token:
        if not self.at(kind, value):
            raise self.fail("unexpected token", value or kind)
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_kw(self, word: str) -> Token:
        return self.expect("kw", word)

    # declarations

    def parse_unit(self) -> CompilationUnit:
        start = self.expect_kw("package")
        package = self.qname()
        self.expect("semi")
        imports = []
        while self.at_kw("import"):
            tok = self.expect_kw("import")
            imports.append(Import(self.qname(), tok.loc))
            self.expect("semi")
        types = []
        while self.peek() is not None:
            if self.at_kw("import"):
                raise self.fail("imports must precede type declarations")
            types.append(self.type_decl())
        if not types:
            raise self.fail("expected at least one type declaration", "class", "interface")
        return CompilationUnit(package, tuple(imports), tuple(types), self.file, start.loc)

    def qname(self) -> str:
        parts = [self.expect("ident").value]
        while self.at("dot") and self.at("ident", offset=1):
            self.pos += 1
            parts.append(self.expect("ident").value)
        return ".".join(parts)

    def annotations(self) -> tuple[Annotation, ...]:
        out = []
        while self.at("at"):
            at = self.expect("at")
            out.append(Annotation(self.expect("ident").value, at.loc))
        return tuple(out)

    def modifiers(self) -> tuple[str, ...]:
        mods: list[str] = []
        while self.at_kw(*MODIFIERS):
            tok = self.tokens[self.pos]
            if tok.value in mods:
                raise ParseError(f"duplicate modifier {tok.value}", tok.loc)
            if {tok.value, *mods} >= {"final", "abstract"}:
                raise ParseError("final and abstract cannot be combined", tok.loc)
            access = {"public", "protected", "private"}
            if tok.value in access and access & set(mods):
                raise ParseError("conflicting access modifiers", tok.loc)
            mods.append(tok.value)
            self.pos += 1
        if self.at("at"):
            raise self.fail("annotations must precede modifiers")
        return tuple(mods)

    def type_decl(self) -> TypeDeclAst:
        annots = self.annotations()
        mods = self.modifiers()
        if self.at_kw("class"):
            self.pos += 1
            name_tok = self.expect("ident")
            extends: tuple[TypeRef, ...] = ()
            implements: tuple[TypeRef, ...] = ()
            if self.at_kw("extends"):
                self.pos += 1
                extends = (self.named_type(),)
            if self.at_kw("implements"):
                self.pos += 1
                implements = self.named_type_list()
            kind = "class"
        elif self.at_kw("interface"):
            self.pos += 1
            name_tok = self.expect("ident")
            extends, implements = (), ()
            if self.at_kw("extends"):
                self.pos += 1
                extends = self.named_type_list()
            kind = "interface"
        else:
            raise self.fail("expected type declaration", "class", "interface")
        self.expect("lbrace")
        members = []
        while not self.at("rbrace"):
            if self.peek() is None:
                raise self.fail("unterminated type body", "}")
            members.append(self.member(name_tok.value))
        self.expect("rbrace")
        return TypeDeclAst(annots, mods, kind, name_tok.value, extends, implements, tuple(members), name_tok.loc)

    def named_type(self) -> TypeRef:
        loc = self._here()
        return TypeRef(self.qname(), 0, loc)

    def named_type_list(self) -> tuple[TypeRef, ...]:
        out = [self.named_type()]
        while self.at("comma"):
            self.pos += 1
            out.append(self.named_type())
        return tuple(out)

    def member(self, owner: str):
        annots = self.annotations()
        mods = self.modifiers()
        if self.at_kw("class", "interface"):
            raise self.fail("nested types are not supported")
        if self.at("ident") and self.at("lparen", offset=1):
            name_tok = self.expect("ident")
            if name_tok.value != owner:
                raise ParseError("method declaration needs a return type", name_tok.loc)
            params = self.params()
            if not self.at("lbrace"):
                raise self.fail("constructor needs a body", "{")
            return CtorAst(annots, mods, name_tok.value, params, self.block(), name_tok.loc)
        rtype = self.type_ref(allow_void=True)
        name_tok = self.expect("ident")
        if self.at("lparen"):
            params = self.params()
            if self.at("semi"):
                self.pos += 1
                body = None
            elif self.at("lbrace"):
                body = self.block()
            else:
                raise self.fail("expected method body", "{", ";")
            return MethodAst(annots, mods, rtype, name_tok.value, params, body, name_tok.loc)
        if rtype.name == "void":
            raise ParseError("field cannot have type void", rtype.loc)
        init = None
        if self.at("assign"):
            self.pos += 1
            init = self.expr()
        self.expect("semi")
        return FieldAst(annots, mods, rtype, name_tok.value, init, name_tok.loc)

    def params(self) -> tuple[Param, ...]:
        self.expect("lparen")
        out = []
        if not self.at("rparen"):
            while True:
                ptype = self.type_ref()
                name = self.expect("ident")
                out.append(Param(ptype, name.value, name.loc))
                if not self.at("comma"):
                    break
                self.pos += 1
        self.expect("rparen")
        return tuple(out)

    def type_ref(self, allow_void: bool = False) -> TypeRef:
        loc = self._here()
        if self.at_kw(*PRIMITIVES) or (allow_void and self.at_kw("void")):
            name = self.tokens[self.pos].value
            self.pos += 1
        elif self.at("ident"):
            name = self.qname()
        else:
            raise self.fail("expected type", "type")
        dims = 0
        while self.at("lbracket"):
            self.pos += 1
            self.expect("rbracket")
            dims += 1
        if name == "void" and dims:
            raise ParseError("void cannot be an array element type", loc)
        return TypeRef(name, dims, loc)

    # statements

    def block(self) -> Block:
        start = self.expect("lbrace")
        stmts = []
        while not self.at("rbrace"):
            if self.peek() is None:
                raise self.fail("unterminated block", "}")
            stmts.append(self.stmt())
        self.expect("rbrace")
        return Block(tuple(stmts), start.loc)

    def stmt(self) -> Stmt:
        tok = self.peek()
        if self.at("lbrace"):
            return self.block()
        if self.at_kw("return"):
            self.pos += 1
            value = None if self.at("semi") else self.expr()
            self.expect("semi")
            return Return(value, tok.loc)
        if self.at_kw(*PRIMITIVES):
            return self.local_var()
        if self.at("ident"):
            mark = self.pos
            try:
                self.type_ref()
                is_decl = self.at("ident")
            except ParseError:
                is_decl = False
            self.pos = mark
            if is_decl:
                return self.local_var()
        expr = self.expr()
        if self.at("assign"):
            if not isinstance(expr, (Name, FieldAccess)):
                raise self.fail("invalid assignment target")
            self.pos += 1
            value = self.expr()
            self.expect("semi")
            return Assign(expr, value, tok.loc)
        self.expect("semi")
        return ExprStmt(expr, tok.loc)

    def local_var(self) -> LocalVar:
        vtype = self.type_ref()
        name = self.expect("ident")
        init = None
        if self.at("assign"):
            self.pos += 1
            init = self.expr()
        self.expect("semi")
        return LocalVar(vtype, name.value, init, name.loc)

    # expressions

    def expr(self) -> Expr:
        node = self.primary()
        while self.at("dot"):
            self.pos += 1
            name = self.expect("ident")
            if self.at("lparen"):
                node = Call(node, name.value, self.args(), name.loc)
            else:
                node = FieldAccess(node, name.value, name.loc)
        return node

    def args(self) -> tuple[Expr, ...]:
        self.expect("lparen")
        out = []
        if not self.at("rparen"):
            out.append(self.expr())
            while self.at("comma"):
                self.pos += 1
                out.append(self.expr())
        self.expect("rparen")
        return tuple(out)

    def primary(self) -> Expr:
        tok = self.peek()
        if tok is None:
            raise self.fail("expected expression", "expression")
        if tok.kind in _LITERAL_TOKENS:
            self.pos += 1
            return Literal(tok.kind, tok.value, tok.loc)
        if tok.kind == "ident":
            self.pos += 1
            return Name(tok.value, tok.loc)
        if tok.kind == "kw":
            if tok.value in ("true", "false"):
                self.pos += 1
                return Literal("boolean", tok.value, tok.loc)
            if tok.value == "null":
                self.pos += 1
                return Literal("null", "null", tok.loc)
            if tok.value == "this":
                self.pos += 1
                return This(tok.loc)
            if tok.value == "new":
                self.pos += 1
                tref = self.named_type()
                if self.at("lbracket"):
                    raise self.fail("array creation is not supported")
                return New(tref, self.args(), tok.loc)
        if tok.kind == "lparen":
            if self._looks_like_cast():
                self.pos += 1
                ctype = self.type_ref()
                self.expect("rparen")
                return Cast(ctype, self.expr(), tok.loc)
            self.pos += 1
            inner = self.expr()
            self.expect("rparen")
            return inner
        raise self.fail("expected expression", "expression")

    def _looks_like_cast(self) -> bool:
        nxt = self.peek(1)
        if nxt is not None and nxt.kind == "kw" and nxt.value in PRIMITIVES:
            return True
        if not self.at("ident", offset=1):
            return False
        mark = self.pos
        self.pos += 1
        try:
            self.type_ref()
        except ParseError:
            self.pos = mark
            return False
        ok = self.at("rparen")
        if ok:
            nxt = self.peek(1)
            ok = nxt is not None and (nxt.kind in _PRIMARY_START or (nxt.kind == "kw" and nxt.value in _PRIMARY_KW))
        self.pos = mark
        return ok


def parse_source(source: str, file: str) -> CompilationUnit:
    """Tokenize and parse a whole compilation unit."""
    return Parser(tokenize(source, file), file).parse_unit()
