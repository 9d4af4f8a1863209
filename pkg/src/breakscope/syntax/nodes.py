"""AST for Mini-J.

Every node carries a ``loc``; locations are excluded from equality so two
parses of differently formatted but equivalent text compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import SourceLocation

PRIMITIVES = frozenset({"boolean", "char", "byte", "short", "int", "long", "float", "double"})
MODIFIERS = ("public", "protected", "private", "static", "final", "abstract")


def _loc():
    return field(compare=False, repr=False, default=None)


@dataclass(frozen=True)
class Annotation:
    name: str
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class TypeRef:
    """A type as written: ``void``, a primitive, or a dotted name, plus array dims."""

    name: str
    dims: int = 0
    loc: SourceLocation = _loc()

    @property
    def is_primitive(self) -> bool:
        return self.dims == 0 and self.name in PRIMITIVES

    def __str__(self) -> str:
        return self.name + "[]" * self.dims


# expressions

@dataclass(frozen=True)
class Literal:
    kind: str  # int long float double string char boolean null
    value: str
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class Name:
    ident: str
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class This:
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class New:
    type: TypeRef
    args: tuple["Expr", ...]
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class Cast:
    type: TypeRef
    expr: "Expr"
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class FieldAccess:
    target: "Expr"
    name: str
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class Call:
    target: "Expr"
    name: str
    args: tuple["Expr", ...]
    loc: SourceLocation = _loc()


Expr = Union[Literal, Name, This, New, Cast, FieldAccess, Call]


# statements

@dataclass(frozen=True)
class Block:
    stmts: tuple["Stmt", ...]
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class LocalVar:
    type: TypeRef
    name: str
    init: Optional[Expr]
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class Assign:
    target: Union[Name, FieldAccess]
    value: Expr
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class ExprStmt:
    expr: Expr
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class Return:
    value: Optional[Expr]
    loc: SourceLocation = _loc()


Stmt = Union[Block, LocalVar, Assign, ExprStmt, Return]


# declarations

@dataclass(frozen=True)
class Param:
    type: TypeRef
    name: str
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class FieldAst:
    annotations: tuple[Annotation, ...]
    modifiers: tuple[str, ...]
    type: TypeRef
    name: str
    init: Optional[Expr]
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class MethodAst:
    annotations: tuple[Annotation, ...]
    modifiers: tuple[str, ...]
    return_type: TypeRef
    name: str
    params: tuple[Param, ...]
    body: Optional[Block]
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class CtorAst:
    annotations: tuple[Annotation, ...]
    modifiers: tuple[str, ...]
    name: str
    params: tuple[Param, ...]
    body: Block
    loc: SourceLocation = _loc()


Member = Union[FieldAst, MethodAst, CtorAst]


@dataclass(frozen=True)
class TypeDeclAst:
    annotations: tuple[Annotation, ...]
    modifiers: tuple[str, ...]
    kind: str  # "class" | "interface"
    name: str
    extends: tuple[TypeRef, ...]
    implements: tuple[TypeRef, ...]
    members: tuple[Member, ...]
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class Import:
    name: str
    loc: SourceLocation = _loc()


@dataclass(frozen=True)
class CompilationUnit:
    package: str
    imports: tuple[Import, ...]
    types: tuple[TypeDeclAst, ...]
    file: str = field(compare=False, default="")
    loc: SourceLocation = _loc()
