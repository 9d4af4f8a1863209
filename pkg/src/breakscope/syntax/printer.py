"""Pretty-printer for Mini-J ASTs."""

from __future__ import annotations

from .nodes import (
    Assign,
    Block,
    Call,
    Cast,
    CompilationUnit,
    CtorAst,
    ExprStmt,
    FieldAccess,
    FieldAst,
    Literal,
    LocalVar,
    MethodAst,
    Name,
    New,
    Return,
    This,
    TypeDeclAst,
)

_UNESCAPE = {"\n": "\\n", "\t": "\\t", "\\": "\\\\", '"': '\\"', "'": "\\'"}


def _quote(text: str, q: str) -> str:
    return q + "".join(_UNESCAPE.get(c, c) for c in text) + q


def render_expr(e) -> str:
    if isinstance(e, Literal):
        if e.kind == "string":
            return _quote(e.value, '"')
        if e.kind == "char":
            return _quote(e.value, "'")
        return e.value
    if isinstance(e, Name):
        return e.ident
    if isinstance(e, This):
        return "this"
    if isinstance(e, New):
        return f"new {e.type}({', '.join(map(render_expr, e.args))})"
    if isinstance(e, Cast):
        return f"({e.type}) {render_expr(e.expr)}"
    if isinstance(e, FieldAccess):
        return f"{_target(e.target)}.{e.name}"
    if isinstance(e, Call):
        return f"{_target(e.target)}.{e.name}({', '.join(map(render_expr, e.args))})"
    raise TypeError(f"not an expression: {e!r}")


def _target(e) -> str:
    text = render_expr(e)
    return f"({text})" if isinstance(e, Cast) else text


def _stmt_lines(s, indent: str) -> list[str]:
    if isinstance(s, Block):
        return [indent + "{", *(ln for x in s.stmts for ln in _stmt_lines(x, indent + "    ")), indent + "}"]
    if isinstance(s, LocalVar):
        init = f" = {render_expr(s.init)}" if s.init is not None else ""
        return [f"{indent}{s.type} {s.name}{init};"]
    if isinstance(s, Assign):
        return [f"{indent}{render_expr(s.target)} = {render_expr(s.value)};"]
    if isinstance(s, ExprStmt):
        return [f"{indent}{render_expr(s.expr)};"]
    if isinstance(s, Return):
        return [f"{indent}return;" if s.value is None else f"{indent}return {render_expr(s.value)};"]
    raise TypeError(f"not a statement: {s!r}")


def _head(annotations, modifiers) -> str:
    parts = [f"@{a.name}" for a in annotations] + list(modifiers)
    return " ".join(parts) + (" " if parts else "")


def _member_lines(m, indent: str) -> list[str]:
    head = indent + _head(m.annotations, m.modifiers)
    if isinstance(m, FieldAst):
        init = f" = {render_expr(m.init)}" if m.init is not None else ""
        return [f"{head}{m.type} {m.name}{init};"]
    params = ", ".join(f"{p.type} {p.name}" for p in m.params)
    if isinstance(m, MethodAst):
        sig = f"{head}{m.return_type} {m.name}({params})"
        if m.body is None:
            return [sig + ";"]
    else:
        sig = f"{head}{m.name}({params})"
    body = _stmt_lines(m.body, indent)
    return [sig + " " + body[0].strip(), *body[1:]]


def render_type(t: TypeDeclAst) -> list[str]:
    head = _head(t.annotations, t.modifiers) + f"{t.kind} {t.name}"
    if t.extends:
        head += " extends " + ", ".join(str(x) for x in t.extends)
    if t.implements:
        head += " implements " + ", ".join(str(x) for x in t.implements)
    lines = [head + " {"]
    for m in t.members:
        lines.extend(_member_lines(m, "    "))
    lines.append("}")
    return lines


def render(unit: CompilationUnit) -> str:
    lines = [f"package {unit.package};"]
    if unit.imports:
        lines.append("")
        lines.extend(f"import {i.name};" for i in unit.imports)
    for t in unit.types:
        lines.append("")
        lines.extend(render_type(t))
    return "\n".join(lines) + "\n"


def declaration_list(unit: CompilationUnit) -> list[str]:
    """One line per declaration, without bodies; used by golden tests."""
    out = []
    for t in unit.types:
        mods = " ".join(t.modifiers)
        out.append(f"{t.kind} {unit.package}.{t.name} [{mods}]")
        for m in t.members:
            mods = " ".join(m.modifiers)
            if isinstance(m, FieldAst):
                out.append(f"  field {m.type} {m.name} [{mods}]")
            elif isinstance(m, MethodAst):
                params = ",".join(str(p.type) for p in m.params)
                out.append(f"  method {m.return_type} {m.name}({params}) [{mods}]")
            elif isinstance(m, CtorAst):
                params = ",".join(str(p.type) for p in m.params)
                out.append(f"  ctor {m.name}({params}) [{mods}]")
    return out
