"""Reference type checker for Mini-J clients.

Written separately from ``usage`` on purpose: the differential tests compare
the matcher's verdicts against the errors this checker reports when a
client is compiled against the new library.

Cascade policy: a type name that does not resolve makes the value it types
erroneous, and erroneous values never produce further diagnostics. The same
holds for client classes whose supertype clause does not resolve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .apimodel import Access, ApiModel
from .diagnostics import Diagnostic
from .syntax.nodes import (
    PRIMITIVES,
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
    TypeRef,
)

BUILTINS = ("String", "Object")
_LIT = {"int": "int", "long": "long", "float": "float", "double": "double", "string": "String",
        "char": "char", "boolean": "boolean", "null": "null"}


class PreconditionViolation(Exception):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__(f"client does not compile against the old library ({len(diagnostics)} diagnostics)")


@dataclass(frozen=True)
class _M:
    """A member as the checker sees it."""

    owner: str
    name: str
    params: tuple  # None for fields
    type: Optional[str]
    access: Access
    static: bool
    final: bool
    abstract: bool

    @property
    def key(self) -> str:
        if self.params is None:
            return self.name
        return f"{self.name}({','.join(p or '?' for p in self.params)})"


def _pkg(fqn: str) -> str:
    return fqn.rpartition(".")[0]


def _access(mods) -> Access:
    for word, acc in (("public", Access.PUBLIC), ("protected", Access.PROTECTED), ("private", Access.PRIVATE)):
        if word in mods:
            return acc
    return Access.PACKAGE_PRIVATE


class _ClientType:
    def __init__(self, fqn: str, unit: CompilationUnit, ast: TypeDeclAst):
        self.fqn = fqn
        self.unit = unit
        self.ast = ast
        self.iface = ast.kind == "interface"
        self.clauses: list[tuple[TypeRef, Optional[str], str]] = []  # (ref, resolved, extends|implements)
        self.fields: dict[str, _M] = {}
        self.methods: dict[str, _M] = {}
        self.method_ast: dict[str, MethodAst] = {}
        self.ctors: list[_M] = []

    @property
    def abstract(self) -> bool:
        return self.iface or "abstract" in self.ast.modifiers


class _Checker:
    def __init__(self, units: Iterable[CompilationUnit], api: ApiModel):
        self.api = api
        self.units = sorted(units, key=lambda u: u.file)
        self.out: list[Diagnostic] = []
        self.ctypes: dict[str, _ClientType] = {}
        for unit in self.units:
            for t in unit.types:
                fqn = f"{unit.package}.{t.name}"
                if fqn in self.ctypes:
                    continue
                self.ctypes[fqn] = _ClientType(fqn, unit, t)
        for ct in self.ctypes.values():
            self._signatures(ct)
        self._views: dict[tuple[str, str], dict[str, _M]] = {}
        self._broken: dict[str, bool] = {}

    def report(self, loc, code: str, message: str) -> None:
        self.out.append(Diagnostic(loc, code, message))

    # type names

    def exists(self, fqn: str) -> bool:
        return fqn in self.ctypes or fqn in self.api.types

    def lookup(self, name: str, unit: CompilationUnit) -> Optional[str]:
        if "." in name:
            return name if self.exists(name) else None
        for imp in unit.imports:
            if imp.name.rsplit(".", 1)[-1] == name and self.exists(imp.name):
                return imp.name
        here = f"{unit.package}.{name}"
        if self.exists(here):
            return here
        return name if name in BUILTINS else None

    def type_visible(self, fqn: str, site: str) -> bool:
        if fqn in self.ctypes:
            t = self.ctypes[fqn]
            return "public" in t.ast.modifiers or _pkg(fqn) == _pkg(site)
        decl = self.api.types.get(fqn)
        return decl is None or decl.access is Access.PUBLIC or decl.package == _pkg(site)

    def resolve_type(self, tref: TypeRef, unit: CompilationUnit, site: str, quiet: bool = False) -> Optional[str]:
        """Resolve a written type; unresolved names are reported and yield ``None``."""
        if tref.name == "void" or tref.name in PRIMITIVES:
            return tref.name + "[]" * tref.dims
        fqn = self.lookup(tref.name, unit)
        if fqn is None:
            if not quiet:
                self.report(tref.loc, "UNRESOLVED_NAME", f"cannot find symbol: class {tref.name}")
            return None
        if not quiet and not self.type_visible(fqn, site):
            self.report(tref.loc, "ACCESS_VIOLATION", f"{fqn} is not accessible here")
        return fqn + "[]" * tref.dims

    def _signatures(self, ct: _ClientType) -> None:
        unit, ast = ct.unit, ct.ast
        for tref in ast.extends:
            ct.clauses.append((tref, self.lookup(tref.name, unit), "extends"))
        for tref in ast.implements:
            ct.clauses.append((tref, self.lookup(tref.name, unit), "implements"))

        def sig(tref):
            return self.resolve_type(tref, unit, ct.fqn, quiet=True)

        for m in ast.members:
            mods = m.modifiers
            if isinstance(m, FieldAst):
                acc = Access.PUBLIC if ct.iface else _access(mods)
                f = _M(ct.fqn, m.name, None, sig(m.type), acc, ct.iface or "static" in mods,
                       ct.iface or "final" in mods, False)
                ct.fields.setdefault(m.name, f)
            elif isinstance(m, MethodAst):
                acc = Access.PUBLIC if ct.iface else _access(mods)
                params = tuple(sig(p.type) for p in m.params)
                mm = _M(ct.fqn, m.name, params, sig(m.return_type), acc, "static" in mods, "final" in mods,
                        ct.iface or "abstract" in mods)
                if mm.key not in ct.methods:
                    ct.methods[mm.key] = mm
                    ct.method_ast[mm.key] = m
            elif isinstance(m, CtorAst):
                params = tuple(sig(p.type) for p in m.params)
                ct.ctors.append(_M(ct.fqn, "<init>", params, ct.fqn, _access(mods), False, False, False))
        if not ct.iface and not ct.ctors:
            acc = Access.PUBLIC if "public" in ast.modifiers else Access.PACKAGE_PRIVATE
            ct.ctors.append(_M(ct.fqn, "<init>", (), ct.fqn, acc, False, False, False))

    # hierarchy

    def supers(self, fqn: str) -> list[str]:
        if fqn in self.ctypes:
            return [r for _, r, _ in self.ctypes[fqn].clauses if r is not None and r not in BUILTINS]
        decl = self.api.types.get(fqn)
        return list(decl.supertypes) if decl else []

    def broken(self, fqn: Optional[str]) -> bool:
        """Client class whose hierarchy contains an unresolved clause."""
        if fqn is None or fqn not in self.ctypes:
            return False
        if fqn not in self._broken:
            self._broken[fqn] = True  # cycle guard
            ct = self.ctypes[fqn]
            self._broken[fqn] = (any(r is None for _, r, _ in ct.clauses)
                                 or any(self.broken(s) for s in self.supers(fqn)))
        return self._broken[fqn]

    def subtype(self, sub: str, sup: str) -> bool:
        seen, todo = set(), [sub]
        while todo:
            t = todo.pop()
            if t == sup:
                return True
            if t in seen:
                continue
            seen.add(t)
            todo.extend(self.supers(t))
        return False

    def assignable(self, src: Optional[str], dst: Optional[str]) -> bool:
        if src is None or dst is None or src == dst:
            return True
        if src == "void" or dst == "void":
            return False
        if src == "null":
            return dst not in PRIMITIVES
        if src in PRIMITIVES or dst in PRIMITIVES:
            return False
        if dst == "Object":
            return True
        if "[" in src or "[" in dst:
            return False
        if self.broken(src):
            return True
        return self.subtype(src, dst)

    def castable(self, src: Optional[str], dst: Optional[str]) -> bool:
        if src is None or dst is None:
            return True
        if src in PRIMITIVES or dst in PRIMITIVES:
            return src == dst
        return self.assignable(src, dst) or self.assignable(dst, src)

    def visible(self, m: _M, site: str) -> bool:
        if m.access is Access.PUBLIC:
            return True
        if m.access is Access.PRIVATE:
            return m.owner == site
        if _pkg(m.owner) == _pkg(site):
            return True
        return m.access is Access.PROTECTED and self.subtype(site, m.owner)

    # member views

    def _lib_members(self, fqn: str, kind: str) -> dict[str, _M]:
        flat = self.api.flat(fqn)
        if kind == "f":
            return {n: _M(f.owner, f.name, None, f.type, f.access, f.is_static, f.is_final, False)
                    for n, f in flat.fields.items()}
        return {k: _M(m.owner, m.name, tuple(m.param_types), m.return_type, m.access, m.is_static, m.is_final,
                      m.is_abstract) for k, m in flat.methods.items()}

    def inherited(self, fqn: str, kind: str) -> dict[str, _M]:
        out: dict[str, _M] = {}
        for s in self.supers(fqn):
            for k, m in self.members(s, kind).items():
                if m.access is Access.PRIVATE:
                    continue
                if m.access is Access.PACKAGE_PRIVATE and _pkg(m.owner) != _pkg(fqn):
                    continue
                cur = out.get(k)
                if cur is None or (kind == "m" and cur.abstract and not m.abstract):
                    out[k] = m
        return out

    def members(self, fqn: str, kind: str) -> dict[str, _M]:
        """Visible fields (``kind='f'``) or methods (``'m'``) of a type, inherited included."""
        if (fqn, kind) in self._views:
            return self._views[(fqn, kind)]
        if fqn not in self.ctypes:
            return self._lib_members(fqn, kind) if fqn in self.api.types else {}
        self._views[(fqn, kind)] = {}
        ct = self.ctypes[fqn]
        view = self.inherited(fqn, kind)
        view.update(ct.fields if kind == "f" else ct.methods)
        self._views[(fqn, kind)] = view
        return view

    # declarations

    def run(self) -> list[Diagnostic]:
        for unit in self.units:
            for imp in unit.imports:
                if not self.exists(imp.name):
                    self.report(imp.loc, "MISSING_SYMBOL", f"cannot find symbol: class {imp.name}")
                elif not self.type_visible(imp.name, f"{unit.package}.X"):
                    self.report(imp.loc, "ACCESS_VIOLATION", f"{imp.name} is not public")
            for t in unit.types:
                ct = self.ctypes.get(f"{unit.package}.{t.name}")
                if ct is not None and ct.ast is t:
                    self.check_type(ct)
        return sorted(set(self.out), key=lambda d: (d.location, d.code, d.message))

    def check_type(self, ct: _ClientType) -> None:
        for tref, target, clause in ct.clauses:
            self.check_clause(ct, tref, target, clause)
        if not self.broken(ct.fqn):
            self.check_overrides(ct)
            if not ct.abstract:
                self.check_complete(ct)
        for m in ct.ast.members:
            static = "static" in m.modifiers or (ct.iface and isinstance(m, FieldAst))
            if isinstance(m, FieldAst):
                ftype = self.resolve_type(m.type, ct.unit, ct.fqn)
                if m.init is not None:
                    env = _Env(ct, static, "void", [{}])
                    self.expect(self.expr(m.init, env), ftype, m.init)
            elif isinstance(m, MethodAst):
                rtype = self.resolve_type(m.return_type, ct.unit, ct.fqn)
                scope = {p.name: self.resolve_type(p.type, ct.unit, ct.fqn) for p in m.params}
                if m.body is not None:
                    self.block(m.body, _Env(ct, static, rtype, [scope]))
            elif isinstance(m, CtorAst):
                scope = {p.name: self.resolve_type(p.type, ct.unit, ct.fqn) for p in m.params}
                self.block(m.body, _Env(ct, False, "void", [scope], ctor=True))

    def check_clause(self, ct: _ClientType, tref: TypeRef, target: Optional[str], clause: str) -> None:
        if target is None:
            self.report(tref.loc, "UNRESOLVED_NAME", f"cannot find symbol: class {tref.name}")
            return
        if target in BUILTINS:
            if target == "String" or clause == "implements" or ct.iface:
                self.report(tref.loc, "CANNOT_EXTEND_FINAL" if target == "String" else "TYPE_MISMATCH",
                            f"cannot inherit from {target}")
            return
        if not self.type_visible(target, ct.fqn):
            self.report(tref.loc, "ACCESS_VIOLATION", f"{target} is not accessible here")
            return
        is_iface, is_final = self.kind_of(target)
        want_iface = ct.iface or clause == "implements"
        if is_iface != want_iface:
            what = "an interface" if want_iface else "a class"
            self.report(tref.loc, "TYPE_MISMATCH", f"{target} is not {what}")
        elif is_final:
            self.report(tref.loc, "CANNOT_EXTEND_FINAL", f"cannot inherit from final {target}")

    def kind_of(self, fqn: str) -> tuple[bool, bool]:
        if fqn in self.ctypes:
            ct = self.ctypes[fqn]
            return ct.iface, "final" in ct.ast.modifiers
        d = self.api.types[fqn]
        return d.kind == "interface", d.is_final

    def check_overrides(self, ct: _ClientType) -> None:
        inherited = self.inherited(ct.fqn, "m")
        for key, mine in ct.methods.items():
            node = ct.method_ast[key]
            marked = any(a.name == "Override" for a in node.annotations)
            if mine.access is Access.PRIVATE or None in mine.params:
                if marked and mine.access is Access.PRIVATE:
                    self.report(node.loc, "MISSING_SYMBOL", "method does not override a supertype method")
                continue
            theirs = inherited.get(key)
            if theirs is None:
                if marked:
                    self.report(node.loc, "MISSING_SYMBOL", "method does not override a supertype method")
                continue
            if marked and mine.static:
                self.report(node.loc, "MISSING_SYMBOL", "static method cannot be marked @Override")
            elif theirs.final:
                self.report(node.loc, "CANNOT_OVERRIDE_FINAL", f"{theirs.owner}.{key} is final")
            elif theirs.static != mine.static:
                self.report(node.loc, "STATIC_MISMATCH", f"{key} conflicts with {theirs.owner}.{key} on static")
            elif mine.access < theirs.access:
                self.report(node.loc, "ACCESS_VIOLATION", f"{key} weakens access of {theirs.owner}.{key}")
            elif not self.assignable(mine.type, theirs.type):
                self.report(node.loc, "TYPE_MISMATCH", f"{key} has an incompatible return type")

    def check_complete(self, ct: _ClientType) -> None:
        missing = {k for k, m in self.members(ct.fqn, "m").items() if m.abstract}
        if not missing:
            return
        for tref, target, _ in ct.clauses:
            if target is None or target in BUILTINS:
                continue
            view = self.members(target, "m")
            lacking = sorted(k for k in missing if k in view and view[k].abstract)
            if lacking:
                self.report(tref.loc, "ABSTRACT_NOT_IMPLEMENTED", f"{ct.fqn} does not implement {lacking[0]}")

    # statements

    def block(self, b: Block, env: "_Env") -> None:
        env.scopes.append({})
        for s in b.stmts:
            self.stmt(s, env)
        env.scopes.pop()

    def stmt(self, s, env: "_Env") -> None:
        if isinstance(s, Block):
            self.block(s, env)
        elif isinstance(s, LocalVar):
            vtype = self.resolve_type(s.type, env.ct.unit, env.ct.fqn)
            if s.init is not None:
                self.expect(self.expr(s.init, env), vtype, s.init)
            env.scopes[-1][s.name] = vtype
        elif isinstance(s, Assign):
            ok, ttype = self.target(s.target, env)
            vtype = self.expr(s.value, env)
            if ok:
                self.expect(vtype, ttype, s.value)
        elif isinstance(s, ExprStmt):
            self.expr(s.expr, env)
        elif isinstance(s, Return):
            if s.value is None:
                if env.ret not in (None, "void"):
                    self.report(s.loc, "TYPE_MISMATCH", "missing return value")
                return
            vtype = self.expr(s.value, env)
            if env.ret == "void":
                self.report(s.value.loc, "TYPE_MISMATCH", "unexpected return value")
            else:
                self.expect(vtype, env.ret, s.value)

    def expect(self, actual: Optional[str], expected: Optional[str], node) -> None:
        if not self.assignable(actual, expected):
            self.report(node.loc, "TYPE_MISMATCH", f"{actual} cannot be converted to {expected}")

    def target(self, t, env: "_Env") -> tuple[bool, Optional[str]]:
        """Check an assignment target; returns (still checkable, its type)."""
        if isinstance(t, Name):
            local = env.local(t.ident)
            if local is not _NO:
                return True, local
            f = self.implicit_field(t, env)
            if f is None:
                return False, None
        else:
            f = self.select(t, env, want="f")
            if f is None:
                return False, None
        if f.final and not (env.ctor and f.owner == env.ct.fqn):
            self.report(t.loc, "ASSIGN_TO_FINAL", f"cannot assign a value to final variable {f.name}")
            return False, f.type
        return True, f.type

    # expressions

    def expr(self, e, env: "_Env") -> Optional[str]:
        if isinstance(e, Literal):
            return _LIT[e.kind]
        if isinstance(e, This):
            if env.static:
                self.report(e.loc, "STATIC_MISMATCH", "this in static context")
                return None
            return env.ct.fqn
        if isinstance(e, Name):
            local = env.local(e.ident)
            if local is not _NO:
                return local
            f = self.implicit_field(e, env)
            return f.type if f else None
        if isinstance(e, Cast):
            ctype = self.resolve_type(e.type, env.ct.unit, env.ct.fqn)
            inner = self.expr(e.expr, env)
            if not self.castable(inner, ctype):
                self.report(e.loc, "TYPE_MISMATCH", f"{inner} cannot be cast to {ctype}")
            return ctype
        if isinstance(e, New):
            return self.new(e, env)
        if isinstance(e, FieldAccess):
            f = self.select(e, env, want="f")
            return f.type if f else None
        if isinstance(e, Call):
            m = self.select(e, env, want="m")
            return m.type if m else None
        raise TypeError(e)

    def implicit_field(self, n: Name, env: "_Env") -> Optional[_M]:
        f = self.members(env.ct.fqn, "f").get(n.ident)
        if f is None:
            if not self.broken(env.ct.fqn):
                self.report(n.loc, "UNRESOLVED_NAME", f"cannot find symbol: variable {n.ident}")
            return None
        if env.static and not f.static:
            self.report(n.loc, "STATIC_MISMATCH", f"non-static variable {n.ident} referenced from a static context")
            return None
        if not self.visible(f, env.ct.fqn):
            self.report(n.loc, "ACCESS_VIOLATION", f"{n.ident} is not accessible")
            return None
        return f

    @staticmethod
    def _dotted(e) -> Optional[list[str]]:
        parts = []
        while isinstance(e, FieldAccess):
            parts.append(e.name)
            e = e.target
        if not isinstance(e, Name):
            return None
        parts.append(e.ident)
        return parts[::-1]

    def qualifier(self, q, env: "_Env"):
        """``('type', fqn)`` when ``q`` names a type (longest prefix rule), else ``('value', type)``."""
        parts = self._dotted(q)
        if parts is not None:
            fqn = self.lookup(".".join(parts), env.ct.unit)
            if fqn is not None:
                if not self.type_visible(fqn, env.ct.fqn):
                    self.report(q.loc, "ACCESS_VIOLATION", f"{fqn} is not accessible here")
                return "type", fqn
        return "value", self.expr(q, env)

    def select(self, e, env: "_Env", want: str) -> Optional[_M]:
        form, owner = self.qualifier(e.target, env)
        args = [self.expr(a, env) for a in e.args] if want == "m" else []
        if owner is None:
            return None
        site = env.ct.fqn
        if owner in PRIMITIVES or owner in BUILTINS or owner in ("null", "void") or "[" in owner:
            self.report(e.loc, "TYPE_UNKNOWN", f"{owner} has no member {e.name}")
            return None
        view = self.members(owner, want)
        if want == "f":
            found = view.get(e.name)
            if found is None:
                if not self.broken(owner):
                    self.report(e.loc, "MISSING_SYMBOL", f"cannot find symbol: variable {e.name} in {owner}")
                return None
            if not self.visible(found, site):
                self.report(e.loc, "ACCESS_VIOLATION", f"{e.name} has restricted access in {found.owner}")
                return None
        else:
            found = self.pick([m for m in view.values() if m.name == e.name], args, e, owner, site)
            if found is None:
                return None
        if found.static != (form == "type"):
            self.report(e.loc, "STATIC_MISMATCH", f"{e.name} used in the wrong static context")
            return None
        return found

    def pick(self, named: list[_M], args: list, node, owner: str, site: str) -> Optional[_M]:
        cands = [m for m in named if len(m.params) == len(args)]
        if not cands:
            if not self.broken(owner):
                self.report(node.loc, "MISSING_SYMBOL", f"cannot find symbol: {getattr(node, 'name', '<init>')}"
                                                        f" in {owner}")
            return None
        cands = [m for m in cands if self.visible(m, site)]
        if not cands:
            self.report(node.loc, "ACCESS_VIOLATION", f"{getattr(node, 'name', '<init>')} has restricted access")
            return None
        exact = [m for m in cands if all(a == p and p is not None for a, p in zip(args, m.params))]
        if exact:
            return min(exact, key=lambda m: m.key)
        fits = [m for m in cands if all(self.assignable(a, p) for a, p in zip(args, m.params))]
        if len(fits) == 1:
            return fits[0]
        if None in args:
            return None
        if fits:
            self.report(node.loc, "AMBIGUOUS_CALL", "reference is ambiguous")
        else:
            self.report(node.loc, "TYPE_MISMATCH", "arguments do not match any overload")
        return None

    def new(self, e: New, env: "_Env") -> Optional[str]:
        fqn = self.resolve_type(e.type, env.ct.unit, env.ct.fqn)
        args = [self.expr(a, env) for a in e.args]
        if fqn is None:
            return None
        if fqn in BUILTINS:
            return fqn
        if fqn in self.ctypes:
            ct = self.ctypes[fqn]
            abstract, ctors = ct.abstract, ct.ctors
        else:
            d = self.api.types[fqn]
            abstract = d.is_abstract or d.kind == "interface"
            ctors = [_M(fqn, "<init>", tuple(c.param_types), fqn, c.access, False, False, False)
                     for c in d.constructors.values()]
        if abstract:
            self.report(e.type.loc, "CANNOT_INSTANTIATE_ABSTRACT", f"{fqn} is abstract; cannot be instantiated")
            return fqn
        self.pick(ctors, args, e, fqn, env.ct.fqn)
        return fqn


class _Missing:
    pass


_NO = _Missing()


class _Env:
    def __init__(self, ct: _ClientType, static: bool, ret: Optional[str], scopes: list[dict], ctor: bool = False):
        self.ct = ct
        self.static = static
        self.ret = ret
        self.scopes = scopes
        self.ctor = ctor

    def local(self, name: str):
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return _NO


def check_client(units: Iterable[CompilationUnit], api: ApiModel) -> list[Diagnostic]:
    """All compile errors of a client against ``api``, sorted by location and code."""
    return _Checker(units, api).run()


def broken_by_oracle(units: Iterable[CompilationUnit], old_api: ApiModel, new_api: ApiModel) -> set[tuple[str, int]]:
    """(file, line) of every error the new library introduces into a conforming client."""
    units = list(units)
    before = check_client(units, old_api)
    if before:
        raise PreconditionViolation(before)
    return {(d.location.file, d.location.line) for d in check_client(units, new_api)}
