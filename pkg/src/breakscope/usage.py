"""Client usage extraction.

Client sources are resolved against one library :class:`ApiModel` (the old
version during extraction). Every reference to a library declaration becomes
a :class:`Use`. Value-producing uses also record how their value is consumed
(:class:`Flow`), so impact analysis can re-check them against a new API.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from .apimodel import (
    BUILTIN_TYPES,
    Access,
    ApiModel,
    ConstructorDecl,
    DeclRef,
    FieldDecl,
    MethodDecl,
    TypeDecl,
    element_type,
    is_reference,
)
from .diagnostics import Diagnostic
from .syntax import SourceLocation
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

ERROR = "?"

LITERAL_TYPES = {
    "int": "int", "long": "long", "float": "float", "double": "double",
    "string": "String", "char": "char", "boolean": "boolean", "null": "null",
}


class UseKind(Enum):
    IMPORT = "IMP"
    TYPE_REFERENCE = "REF"
    TYPE_ARGUMENT = "TARG"  # generics are outside Mini-J; never produced
    EXTENDS = "EXT"
    IMPLEMENTS = "IMPL"
    INSTANTIATION = "NEW"
    METHOD_INVOCATION = "INV"
    METHOD_OVERRIDE = "OVR"
    FIELD_READ = "READ"
    FIELD_WRITE = "WRITE"
    CAST = "CAST"

    @property
    def abbr(self) -> str:
        return self.value

    @property
    def prose(self) -> str:
        return self.name.lower().replace("_", " ")


@dataclass(eq=False)
class CallSite:
    """A resolved invocation or instantiation, kept for re-resolution."""

    name: str
    owner: str
    detail: str
    site: str
    arg_types: list[str] = field(default_factory=list)
    result: str = ERROR
    flow: Optional["Flow"] = None
    is_ctor: bool = False
    # source kept so the call can be re-typed against another library version
    target: object = None
    args: tuple = ()
    frame: Optional["Frame"] = None


@dataclass(frozen=True, eq=False)
class Frame:
    """Where an expression sits: unit, enclosing client type, static context and visible locals."""

    unit: object
    site: str
    static: bool
    scope: dict


@dataclass(eq=False)
class Link:
    """A member access applied to a receiver value."""

    name: str
    site: str
    call: Optional[CallSite] = None
    result: str = ERROR
    flow: Optional["Flow"] = None


@dataclass(eq=False)
class Flow:
    """Where a value goes: discarded, bound to a type, cast, passed, or dereferenced."""

    kind: str  # discard | expect | cast | arg | receiver | write | assign
    type: str = ERROR
    call: Optional[CallSite] = None
    index: int = 0
    link: Optional[Link] = None
    assign: Optional["Assignment"] = None


@dataclass(frozen=True, eq=False)
class Assignment:
    """An assignment statement kept so both sides can be re-typed against another library version."""

    target: object
    value: object
    frame: Frame


DISCARD = Flow("discard")


@dataclass(frozen=True)
class Use:
    location: SourceLocation
    kind: UseKind
    target: DeclRef
    enclosing_client_type: str
    detail: str = ""
    via: Optional[str] = None
    member_key: str = ""
    flow: Optional[Flow] = field(default=None, compare=False, repr=False)
    call: Optional[CallSite] = field(default=None, compare=False, repr=False)
    rhs_type: Optional[str] = field(default=None, compare=False, repr=False)
    assign: Optional[Assignment] = field(default=None, compare=False, repr=False)
    # qualifier expression of a field access, for re-typing the receiver
    receiver: object = field(default=None, compare=False, repr=False)
    frame: Optional[Frame] = field(default=None, compare=False, repr=False)

    @property
    def sort_key(self):
        return (self.location, self.kind.name, str(self.target), self.detail)


@dataclass(frozen=True)
class UsageModel:
    client_name: str
    uses: tuple[Use, ...]
    resolution_errors: tuple[Diagnostic, ...] = ()


def package_of(fqn: str) -> str:
    return fqn.rpartition(".")[0]


class ClientEnv:
    """Client types layered over one library API: name resolution, member views, typing."""

    def __init__(self, units: list[CompilationUnit], api: ApiModel):
        self.api = api
        self.units = sorted(units, key=lambda u: u.file)
        self.types: dict[str, TypeDecl] = {}
        self.asts: dict[str, tuple[CompilationUnit, TypeDeclAst]] = {}
        self.broken: set[str] = set()
        self._imports: dict[int, dict[str, str]] = {}
        self._methods: dict[str, dict[str, MethodDecl]] = {}
        self._fields: dict[str, dict[str, FieldDecl]] = {}
        self._ancestors: dict[str, tuple[str, ...]] = {}
        for unit in self.units:
            for t in unit.types:
                fqn = f"{unit.package}.{t.name}"
                self.asts.setdefault(fqn, (unit, t))
        for unit in self.units:
            self._imports[id(unit)] = {
                imp.name.rpartition(".")[2]: imp.name for imp in unit.imports if self.known(imp.name)
            }
        for fqn, (unit, t) in self.asts.items():
            self.types[fqn] = self._declare(fqn, unit, t)

    # names

    def known(self, fqn: str) -> bool:
        return fqn in self.asts or fqn in self.api.types

    def is_library(self, fqn: Optional[str]) -> bool:
        return fqn is not None and fqn in self.api.types and fqn not in self.asts

    def decl(self, fqn: str) -> Optional[TypeDecl]:
        if fqn in self.types:
            return self.types[fqn]
        return self.api.types.get(fqn)

    def resolve_name(self, name: str, unit: CompilationUnit) -> Optional[str]:
        if "." in name:
            return name if self.known(name) else None
        imported = self._imports.get(id(unit), {}).get(name)
        if imported:
            return imported
        local = f"{unit.package}.{name}"
        if local in self.asts or local in self.api.types:
            return local
        if name in BUILTIN_TYPES:
            return name
        return None

    def resolve_typeref(self, tref: TypeRef, unit: CompilationUnit) -> Optional[str]:
        if tref.name == "void" or tref.name in PRIMITIVES:
            base = tref.name
        else:
            base = self.resolve_name(tref.name, unit)
            if base is None:
                return None
        return base + "[]" * tref.dims

    def _declare(self, fqn: str, unit: CompilationUnit, t: TypeDeclAst) -> TypeDecl:
        def res(tref: TypeRef) -> str:
            return self.resolve_typeref(tref, unit) or ERROR

        iface = t.kind == "interface"
        fields, methods, ctors = {}, {}, {}
        for m in t.members:
            annots = frozenset(a.name for a in m.annotations)
            mods = set(m.modifiers)
            if isinstance(m, FieldAst):
                access = Access.PUBLIC if iface else Access.from_modifiers(m.modifiers)
                fields.setdefault(m.name, FieldDecl(fqn, m.name, res(m.type), access,
                                                    iface or "static" in mods, iface or "final" in mods,
                                                    annots, m.loc))
            elif isinstance(m, MethodAst):
                access = Access.PUBLIC if iface else Access.from_modifiers(m.modifiers)
                d = MethodDecl(fqn, m.name, tuple(res(p.type) for p in m.params), res(m.return_type), access,
                               "static" in mods, "final" in mods, iface or "abstract" in mods, annots, m.loc)
                methods.setdefault(d.key, d)
            elif isinstance(m, CtorAst):
                d = ConstructorDecl(fqn, tuple(res(p.type) for p in m.params), Access.from_modifiers(m.modifiers),
                                    annots, m.loc)
                ctors.setdefault(d.key, d)
        if not iface and not ctors:
            access = Access.PUBLIC if "public" in t.modifiers else Access.PACKAGE_PRIVATE
            ctors["<init>()"] = ConstructorDecl(fqn, (), access, frozenset(), t.loc, synthetic=True)
        supers = []
        for tref in t.extends + t.implements:
            r = self.resolve_name(tref.name, unit)
            if r is None:
                self.broken.add(fqn)
            elif r != "Object":
                supers.append(r)
        if iface:
            superclass, interfaces = None, tuple(supers)
        else:
            n_ext = len([x for x in t.extends if self.resolve_name(x.name, unit) not in (None, "Object")])
            superclass = supers[0] if n_ext else None
            interfaces = tuple(supers[n_ext:])
        return TypeDecl(fqn, t.kind, Access.from_modifiers(t.modifiers), "final" in t.modifiers,
                        iface or "abstract" in t.modifiers, superclass, interfaces, fields, methods, ctors,
                        frozenset(a.name for a in t.annotations), t.loc)

    # hierarchy

    def supertypes(self, fqn: str) -> tuple[str, ...]:
        d = self.decl(fqn)
        return d.supertypes if d else ()

    def ancestors(self, fqn: str) -> tuple[str, ...]:
        if fqn in self._ancestors:
            return self._ancestors[fqn]
        if fqn not in self.types:
            result = self.api.ancestors(fqn) if fqn in self.api.types else ()
        else:
            out: list[str] = []
            todo = list(self.supertypes(fqn))
            while todo:
                s = todo.pop(0)
                if s in out or s == fqn:
                    continue
                out.append(s)
                todo.extend(self.supertypes(s))
            result = tuple(out)
        self._ancestors[fqn] = result
        return result

    def has_broken_ancestry(self, fqn: str) -> bool:
        if fqn in self.broken:
            return True
        return any(a in self.broken or a not in self.types and a not in self.api.types
                   for a in self.ancestors(fqn))

    def is_subtype(self, sub: str, sup: str) -> bool:
        return sub == sup or sup in self.ancestors(sub)

    def is_class_type(self, t: str) -> bool:
        return self.decl(t) is not None

    def assignable(self, src: str, dst: str) -> bool:
        if src == ERROR or dst == ERROR:
            return True
        if src == dst:
            return True
        if "void" in (src, dst):
            return False
        if src == "null":
            return is_reference(dst)
        if src in PRIMITIVES or dst in PRIMITIVES:
            return False
        if dst == "Object":
            return True
        if src.endswith("]") or dst.endswith("]"):
            return False
        if src in self.types and self.has_broken_ancestry(src):
            return True
        return dst in self.ancestors(src)

    def cast_legal(self, src: str, dst: str) -> bool:
        if ERROR in (src, dst):
            return True
        if src in PRIMITIVES or dst in PRIMITIVES:
            return src == dst
        return self.assignable(src, dst) or self.assignable(dst, src)

    # members

    def _inheritable(self, member, into: str) -> bool:
        if member.access is Access.PRIVATE:
            return False
        if member.access is Access.PACKAGE_PRIVATE:
            return package_of(member.owner) == package_of(into)
        return True

    def inherited_methods(self, fqn: str) -> dict[str, MethodDecl]:
        out: dict[str, MethodDecl] = {}
        for sup in self.supertypes(fqn):
            for key, m in self.methods(sup).items():
                if not self._inheritable(m, fqn):
                    continue
                cur = out.get(key)
                if cur is None or (cur.is_abstract and not m.is_abstract):
                    out[key] = m
        return out

    def methods(self, fqn: str) -> dict[str, MethodDecl]:
        if fqn in self._methods:
            return self._methods[fqn]
        if fqn not in self.types:
            return self.api.flat(fqn).methods if fqn in self.api.types else {}
        self._methods[fqn] = {}  # cycle guard
        view = dict(self.inherited_methods(fqn))
        for key, m in self.types[fqn].methods.items():
            view[key] = m
        self._methods[fqn] = view
        return view

    def fields(self, fqn: str) -> dict[str, FieldDecl]:
        if fqn in self._fields:
            return self._fields[fqn]
        if fqn not in self.types:
            return self.api.flat(fqn).fields if fqn in self.api.types else {}
        self._fields[fqn] = {}
        view = dict(self.types[fqn].fields)
        for sup in self.supertypes(fqn):
            for name, f in self.fields(sup).items():
                if name not in view and self._inheritable(f, fqn):
                    view[name] = f
        self._fields[fqn] = view
        return view

    def accessible(self, access: Access, owner: str, site: str) -> bool:
        if access is Access.PUBLIC:
            return True
        if access is Access.PRIVATE:
            return owner == site
        if package_of(owner) == package_of(site):
            return True
        return access is Access.PROTECTED and self.is_subtype(site, owner)

    def type_accessible(self, fqn: str, site: str) -> bool:
        d = self.decl(element_type(fqn))
        return d is None or d.access is Access.PUBLIC or d.package == package_of(site)

    def survives(self, t: str) -> bool:
        """Is every type named in ``t`` still known here?"""
        e = element_type(t)
        return e in PRIMITIVES or e in BUILTIN_TYPES or e in ("void", "null", ERROR) or self.known(e)

    def opaque(self, fqn: str) -> bool:
        """True for unknown types and client types whose hierarchy is broken: lookups there stay silent."""
        if fqn == ERROR:
            return True
        if fqn in self.types:
            return self.has_broken_ancestry(fqn)
        # a library type that no longer exists (stale declared types of locals and parameters)
        return not (fqn in self.api.types or fqn in BUILTIN_TYPES or fqn in PRIMITIVES
                    or fqn in ("null", "void") or "[" in fqn)

    def _pick(self, cands: list, args: list[str], site: Optional[str], owner: str = ERROR):
        if not cands:
            return None, "silent" if self.opaque(owner) else "missing"
        if site is not None:
            cands = [c for c in cands if self.accessible(c.access, c.owner, site)]
            if not cands:
                return None, "access"
        exact = [c for c in cands if list(c.param_types) == list(args)]
        if exact:
            return exact[0], ""
        app = [c for c in cands if all(self.assignable(a, p) for a, p in zip(args, c.param_types))]
        if len(app) == 1:
            return app[0], ""
        if ERROR in args:
            return None, "silent"
        return None, "ambiguous" if app else "mismatch"

    def resolve_method(self, owner: str, name: str, args: list[str], site: Optional[str] = None):
        """Return ``(MethodDecl or None, failure reason)``."""
        cands = [m for m in self.methods(owner).values() if m.name == name and len(m.param_types) == len(args)]
        return self._pick(sorted(cands, key=lambda m: m.key), args, site, owner)

    def resolve_ctor(self, owner: str, args: list[str], site: Optional[str] = None):
        d = self.decl(owner)
        cands = [] if d is None else [c for c in d.constructors.values() if len(c.param_types) == len(args)]
        return self._pick(sorted(cands, key=lambda c: c.key), args, site, owner)


def resolve_names(units: list[CompilationUnit], api: ApiModel) -> ClientEnv:
    """Build the symbol tables of a client against ``api``."""
    return ClientEnv(units, api)


@dataclass
class _Ctx:
    unit: CompilationUnit
    site: str
    static: bool
    return_type: str = "void"


class UsageExtractor:
    def __init__(self, env: ClientEnv):
        self.env = env
        self.uses: list[Use] = []
        self.diags: list[Diagnostic] = []

    def diag(self, loc: SourceLocation, code: str, message: str) -> None:
        self.diags.append(Diagnostic(loc, code, message))

    def use(self, kind: UseKind, target: DeclRef, loc: SourceLocation, ctx_site: str, **kw) -> None:
        self.uses.append(Use(loc, kind, target, ctx_site, **kw))

    def run(self) -> None:
        for unit in self.env.units:
            for imp in unit.imports:
                if self.env.is_library(imp.name):
                    self.use(UseKind.IMPORT, DeclRef(imp.name), imp.loc, f"{unit.package}.{unit.types[0].name}")
                elif imp.name not in self.env.asts:
                    self.diag(imp.loc, "UNRESOLVED_NAME", f"cannot resolve import {imp.name}")
            for t in unit.types:
                self.type_decl(unit, t)

    # declarations

    def type_ref(self, tref: TypeRef, ctx: _Ctx) -> str:
        resolved = self.env.resolve_typeref(tref, ctx.unit)
        if resolved is None:
            self.diag(tref.loc, "UNRESOLVED_NAME", f"cannot resolve type {tref.name}")
            return ERROR
        elem = element_type(resolved)
        if self.env.is_library(elem):
            self.use(UseKind.TYPE_REFERENCE, DeclRef(elem), tref.loc, ctx.site)
        return resolved

    def type_decl(self, unit: CompilationUnit, t: TypeDeclAst) -> None:
        fqn = f"{unit.package}.{t.name}"
        decl = self.env.types[fqn]
        ctx = _Ctx(unit, fqn, False)
        for kind, refs in ((UseKind.EXTENDS, t.extends),
                           (UseKind.EXTENDS if t.kind == "interface" else UseKind.IMPLEMENTS, t.implements)):
            for tref in refs:
                r = self.env.resolve_name(tref.name, unit)
                if r is None:
                    self.diag(tref.loc, "UNRESOLVED_NAME", f"cannot resolve type {tref.name}")
                elif self.env.is_library(r):
                    self.use(kind, DeclRef(r), tref.loc, fqn)
        for m in t.members:
            static = "static" in m.modifiers or (t.kind == "interface" and isinstance(m, FieldAst))
            mctx = _Ctx(unit, fqn, static)
            if isinstance(m, FieldAst):
                ftype = self.type_ref(m.type, mctx)
                if m.init is not None:
                    self.value(m.init, [{}], mctx, Flow("expect", ftype), ftype)
            elif isinstance(m, MethodAst):
                mctx.return_type = self.type_ref(m.return_type, mctx)
                scope = {p.name: self.type_ref(p.type, mctx) for p in m.params}
                self._override(decl, m, fqn)
                if m.body is not None:
                    self.block(m.body, [scope], mctx)
            elif isinstance(m, CtorAst):
                scope = {p.name: self.type_ref(p.type, mctx) for p in m.params}
                self.block(m.body, [scope], mctx)

    def _override(self, decl: TypeDecl, m: MethodAst, fqn: str) -> None:
        if "private" in m.modifiers:
            return
        mine = [d for d in decl.methods.values() if d.location == m.loc]
        if not mine or ERROR in mine[0].param_types:
            return
        key = mine[0].key
        inherited = self.env.inherited_methods(fqn).get(key)
        if inherited is None or not self.env.is_library(inherited.owner):
            return
        if "static" in m.modifiers:
            detail = "hide"
        else:
            detail = "marked" if any(a.name == "Override" for a in m.annotations) else "unmarked"
        self.use(UseKind.METHOD_OVERRIDE, inherited.ref, m.loc, fqn, detail=detail, via=fqn, member_key=key)

    # statements

    def block(self, b: Block, scopes: list[dict], ctx: _Ctx) -> None:
        scopes = scopes + [{}]
        for s in b.stmts:
            self.stmt(s, scopes, ctx)

    def stmt(self, s, scopes: list[dict], ctx: _Ctx) -> None:
        if isinstance(s, Block):
            self.block(s, scopes, ctx)
        elif isinstance(s, LocalVar):
            vtype = self.type_ref(s.type, ctx)
            if s.init is not None:
                self.value(s.init, scopes, ctx, Flow("expect", vtype), vtype)
            scopes[-1][s.name] = vtype
        elif isinstance(s, Assign):
            ttype, write, link = self.lvalue(s.target, scopes, ctx)
            assign = Assignment(s.target, s.value, self._frame(scopes, ctx))
            vtype = self.value(s.value, scopes, ctx, Flow("assign", ttype, assign=assign), ttype)
            if link is not None:
                link.flow = Flow("write", vtype, assign=assign)
            if write is not None:
                self.uses[self.uses.index(write)] = replace(write, rhs_type=vtype, assign=assign)
        elif isinstance(s, ExprStmt):
            self.expr(s.expr, scopes, ctx, DISCARD)
        elif isinstance(s, Return):
            if s.value is not None:
                self.value(s.value, scopes, ctx, Flow("expect", ctx.return_type), ctx.return_type)

    def value(self, e, scopes, ctx: _Ctx, flow: Flow, expected: str) -> str:
        """Walk ``e`` whose value is converted to ``expected``."""
        actual = self.expr(e, scopes, ctx, flow)
        self.conversion(actual, expected, e, ctx, flow.assign)
        return actual

    def conversion(self, actual: str, expected: str, e, ctx: _Ctx, assign: Optional[Assignment] = None) -> None:
        if (actual != expected and self.env.is_library(expected) and actual not in (ERROR, "null")
                and self.env.is_class_type(actual) and actual not in BUILTIN_TYPES):
            self.use(UseKind.CAST, DeclRef(expected), e.loc, ctx.site, detail="implicit", via=actual,
                     assign=assign)

    def lvalue(self, target, scopes, ctx: _Ctx):
        if isinstance(target, Name):
            local = self._local(target.ident, scopes)
            if local is not None:
                return local, None, None
            return self._implicit_field(target, ctx, UseKind.FIELD_WRITE, None) + (None,)
        link = Link(target.name, ctx.site)
        qual = self.qualifier(target.target, scopes, ctx, link)
        ttype, write = self._field_access(target, qual, scopes, ctx, UseKind.FIELD_WRITE, None)
        link.result = ttype
        return ttype, write, link

    # expressions

    @staticmethod
    def _local(name: str, scopes: list[dict]) -> Optional[str]:
        for scope in reversed(scopes):
            if name in scope:
                return scope[name]
        return None

    def _implicit_field(self, node: Name, ctx: _Ctx, kind: UseKind, flow: Optional[Flow]):
        f = self.env.fields(ctx.site).get(node.ident)
        if f is None:
            self.diag(node.loc, "UNRESOLVED_NAME", f"cannot resolve {node.ident}")
            return ERROR, None
        if self.env.is_library(f.owner):
            detail = "implicit-static" if ctx.static else "implicit"
            u = Use(node.loc, kind, f.ref, ctx.site, detail, ctx.site, flow=flow)
            self.uses.append(u)
            return f.type, u
        return f.type, None

    def chain_text(self, e) -> Optional[str]:
        if isinstance(e, Name):
            return e.ident
        if isinstance(e, FieldAccess):
            head = self.chain_text(e.target)
            return None if head is None else f"{head}.{e.name}"
        return None

    def qualifier(self, target, scopes, ctx: _Ctx, link: Link) -> tuple[str, str]:
        text = self.chain_text(target)
        if text is not None:
            fqn = self.env.resolve_name(text, ctx.unit)
            if fqn is not None:
                return "type", fqn
        return "value", self.expr(target, scopes, ctx, Flow("receiver", link=link))

    def _field_access(self, node: FieldAccess, qual, scopes, ctx: _Ctx, kind: UseKind, flow: Optional[Flow]):
        form, qtype = qual
        if qtype == ERROR:
            return ERROR, None
        f = self.env.fields(qtype).get(node.name)
        if f is None:
            self.diag(node.loc, "TYPE_UNKNOWN", f"no field {node.name} in {qtype}")
            return ERROR, None
        if self.env.is_library(f.owner):
            detail = "static" if form == "type" else "instance"
            u = Use(node.loc, kind, f.ref, ctx.site, detail, qtype, flow=flow,
                    receiver=node.target, frame=self._frame(scopes, ctx))
            self.uses.append(u)
            return f.type, u
        return f.type, None

    def expr(self, e, scopes, ctx: _Ctx, flow: Flow) -> str:
        if isinstance(e, Literal):
            return LITERAL_TYPES[e.kind]
        if isinstance(e, This):
            return ctx.site
        if isinstance(e, Name):
            local = self._local(e.ident, scopes)
            if local is not None:
                return local
            return self._implicit_field(e, ctx, UseKind.FIELD_READ, flow)[0]
        if isinstance(e, Cast):
            ctype = self.env.resolve_typeref(e.type, ctx.unit)
            if ctype is None:
                self.diag(e.type.loc, "UNRESOLVED_NAME", f"cannot resolve type {e.type.name}")
                ctype = ERROR
            inner = self.expr(e.expr, scopes, ctx, Flow("cast", ctype))
            if self.env.is_library(ctype):
                self.use(UseKind.CAST, DeclRef(ctype), e.type.loc, ctx.site, detail="explicit", via=inner)
            return ctype
        if isinstance(e, New):
            return self._new(e, scopes, ctx, flow)
        if isinstance(e, FieldAccess):
            link = Link(e.name, ctx.site, flow=flow)
            qual = self.qualifier(e.target, scopes, ctx, link)
            result = self._field_access(e, qual, scopes, ctx, UseKind.FIELD_READ, flow)[0]
            link.result = result
            return result
        if isinstance(e, Call):
            return self._call(e, scopes, ctx, flow)
        raise TypeError(f"unexpected expression {e!r}")

    @staticmethod
    def _frame(scopes, ctx: _Ctx) -> Frame:
        return Frame(ctx.unit, ctx.site, ctx.static, {k: v for scope in scopes for k, v in scope.items()})

    def _args(self, args, scopes, ctx: _Ctx, cs: CallSite) -> list[str]:
        cs.args = tuple(args)
        cs.frame = self._frame(scopes, ctx)
        return [self.expr(a, scopes, ctx, Flow("arg", call=cs, index=i)) for i, a in enumerate(args)]

    def _new(self, e: New, scopes, ctx: _Ctx, flow: Flow) -> str:
        fqn = self.env.resolve_name(e.type.name, ctx.unit)
        cs = CallSite("<init>", fqn or ERROR, "new", ctx.site, flow=flow, is_ctor=True)
        cs.arg_types = self._args(e.args, scopes, ctx, cs)
        if fqn is None:
            self.diag(e.type.loc, "UNRESOLVED_NAME", f"cannot resolve type {e.type.name}")
            return ERROR
        cs.result = fqn
        if self.env.is_library(fqn):
            self.use(UseKind.INSTANTIATION, DeclRef(fqn), e.type.loc, ctx.site)
        ctor, why = self.env.resolve_ctor(fqn, cs.arg_types)
        if ctor is None:
            if why != "silent":
                self.diag(e.loc, "AMBIGUOUS_CALL", f"no unique constructor for {fqn}")
            return fqn
        if self.env.is_library(fqn):
            self.use(UseKind.INSTANTIATION, ctor.ref, e.type.loc, ctx.site, detail="constructor", via=fqn, call=cs)
        for a, p, t in zip(e.args, ctor.param_types, cs.arg_types):
            self.conversion(t, p, a, ctx)
        return fqn

    def _call(self, e: Call, scopes, ctx: _Ctx, flow: Flow) -> str:
        link = Link(e.name, ctx.site, flow=flow)
        form, qtype = self.qualifier(e.target, scopes, ctx, link)
        cs = CallSite(e.name, qtype, "static" if form == "type" else "instance", ctx.site, flow=flow,
                      target=e.target)
        link.call = cs
        cs.arg_types = self._args(e.args, scopes, ctx, cs)
        if qtype == ERROR:
            return ERROR
        m, why = self.env.resolve_method(qtype, e.name, cs.arg_types)
        if m is None:
            if why == "missing":
                self.diag(e.loc, "TYPE_UNKNOWN", f"no method {e.name} in {qtype}")
            elif why != "silent":
                self.diag(e.loc, "AMBIGUOUS_CALL", f"cannot resolve call {e.name}")
            return ERROR
        cs.result = link.result = m.return_type
        if self.env.is_library(m.owner):
            self.use(UseKind.METHOD_INVOCATION, m.ref, e.loc, ctx.site, detail=cs.detail, via=qtype,
                     flow=flow, call=cs)
        for a, p, t in zip(e.args, m.param_types, cs.arg_types):
            self.conversion(t, p, a, ctx)
        return m.return_type


def extract_uses(units: list[CompilationUnit], api: ApiModel, client_name: str = "client") -> UsageModel:
    """Collect every reference from ``units`` to a declaration of ``api``."""
    walker = UsageExtractor(ClientEnv(units, api))
    walker.run()
    uses = sorted(walker.uses, key=lambda u: u.sort_key)
    diags = sorted(set(walker.diags))
    return UsageModel(client_name, tuple(uses), tuple(diags))


def _walker_for(frame: Frame, env: ClientEnv) -> tuple["UsageExtractor", list, _Ctx]:
    # locals declared with a type the library no longer has become error-typed
    scope = {k: (v if env.survives(v) else ERROR) for k, v in frame.scope.items()}
    return UsageExtractor(env), [scope], _Ctx(frame.unit, frame.site, frame.static)


def retype(expr, frame: Frame, env: ClientEnv) -> str:
    """Type of ``expr`` at ``frame`` under ``env``."""
    walker, scopes, ctx = _walker_for(frame, env)
    return walker.expr(expr, scopes, ctx, DISCARD)


def retype_receiver(u: Use, env: ClientEnv) -> str:
    """Receiver type of a member use under ``env``; implicit uses keep their enclosing type."""
    if u.call is not None and not u.call.is_ctor:
        return retype_call(u.call, env)[1]
    if u.receiver is None:
        return u.via
    walker, scopes, ctx = _walker_for(u.frame, env)
    return walker.qualifier(u.receiver, scopes, ctx, Link("", u.frame.site))[1]


def retype_call(cs: CallSite, env: ClientEnv) -> tuple[str, str, list[str]]:
    """``(detail, owner, argument types)`` of a recorded call under ``env``."""
    walker, scopes, ctx = _walker_for(cs.frame, env)
    if cs.is_ctor:
        detail, owner = cs.detail, (cs.owner if env.survives(cs.owner) else ERROR)
    else:
        form, owner = walker.qualifier(cs.target, scopes, ctx, Link(cs.name, cs.site))
        detail = "static" if form == "type" else "instance"
    args = [walker.expr(a, scopes, ctx, DISCARD) for a in cs.args]
    return detail, owner, args


def infer_expr_type(expr, env: ClientEnv, unit: CompilationUnit, site: str,
                    scope: Optional[dict[str, str]] = None, static: bool = False) -> tuple[str, list[Diagnostic]]:
    """Type of ``expr`` evaluated inside client type ``site``; ``?`` when unknown."""
    walker = UsageExtractor(env)
    t = walker.expr(expr, [dict(scope or {})], _Ctx(unit, site, static), DISCARD)
    return t, walker.diags
