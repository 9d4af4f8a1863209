"""Exported API surface of one library version.

:func:`extract_api` folds parsed compilation units into an :class:`ApiModel`,
resolving member signatures to fully qualified names and applying exclusion
rules. :meth:`ApiModel.flatten` adds inherited members to every type.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Optional, Union

from .syntax import SourceLocation
from .syntax.nodes import PRIMITIVES, CompilationUnit, CtorAst, FieldAst, MethodAst, TypeDeclAst, TypeRef

BUILTIN_TYPES = frozenset({"String", "Object"})


class ModelError(Exception):
    """The library sources do not form a valid closed API model."""

    def __init__(self, message: str, location: Optional[SourceLocation] = None):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class DuplicateType(ModelError):
    pass


class CycleError(ModelError):
    pass


class Access(IntEnum):
    PRIVATE = 0
    PACKAGE_PRIVATE = 1
    PROTECTED = 2
    PUBLIC = 3

    @property
    def label(self) -> str:
        return "packagePrivate" if self is Access.PACKAGE_PRIVATE else self.name.lower()

    @classmethod
    def from_modifiers(cls, modifiers: Iterable[str]) -> "Access":
        for mod in modifiers:
            if mod in ("public", "protected", "private"):
                return cls[mod.upper()]
        return cls.PACKAGE_PRIVATE


def erase(tref: TypeRef, resolved: str) -> str:
    return resolved + "[]" * tref.dims


def element_type(t: str) -> str:
    return t.split("[", 1)[0]


def is_reference(t: str) -> bool:
    return t == "null" or t.endswith("]") or (t not in PRIMITIVES and t != "void")


@dataclass(frozen=True, order=True)
class DeclRef:
    """Canonical declaration identifier.

    ``p.T`` for types, ``p.T::m(p.A,int)`` for methods, ``p.T::f`` for fields
    and ``p.T::<init>(int)`` for constructors.
    """

    owner: str
    kind: str = "type"  # type | method | field | constructor
    name: str = ""
    params: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "DeclRef":
        if "::" not in text:
            return cls(text)
        owner, member = text.split("::", 1)
        if "(" not in member:
            return cls(owner, "field", member)
        if not member.endswith(")"):
            raise ValueError(f"malformed declaration reference {text!r}")
        name, args = member[:-1].split("(", 1)
        params = tuple(args.split(",")) if args else ()
        kind = "constructor" if name == "<init>" else "method"
        return cls(owner, kind, name, params)

    @property
    def key(self) -> str:
        if self.kind in ("method", "constructor"):
            return f"{self.name}({','.join(self.params)})"
        return self.name

    @property
    def type_fqn(self) -> str:
        return self.owner

    def __str__(self) -> str:
        if self.kind == "type":
            return self.owner
        return f"{self.owner}::{self.key}"


@dataclass(frozen=True)
class MethodDecl:
    owner: str
    name: str
    param_types: tuple[str, ...]
    return_type: str
    access: Access
    is_static: bool = False
    is_final: bool = False
    is_abstract: bool = False
    annotations: frozenset[str] = frozenset()
    location: Optional[SourceLocation] = None
    excluded: bool = False

    @property
    def key(self) -> str:
        return f"{self.name}({','.join(self.param_types)})"

    @property
    def ref(self) -> DeclRef:
        return DeclRef(self.owner, "method", self.name, self.param_types)


@dataclass(frozen=True)
class FieldDecl:
    owner: str
    name: str
    type: str
    access: Access
    is_static: bool = False
    is_final: bool = False
    annotations: frozenset[str] = frozenset()
    location: Optional[SourceLocation] = None
    excluded: bool = False

    @property
    def key(self) -> str:
        return self.name

    @property
    def ref(self) -> DeclRef:
        return DeclRef(self.owner, "field", self.name)


@dataclass(frozen=True)
class ConstructorDecl:
    owner: str
    param_types: tuple[str, ...]
    access: Access
    annotations: frozenset[str] = frozenset()
    location: Optional[SourceLocation] = None
    excluded: bool = False
    synthetic: bool = False

    @property
    def key(self) -> str:
        return f"<init>({','.join(self.param_types)})"

    @property
    def ref(self) -> DeclRef:
        return DeclRef(self.owner, "constructor", "<init>", self.param_types)


Member = Union[MethodDecl, FieldDecl, ConstructorDecl]


@dataclass(frozen=True)
class TypeDecl:
    fqn: str
    kind: str
    access: Access
    is_final: bool
    is_abstract: bool
    superclass: Optional[str]
    interfaces: tuple[str, ...]
    fields: dict[str, FieldDecl]
    methods: dict[str, MethodDecl]
    constructors: dict[str, ConstructorDecl]
    annotations: frozenset[str] = frozenset()
    location: Optional[SourceLocation] = None
    excluded: bool = False

    @property
    def package(self) -> str:
        return self.fqn.rpartition(".")[0]

    @property
    def supertypes(self) -> tuple[str, ...]:
        return ((self.superclass,) if self.superclass else ()) + self.interfaces

    @property
    def ref(self) -> DeclRef:
        return DeclRef(self.fqn)

    @property
    def is_deprecated(self) -> bool:
        return "Deprecated" in self.annotations


@dataclass(frozen=True)
class FlatType:
    """A type's member view including everything it inherits."""

    fqn: str
    methods: dict[str, MethodDecl]
    fields: dict[str, FieldDecl]

    def provenance(self, key: str) -> str:
        return self.methods[key].owner if key in self.methods else self.fields[key].owner


@dataclass
class ExclusionRules:
    annotations: frozenset[str] = frozenset()
    packages: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        self.annotations = frozenset(self.annotations)
        self.packages = tuple(self.packages)
        self._patterns = [glob_to_regex(g) for g in self.packages]

    def package_excluded(self, package: str) -> bool:
        return any(p.fullmatch(package) for p in self._patterns)


def glob_to_regex(glob: str) -> re.Pattern:
    """``*`` matches any run of characters, dots included; nothing else is special."""
    return re.compile(".*".join(re.escape(part) for part in glob.split("*")))


def package_matches(package: str, glob: str) -> bool:
    return glob_to_regex(glob).fullmatch(package) is not None


@dataclass(frozen=True, eq=False)
class ApiModel:
    version_label: str
    types: dict[str, TypeDecl] = field(default_factory=dict)

    def __contains__(self, fqn: str) -> bool:
        return fqn in self.types

    def __getitem__(self, fqn: str) -> TypeDecl:
        return self.types[fqn]

    @cached_property
    def _ancestors(self) -> dict[str, tuple[str, ...]]:
        table = {}
        for fqn, t in self.types.items():
            out: list[str] = []
            todo = list(t.supertypes)
            while todo:
                s = todo.pop(0)
                if s in out or s not in self.types or s == fqn:
                    continue
                out.append(s)
                todo.extend(self.types[s].supertypes)
            table[fqn] = tuple(out)
        return table

    def ancestors(self, fqn: str) -> tuple[str, ...]:
        """Transitive supertypes of ``fqn`` inside the model, nearest first."""
        return self._ancestors.get(fqn, ())

    def is_subtype(self, sub: str, sup: str) -> bool:
        return sub == sup or sup in self.ancestors(sub)

    @cached_property
    def _flat(self) -> dict[str, FlatType]:
        memo: dict[str, FlatType] = {}
        for fqn in sorted(self.types):
            self._flatten_one(fqn, memo)
        return memo

    def flatten(self) -> dict[str, FlatType]:
        return self._flat

    def flat(self, fqn: str) -> FlatType:
        return self._flat[fqn]

    def _flatten_one(self, fqn: str, memo: dict[str, FlatType]) -> FlatType:
        if fqn in memo:
            return memo[fqn]
        t = self.types[fqn]
        methods = dict(t.methods)
        fields = dict(t.fields)
        for sup in t.supertypes:
            if sup not in self.types:
                continue
            flat = self._flatten_one(sup, memo)
            for key, m in flat.methods.items():
                if m.access is Access.PRIVATE:
                    continue
                current = methods.get(key)
                if current is None:
                    methods[key] = m
                elif current.owner != fqn and current.is_abstract and not m.is_abstract:
                    methods[key] = m
            for name, f in flat.fields.items():
                if f.access is not Access.PRIVATE and name not in fields:
                    fields[name] = f
        memo[fqn] = FlatType(fqn, methods, fields)
        return memo[fqn]


def is_exported(decl, model: ApiModel) -> bool:
    """Public types, and public or protected members of public types."""
    if isinstance(decl, TypeDecl):
        return decl.access is Access.PUBLIC
    owner = model.types.get(decl.owner)
    if owner is None or owner.access is not Access.PUBLIC:
        return False
    return decl.access in (Access.PUBLIC, Access.PROTECTED)


def lookup(model: ApiModel, ref: DeclRef):
    """Find the declaration a reference names, or None."""
    t = model.types.get(ref.owner)
    if t is None:
        return None
    if ref.kind == "type":
        return t
    if ref.kind == "method":
        return t.methods.get(ref.key)
    if ref.kind == "field":
        return t.fields.get(ref.name)
    return t.constructors.get(ref.key)


# extraction

class _UnitResolver:
    def __init__(self, unit: CompilationUnit, known: set[str]):
        self.unit = unit
        self.known = known
        self.imports: dict[str, str] = {}
        for imp in unit.imports:
            if imp.name not in known:
                raise ModelError(f"import of unknown type {imp.name}", imp.loc)
            self.imports[imp.name.rpartition(".")[2]] = imp.name

    def resolve(self, tref: TypeRef) -> str:
        name = tref.name
        if name == "void" or name in PRIMITIVES:
            return erase(tref, name)
        if "." in name:
            if name in self.known:
                return erase(tref, name)
        else:
            if name in self.imports:
                return erase(tref, self.imports[name])
            local = f"{self.unit.package}.{name}"
            if local in self.known:
                return erase(tref, local)
            if name in BUILTIN_TYPES:
                return erase(tref, name)
        raise ModelError(f"cannot resolve type {name}", tref.loc)


def _check_mods(mods: tuple[str, ...], allowed: set[str], what: str, loc) -> None:
    bad = set(mods) - allowed
    if bad:
        raise ModelError(f"modifier {sorted(bad)[0]} not allowed on {what}", loc)


def extract_api(units: Iterable[CompilationUnit], exclusions: Optional[ExclusionRules] = None,
                version_label: str = "") -> ApiModel:
    """Build the API model of one library version."""
    exclusions = exclusions or ExclusionRules()
    units = sorted(units, key=lambda u: (u.package, u.file))
    decls: dict[str, tuple[CompilationUnit, TypeDeclAst]] = {}
    for unit in units:
        for t in unit.types:
            fqn = f"{unit.package}.{t.name}"
            if fqn in decls:
                raise DuplicateType(f"type {fqn} declared twice", t.loc)
            decls[fqn] = (unit, t)
    known = set(decls)
    types: dict[str, TypeDecl] = {}
    for fqn in sorted(decls):
        unit, ast = decls[fqn]
        types[fqn] = _extract_type(fqn, unit, ast, _UnitResolver(unit, known), exclusions)
    model = ApiModel(version_label, types)
    _validate(model)
    return model


def _extract_type(fqn: str, unit: CompilationUnit, t: TypeDeclAst, res: _UnitResolver,
                  exclusions: ExclusionRules) -> TypeDecl:
    is_iface = t.kind == "interface"
    _check_mods(t.modifiers, {"public", "abstract"} if is_iface else {"public", "abstract", "final"},
                f"top-level {t.kind}", t.loc)
    annots = frozenset(a.name for a in t.annotations)
    excluded = bool(annots & exclusions.annotations) or exclusions.package_excluded(unit.package)
    access = Access.from_modifiers(t.modifiers)

    fields: dict[str, FieldDecl] = {}
    methods: dict[str, MethodDecl] = {}
    ctors: dict[str, ConstructorDecl] = {}
    for m in t.members:
        m_annots = frozenset(a.name for a in m.annotations)
        m_excluded = excluded or bool(m_annots & exclusions.annotations)
        mods = set(m.modifiers)
        if isinstance(m, FieldAst):
            if is_iface:
                _check_mods(m.modifiers, {"public", "static", "final"}, "interface field", m.loc)
                decl = FieldDecl(fqn, m.name, res.resolve(m.type), Access.PUBLIC, True, True,
                                 m_annots, m.loc, m_excluded)
            else:
                _check_mods(m.modifiers, {"public", "protected", "private", "static", "final"}, "field", m.loc)
                decl = FieldDecl(fqn, m.name, res.resolve(m.type), Access.from_modifiers(m.modifiers),
                                 "static" in mods, "final" in mods, m_annots, m.loc, m_excluded)
            if decl.name in fields:
                raise ModelError(f"duplicate field {decl.name} in {fqn}", m.loc)
            fields[decl.name] = decl
        elif isinstance(m, MethodAst):
            params = tuple(res.resolve(p.type) for p in m.params)
            ret = res.resolve(m.return_type)
            if is_iface:
                _check_mods(m.modifiers, {"public", "abstract"}, "interface method", m.loc)
                if m.body is not None:
                    raise ModelError("interface methods cannot have a body", m.loc)
                decl = MethodDecl(fqn, m.name, params, ret, Access.PUBLIC, False, False, True,
                                  m_annots, m.loc, m_excluded)
            else:
                abstract = "abstract" in mods
                if abstract and (m.body is not None or mods & {"static", "private"}):
                    raise ModelError("abstract method cannot have a body or be static or private", m.loc)
                if not abstract and m.body is None:
                    raise ModelError("missing method body", m.loc)
                if abstract and "abstract" not in t.modifiers:
                    raise ModelError(f"abstract method in non-abstract class {fqn}", m.loc)
                decl = MethodDecl(fqn, m.name, params, ret, Access.from_modifiers(m.modifiers),
                                  "static" in mods, "final" in mods, abstract, m_annots, m.loc, m_excluded)
            if decl.key in methods:
                raise ModelError(f"duplicate method {decl.key} in {fqn}", m.loc)
            methods[decl.key] = decl
        elif isinstance(m, CtorAst):
            if is_iface:
                raise ModelError("interfaces cannot declare constructors", m.loc)
            _check_mods(m.modifiers, {"public", "protected", "private"}, "constructor", m.loc)
            decl = ConstructorDecl(fqn, tuple(res.resolve(p.type) for p in m.params),
                                   Access.from_modifiers(m.modifiers), m_annots, m.loc, m_excluded)
            if decl.key in ctors:
                raise ModelError(f"duplicate constructor {decl.key} in {fqn}", m.loc)
            ctors[decl.key] = decl

    if not is_iface and not ctors:
        default_access = Access.PUBLIC if access is Access.PUBLIC else Access.PACKAGE_PRIVATE
        default = ConstructorDecl(fqn, (), default_access, frozenset(), t.loc, excluded, synthetic=True)
        ctors[default.key] = default

    supers = [res.resolve(x) for x in t.extends]
    impls = [res.resolve(x) for x in t.implements]
    if is_iface:
        superclass, interfaces = None, tuple(supers)
    else:
        superclass = supers[0] if supers and supers[0] != "Object" else None
        interfaces = tuple(impls)
    return TypeDecl(
        fqn=fqn, kind=t.kind, access=access,
        is_final="final" in t.modifiers,
        is_abstract=is_iface or "abstract" in t.modifiers,
        superclass=superclass, interfaces=interfaces,
        fields=fields, methods=methods, constructors=ctors,
        annotations=annots, location=t.loc, excluded=excluded,
    )


def _validate(model: ApiModel) -> None:
    types = model.types
    for fqn, t in types.items():
        for sup in t.supertypes:
            if sup not in types:
                raise ModelError(f"{fqn} extends external type {sup}", t.location)
        if t.superclass:
            s = types[t.superclass]
            if s.kind != "class":
                raise ModelError(f"class {fqn} cannot extend interface {s.fqn}", t.location)
            if s.is_final:
                raise ModelError(f"class {fqn} cannot extend final class {s.fqn}", t.location)
        for i in t.interfaces:
            if types[i].kind != "interface":
                raise ModelError(f"{fqn} cannot implement class {i}", t.location)
    # cycles
    state: dict[str, int] = {}

    def visit(fqn: str) -> None:
        state[fqn] = 1
        for sup in types[fqn].supertypes:
            if state.get(sup) == 1:
                raise CycleError(f"inheritance cycle through {fqn} and {sup}", types[fqn].location)
            if sup not in state:
                visit(sup)
        state[fqn] = 2

    for fqn in sorted(types):
        if fqn not in state:
            visit(fqn)

    for fqn, t in types.items():
        flat = model.flat(fqn)
        if t.kind == "class" and not t.is_abstract:
            missing = sorted(k for k, m in flat.methods.items() if m.is_abstract)
            if missing:
                raise ModelError(f"concrete class {fqn} does not implement {missing[0]}", t.location)
        for key, m in t.methods.items():
            for sup in model.ancestors(fqn):
                inherited = types[sup].methods.get(key)
                if inherited is None or inherited.access is Access.PRIVATE:
                    continue
                if inherited.is_final:
                    raise ModelError(f"{fqn}::{key} overrides final method", m.location)
                if inherited.is_static != m.is_static:
                    raise ModelError(f"{fqn}::{key} changes static-ness of inherited method", m.location)
