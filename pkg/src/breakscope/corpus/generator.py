"""Seeded generator of library version pairs and conforming clients.

A library is built as a small structural model, rendered to Mini-J, then
mutated once per requested change kind. Clients are generated against the
old model only and are type-correct by construction; the oracle confirms it
before a fixture is returned. Client code prefers declarations touched by a
mutation so that most generated pairs have real impact.
"""

from __future__ import annotations

import copy
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from ..apimodel import ModelError, extract_api
from ..delta import BcKind, diff
from ..oracle import check_client
from ..syntax import parse_tree
from .fixture import Fixture

LIB = "lib"
PRIMS = ("int", "String", "boolean")


class GenerationRetryExhausted(Exception):
    pass


@dataclass(frozen=True)
class Profile:
    """``kinds=None`` injects one to three random kinds; an empty set injects none."""

    kinds: Optional[frozenset] = None
    clients: tuple[int, int] = (1, 3)
    classes: tuple[int, int] = (1, 2)
    statements: tuple[int, int] = (3, 7)
    attempts: int = 40


@dataclass
class GField:
    name: str
    type: str
    access: str = "public"
    static: bool = False
    final: bool = False


@dataclass
class GMethod:
    name: str
    params: list
    ret: str
    access: str = "public"
    static: bool = False
    final: bool = False
    abstract: bool = False

    @property
    def key(self) -> str:
        return f"{self.name}({','.join(self.params)})"


@dataclass
class GCtor:
    params: list
    access: str = "public"


@dataclass
class GType:
    name: str
    kind: str = "class"
    access: str = "public"
    final: bool = False
    abstract: bool = False
    superclass: Optional[str] = None
    interfaces: list = field(default_factory=list)
    fields: list = field(default_factory=list)
    methods: list = field(default_factory=list)
    ctors: list = field(default_factory=list)
    annotations: list = field(default_factory=list)

    @property
    def fqn(self) -> str:
        return f"{LIB}.{self.name}"

    @property
    def is_iface(self) -> bool:
        return self.kind == "interface"


_ACCESS_RANK = {"private": 0, "": 1, "protected": 2, "public": 3}


def default_value(t: str) -> str:
    return {"int": "0", "boolean": "false", "String": '""'}.get(t, "null")


def short(t: str) -> str:
    return t[len(LIB) + 1:] if t.startswith(LIB + ".") else t


class Lib:
    """Queries over a structural library model."""

    def __init__(self, types: list):
        self.types = {t.fqn: t for t in types}

    def supers(self, fqn: str) -> list:
        t = self.types[fqn]
        out = [t.superclass] if t.superclass else []
        return [s for s in out + list(t.interfaces) if s in self.types]

    def ancestors(self, fqn: str) -> list:
        out, todo = [], list(self.supers(fqn))
        while todo:
            s = todo.pop(0)
            if s not in out:
                out.append(s)
                todo.extend(self.supers(s))
        return out

    def subtypes(self, fqn: str) -> list:
        return sorted(t for t in self.types if fqn in self.ancestors(t))

    def is_sub(self, sub: str, sup: str) -> bool:
        return sub == sup or sup in self.ancestors(sub)

    def methods(self, fqn: str) -> dict:
        """Flattened view: key -> (GMethod, owner fqn)."""
        t = self.types[fqn]
        view = {m.key: (m, fqn) for m in t.methods}
        for s in self.supers(fqn):
            for k, (m, owner) in self.methods(s).items():
                if m.access == "private":
                    continue
                cur = view.get(k)
                if cur is None or (cur[1] != fqn and cur[0].abstract and not m.abstract):
                    view[k] = (m, owner)
        return view

    def fields(self, fqn: str) -> dict:
        t = self.types[fqn]
        view = {f.name: (f, fqn) for f in t.fields}
        for s in self.supers(fqn):
            for n, (f, owner) in self.fields(s).items():
                if f.access != "private" and n not in view:
                    view[n] = (f, owner)
        return view

    def concrete(self, fqn: str) -> bool:
        t = self.types[fqn]
        return not t.is_iface and not t.abstract

    def declared_elsewhere(self, fqn: str, key: str) -> bool:
        """Does any supertype or subtype of ``fqn`` also carry method ``key``?"""
        for other in self.ancestors(fqn) + self.subtypes(fqn):
            if any(m.key == key for m in self.types[other].methods):
                return True
        return False

    def referenced(self, fqn: str) -> bool:
        for t in self.types.values():
            if t.fqn == fqn:
                continue
            if fqn in self.supers(t.fqn):
                return True
            for m in t.methods:
                if fqn in m.params or m.ret == fqn:
                    return True
            if any(f.type == fqn for f in t.fields) or any(fqn in c.params for c in t.ctors):
                return True
        return False


def render_type(t: GType) -> str:
    def ty(x: str) -> str:
        return short(x)

    lines = [f"package {LIB};", ""]
    for a in t.annotations:
        lines.append(f"@{a}")
    head = [t.access] if t.access else []
    if t.final:
        head.append("final")
    if t.abstract and not t.is_iface:
        head.append("abstract")
    decl = " ".join(head + [t.kind, t.name])
    if t.is_iface and t.interfaces:
        decl += " extends " + ", ".join(ty(i) for i in t.interfaces)
    else:
        if t.superclass:
            decl += f" extends {ty(t.superclass)}"
        if t.interfaces:
            decl += " implements " + ", ".join(ty(i) for i in t.interfaces)
    lines.append(decl + " {")
    for f in t.fields:
        mods = [] if t.is_iface else [f.access] if f.access else []
        if f.static and not t.is_iface:
            mods.append("static")
        if f.final and not t.is_iface:
            mods.append("final")
        init = f" = {default_value(f.type)}" if t.is_iface else ""
        lines.append("    " + " ".join(mods + [ty(f.type), f.name]) + init + ";")
    for c in t.ctors:
        params = ", ".join(f"{ty(p)} a{i}" for i, p in enumerate(c.params))
        mods = f"{c.access} " if c.access else ""
        lines.append(f"    {mods}{t.name}({params}) {{ }}")
    for m in t.methods:
        params = ", ".join(f"{ty(p)} a{i}" for i, p in enumerate(m.params))
        mods = [] if t.is_iface else [m.access] if m.access else []
        for flag in ("static", "final", "abstract"):
            if getattr(m, flag) and not (t.is_iface and flag == "abstract"):
                mods.append(flag)
        sig = " ".join(mods + [ty(m.ret), f"{m.name}({params})"])
        if m.abstract:
            lines.append(f"    {sig};")
        elif m.ret == "void":
            lines.append(f"    {sig} {{ }}")
        else:
            lines.append(f"    {sig} {{ return {default_value(m.ret)}; }}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_lib(types: Iterable[GType]) -> dict:
    return {f"{LIB}/{t.name}.java": render_type(t) for t in sorted(types, key=lambda t: t.name)}


# library construction

def build_library(rng: random.Random) -> list:
    counter = {"f": 0, "m": 0}

    def fname() -> str:
        counter["f"] += 1
        return f"f{counter['f']}"

    def mname() -> str:
        counter["m"] += 1
        return f"m{counter['m']}"

    n_iface = rng.randint(1, 2)
    n_class = rng.randint(3, 5)
    ifaces = [GType(f"I{i}", "interface", abstract=True) for i in range(n_iface)]
    classes = [GType(f"C{i}") for i in range(n_class)]
    all_names = [t.fqn for t in ifaces + classes]

    def some_type() -> str:
        r = rng.random()
        if r < 0.55:
            return rng.choice(PRIMS)
        return rng.choice(all_names)

    for it in ifaces:
        for _ in range(rng.randint(1, 2)):
            it.methods.append(GMethod(mname(), [some_type()] if rng.random() < 0.4 else [],
                                      rng.choice(["int", "String", "void"]), abstract=True))
        if rng.random() < 0.5:
            it.fields.append(GField(fname(), "int", static=True, final=True))
    for i, c in enumerate(classes):
        if i > 0 and rng.random() < 0.6:
            c.superclass = classes[rng.randrange(i)].fqn
        if rng.random() < 0.5:
            c.interfaces.append(rng.choice(ifaces).fqn)
        c.abstract = rng.random() < 0.3
        for _ in range(rng.randint(1, 3)):
            c.fields.append(GField(fname(), some_type(), access=rng.choice(["public", "public", "protected"]),
                                   static=rng.random() < 0.3))
        for _ in range(rng.randint(1, 3)):
            m = GMethod(mname(), [some_type()] if rng.random() < 0.5 else [], rng.choice(
                ["int", "String", "void", some_type()]), access=rng.choice(["public", "public", "protected"]),
                static=rng.random() < 0.25)
            if c.abstract and not m.static and rng.random() < 0.3:
                m.abstract = True
            c.methods.append(m)
        c.ctors.append(GCtor([]))
        if rng.random() < 0.5:
            c.ctors.append(GCtor([rng.choice(["int", "String"])]))
    superclasses = {c.superclass for c in classes}
    for c in classes:
        if c.fqn not in superclasses and not c.abstract and rng.random() < 0.2:
            c.final = True
    types = ifaces + classes
    complete(Lib(types))
    return types


def complete(lib: Lib) -> None:
    """Give every concrete class an implementation of each abstract method it sees."""
    for fqn in sorted(lib.types, key=lambda f: len(lib.ancestors(f))):
        t = lib.types[fqn]
        if not lib.concrete(fqn):
            continue
        for key, (m, owner) in sorted(lib.methods(fqn).items()):
            if m.abstract:
                t.methods.append(GMethod(m.name, list(m.params), m.ret))


# mutations

@dataclass
class Hot:
    """Declarations touched by mutations; clients favor them."""

    types: set = field(default_factory=set)
    methods: set = field(default_factory=set)  # (owner, key)
    fields: set = field(default_factory=set)  # (owner, name)
    ctors: set = field(default_factory=set)  # owner
    edges: set = field(default_factory=set)  # (sub, super)


def _public_types(lib: Lib) -> list:
    return sorted(f for f, t in lib.types.items() if t.access == "public")


def _pick(rng: random.Random, items):
    items = list(items)
    return rng.choice(items) if items else None


def _member_methods(lib: Lib, pred: Callable) -> list:
    return [(t.fqn, m) for t in sorted(lib.types.values(), key=lambda t: t.name)
            for m in t.methods if t.access == "public" and m.access in ("public", "protected") and pred(t, m)]


def _solo(lib: Lib, t: GType, m: GMethod) -> bool:
    return not lib.declared_elsewhere(t.fqn, m.key)


def mutate(kind: BcKind, lib: Lib, rng: random.Random, hot: Hot) -> bool:
    K = BcKind
    T = lib.types
    if kind is K.TYPE_REMOVED:
        fqn = _pick(rng, [f for f in _public_types(lib) if not lib.referenced(f)])
        if fqn is None:
            return False
        del T[fqn]
        hot.types.add(fqn)
        return True
    if kind is K.TYPE_LESS_ACCESSIBLE:
        fqn = _pick(rng, _public_types(lib))
        if fqn is None:
            return False
        T[fqn].access = ""
        hot.types.add(fqn)
        return True
    if kind is K.TYPE_NOW_FINAL:
        fqn = _pick(rng, [f for f in _public_types(lib) if not T[f].is_iface and not T[f].final
                          and not T[f].abstract and not lib.subtypes(f)])
        if fqn is None:
            return False
        T[fqn].final = True
        hot.types.add(fqn)
        return True
    if kind is K.TYPE_NOW_ABSTRACT:
        fqn = _pick(rng, [f for f in _public_types(lib) if lib.concrete(f) and not T[f].final])
        if fqn is None:
            return False
        T[fqn].abstract = True
        hot.types.add(fqn)
        return True
    if kind is K.TYPE_KIND_CHANGED:
        fqn = _pick(rng, [f for f in _public_types(lib) if T[f].is_iface and not lib.subtypes(f)
                          and not T[f].interfaces])
        if fqn is None:
            return False
        t = T[fqn]
        t.kind, t.abstract = "class", True
        for f in t.fields:
            f.static = f.final = True
        hot.types.add(fqn)
        return True
    if kind is K.SUPERTYPE_REMOVED:
        subs = [f for f in _public_types(lib) if lib.supers(f)]
        sub = _pick(rng, subs)
        if sub is None:
            return False
        t = T[sub]
        sup = _pick(rng, lib.supers(sub))
        for lost in [sup] + lib.ancestors(sup):
            hot.edges.add((sub, lost))
        if t.superclass == sup:
            t.superclass = None
        else:
            t.interfaces.remove(sup)
        hot.types.add(sub)
        return True
    if kind is K.METHOD_REMOVED:
        cands = _member_methods(lib, lambda t, m: _solo(lib, t, m))
        pick = _pick(rng, cands)
        if pick is None:
            return False
        owner, m = pick
        T[owner].methods.remove(m)
        hot.methods.add((owner, m.key))
        return True
    if kind is K.METHOD_LESS_ACCESSIBLE:
        pick = _pick(rng, _member_methods(lib, lambda t, m: not t.is_iface and _solo(lib, t, m)))
        if pick is None:
            return False
        owner, m = pick
        m.access = "protected" if m.access == "public" and rng.random() < 0.5 else rng.choice(["", "private"])
        if m.access == "private" and m.abstract:
            m.access = ""
        hot.methods.add((owner, m.key))
        return True
    if kind is K.METHOD_NOW_FINAL:
        pick = _pick(rng, _member_methods(lib, lambda t, m: not t.is_iface and not m.abstract and not m.final
                                          and not m.static and _solo(lib, t, m)))
        if pick is None:
            return False
        pick[1].final = True
        hot.methods.add((pick[0], pick[1].key))
        return True
    if kind is K.METHOD_NOW_ABSTRACT:
        def ok(t, m):
            return (not t.is_iface and t.abstract and not m.abstract and not m.static and not m.final
                    and all(not lib.concrete(s) or any(x.key == m.key for x in T[s].methods)
                            for s in lib.subtypes(t.fqn)))
        pick = _pick(rng, _member_methods(lib, ok))
        if pick is None:
            return False
        pick[1].abstract = True
        hot.methods.add((pick[0], pick[1].key))
        return True
    if kind is K.METHOD_NOW_STATIC:
        pick = _pick(rng, _member_methods(lib, lambda t, m: not t.is_iface and not m.abstract and not m.static
                                          and _solo(lib, t, m)))
        if pick is None:
            return False
        pick[1].static = True
        hot.methods.add((pick[0], pick[1].key))
        return True
    if kind is K.METHOD_NO_LONGER_STATIC:
        pick = _pick(rng, _member_methods(lib, lambda t, m: m.static and _solo(lib, t, m)))
        if pick is None:
            return False
        pick[1].static = False
        hot.methods.add((pick[0], pick[1].key))
        return True
    if kind is K.METHOD_RETURN_TYPE_CHANGED:
        pick = _pick(rng, _member_methods(lib, lambda t, m: _solo(lib, t, m)))
        if pick is None:
            return False
        owner, m = pick
        m.ret = rng.choice([x for x in ["int", "String", "void"] + sorted(T) if x != m.ret])
        hot.methods.add((owner, m.key))
        return True
    if kind is K.METHOD_PARAMETER_TYPES_CHANGED:
        pick = _pick(rng, _member_methods(lib, lambda t, m: m.params and not m.abstract and _solo(lib, t, m)))
        if pick is None:
            return False
        owner, m = pick
        hot.methods.add((owner, m.key))
        i = rng.randrange(len(m.params))
        m.params[i] = rng.choice([x for x in list(PRIMS) + sorted(T) if x != m.params[i]])
        return True
    if kind is K.METHOD_ABSTRACT_ADDED_TO_TYPE:
        owner = _pick(rng, [f for f in _public_types(lib) if T[f].is_iface or T[f].abstract])
        if owner is None:
            return False
        m = GMethod(f"n{rng.randrange(1000)}", [], rng.choice(["int", "void"]), abstract=True)
        T[owner].methods.append(m)
        for s in lib.subtypes(owner):
            if lib.concrete(s):
                T[s].methods.append(GMethod(m.name, [], m.ret))
        hot.types.add(owner)
        return True
    fields = [(t.fqn, f) for t in sorted(T.values(), key=lambda t: t.name) for f in t.fields
              if t.access == "public" and f.access in ("public", "protected")]
    mutable = [(o, f) for o, f in fields if not T[o].is_iface]
    if kind is K.FIELD_REMOVED:
        pick = _pick(rng, fields)
        if pick is None:
            return False
        T[pick[0]].fields.remove(pick[1])
    elif kind is K.FIELD_LESS_ACCESSIBLE:
        pick = _pick(rng, mutable)
        if pick is None:
            return False
        pick[1].access = "protected" if pick[1].access == "public" and rng.random() < 0.5 else \
            rng.choice(["", "private"])
    elif kind is K.FIELD_NOW_FINAL:
        pick = _pick(rng, [(o, f) for o, f in mutable if not f.final])
        if pick is None:
            return False
        pick[1].final = True
    elif kind is K.FIELD_NOW_STATIC:
        pick = _pick(rng, [(o, f) for o, f in mutable if not f.static])
        if pick is None:
            return False
        pick[1].static = True
    elif kind is K.FIELD_NO_LONGER_STATIC:
        pick = _pick(rng, [(o, f) for o, f in mutable if f.static])
        if pick is None:
            return False
        pick[1].static = False
    elif kind is K.FIELD_TYPE_CHANGED:
        pick = _pick(rng, fields)
        if pick is None:
            return False
        pick[1].type = rng.choice([x for x in list(PRIMS) + sorted(T) if x != pick[1].type])
    elif kind in (K.CONSTRUCTOR_REMOVED, K.CONSTRUCTOR_LESS_ACCESSIBLE):
        cands = [(t.fqn, c) for t in sorted(T.values(), key=lambda t: t.name) for c in t.ctors
                 if t.access == "public" and c.access in ("public", "protected")]
        pick = _pick(rng, cands)
        if pick is None:
            return False
        owner, c = pick
        if kind is K.CONSTRUCTOR_REMOVED:
            T[owner].ctors.remove(c)
            if not T[owner].ctors and c.params == []:
                T[owner].ctors.append(GCtor(["int"]))
        else:
            c.access = "protected" if c.access == "public" and rng.random() < 0.5 else rng.choice(["", "private"])
        hot.ctors.add(owner)
        return True
    else:
        raise ValueError(kind)
    hot.fields.add((pick[0], pick[1].name))
    return True


# clients

class _ClientWriter:
    def __init__(self, lib: Lib, rng: random.Random, hot: Hot, pkg: str, profile: Profile):
        self.lib = lib
        self.rng = rng
        self.hot = hot
        self.pkg = pkg
        self.profile = profile
        self.imports: set = set()
        self.counter = 0

    def fresh(self, prefix: str) -> str:
        self.counter += 1
        return f"{prefix}{self.counter}"

    def tname(self, t: str) -> str:
        """Spell a type, sometimes through an import."""
        if t not in self.lib.types:
            return t
        if t in self.imports or self.rng.random() < 0.6:
            self.imports.add(t)
            return short(t)
        return t

    def prefer(self, items: list, hot_pred: Callable):
        if not items:
            return None
        hot = [x for x in items if hot_pred(x)]
        if hot and self.rng.random() < 0.7:
            return self.rng.choice(hot)
        return self.rng.choice(items)

    # typing helpers over the old model

    def public(self, t: str) -> bool:
        return t in self.lib.types and self.lib.types[t].access == "public"

    def assignable(self, src: str, dst: str) -> bool:
        if src == dst:
            return True
        if src == "null":
            return dst not in ("int", "boolean")
        if src in PRIMS or dst in PRIMS:
            return False
        if dst == "Object":
            return True
        return src in self.lib.types and dst in self.lib.types and self.lib.is_sub(src, dst)

    def visible_member(self, access: str, owner: str, cls) -> bool:
        if access == "public":
            return True
        return access == "protected" and cls is not None and cls.get("super") is not None \
            and self.lib.is_sub(cls["super"], owner)

    # expressions

    def literal(self, t: str) -> Optional[str]:
        if t == "int":
            return str(self.rng.randint(0, 99))
        if t == "String":
            return f'"s{self.rng.randint(0, 9)}"'
        if t == "boolean":
            return self.rng.choice(["true", "false"])
        return None

    def expr(self, want: str, depth: int, ctx: dict) -> Optional[str]:
        options = []
        lit = self.literal(want)
        if lit is not None:
            options.append(lambda: lit)
        for name, t in ctx["locals"]:
            if self.assignable(t, want):
                options.append(lambda n=name: n)
        for t in self.lib.types:
            if self.public(t) and self.lib.concrete(t) and self.assignable(t, want):
                for c in self.lib.types[t].ctors:
                    if c.access == "public":
                        options.append(lambda t=t, c=c: self.new(t, c, depth, ctx))
                        options.append(lambda t=t, c=c: self.new(t, c, depth, ctx))
        if depth > 0:
            options.append(lambda: self.member_expr(want, depth - 1, ctx))
            options.append(lambda: self.member_expr(want, depth - 1, ctx))
            options.append(lambda: self.member_expr(want, depth - 1, ctx))
        if want not in PRIMS and self.rng.random() < 0.1:
            options.append(lambda: "null")
        self.rng.shuffle(options)
        for opt in options[:4]:
            out = opt()
            if out is not None:
                return out
        return lit

    def new(self, t: str, c: GCtor, depth: int, ctx: dict) -> Optional[str]:
        args = [self.expr(p, max(depth - 1, 0), ctx) for p in c.params]
        if None in args:
            return None
        return f"new {self.tname(t)}({', '.join(args)})"

    def args(self, params: list, depth: int, ctx: dict) -> Optional[str]:
        out = [self.expr(p, depth, ctx) for p in params]
        return None if None in out else ", ".join(out)

    def member_expr(self, want: str, depth: int, ctx: dict) -> Optional[str]:
        """An access to a library member whose type is assignable to ``want``."""
        cands = []
        cls = ctx["cls"]
        for t in sorted(self.lib.types):
            if not self.public(t):
                continue
            for key, (m, owner) in self.lib.methods(t).items():
                if m.abstract and t == owner and not m.static and False:
                    continue
                if m.ret == "void" or not self.assignable(m.ret, want) or m.access != "public":
                    continue
                cands.append(("m", t, m, owner))
            for name, (f, owner) in self.lib.fields(t).items():
                if self.assignable(f.type, want) and f.access == "public":
                    cands.append(("f", t, f, owner))
        if cls.get("super") and not ctx["static"]:
            sup = cls["super"]
            for key, (m, owner) in self.lib.methods(sup).items():
                if m.ret != "void" and self.assignable(m.ret, want) and not m.static and \
                        self.visible_member(m.access, owner, cls) and key not in cls["declared"]:
                    cands.append(("this", sup, m, owner))
            for name, (f, owner) in self.lib.fields(sup).items():
                if self.assignable(f.type, want) and self.visible_member(f.access, owner, cls) \
                        and name not in cls["own_fields"] and not f.static:
                    cands.append(("implicit", sup, f, owner))
        pick = self.prefer(cands, lambda c: self.is_hot(c))
        if pick is None:
            return None
        form, t, member, owner = pick
        if form == "implicit":
            return member.name
        if form == "this":
            a = self.args(member.params, depth, ctx)
            return None if a is None else f"this.{member.name}({a})"
        if member.static:
            recv = self.tname(t)
        else:
            recv = self.receiver(t, depth, ctx)
            if recv is None:
                return None
        if form == "m":
            a = self.args(member.params, depth, ctx)
            return None if a is None else f"{recv}.{member.name}({a})"
        return f"{recv}.{member.name}"

    def receiver(self, t: str, depth: int, ctx: dict) -> Optional[str]:
        for name, lt in ctx["locals"]:
            if lt == t and self.rng.random() < 0.6:
                return name
        e = self.expr(t, depth, ctx)
        if e is None or e == "null":
            return None
        if e.startswith("new ") or e.startswith("("):
            return f"({e})" if e.startswith("(") and not e.endswith(")") else e
        return e

    def is_hot(self, cand) -> bool:
        form, t, member, owner = cand
        if isinstance(member, GMethod):
            return (owner, member.key) in self.hot.methods or owner in self.hot.types
        return (owner, member.name) in self.hot.fields or owner in self.hot.types

    # statements

    def ref_types(self) -> list:
        return [t for t in sorted(self.lib.types) if self.public(t)]

    def stmt(self, ctx: dict) -> Optional[str]:
        r = self.rng.random()
        types = self.ref_types()
        if r < 0.45:
            t = self.prefer(list(PRIMS) + types, lambda x: x in self.hot.types or
                            any(x == sub or x == sup for sub, sup in self.hot.edges))
            e = self.expr(t, 2, ctx)
            if e is None:
                return None
            name = self.fresh("v")
            ctx["locals"].append((name, t))
            return f"{self.tname(t)} {name} = {e};"
        if r < 0.6:
            return self.cast_stmt(ctx)
        if r < 0.8:
            return self.write_stmt(ctx)
        return self.call_stmt(ctx)

    def cast_stmt(self, ctx: dict) -> Optional[str]:
        refs = [(n, t) for n, t in ctx["locals"] if t in self.lib.types]
        if not refs:
            return None
        name, src = self.rng.choice(refs)
        targets = [t for t in self.ref_types() if t != src and (self.lib.is_sub(src, t) or self.lib.is_sub(t, src))]
        if not targets:
            return None
        dst = self.prefer(targets, lambda x: (src, x) in self.hot.edges or (x, src) in self.hot.edges)
        v = self.fresh("v")
        ctx["locals"].append((v, dst))
        if self.lib.is_sub(src, dst) and self.rng.random() < 0.5:
            return f"{self.tname(dst)} {v} = {name};"
        return f"{self.tname(dst)} {v} = ({self.tname(dst)}) {name};"

    def write_stmt(self, ctx: dict) -> Optional[str]:
        cls = ctx["cls"]
        cands = []
        for t in self.ref_types():
            for name, (f, owner) in self.lib.fields(t).items():
                if not f.final and f.access == "public" and not self.lib.types[owner].is_iface:
                    cands.append(("f", t, f, owner))
        if cls.get("super"):
            for name, (f, owner) in self.lib.fields(cls["super"]).items():
                if not f.final and self.visible_member(f.access, owner, cls) and name not in cls["own_fields"] \
                        and (f.static or not ctx["static"]) and not self.lib.types[owner].is_iface:
                    cands.append(("implicit", cls["super"], f, owner))
        pick = self.prefer(cands, self.is_hot)
        if pick is None:
            return None
        form, t, f, owner = pick
        value = self.expr(f.type, 1, ctx)
        if value is None:
            return None
        if form == "implicit":
            return f"{f.name} = {value};"
        recv = self.tname(t) if f.static else self.receiver(t, 1, ctx)
        if recv is None:
            return None
        return f"{recv}.{f.name} = {value};"

    def touch_hot_fields(self, ctx: dict) -> list[str]:
        """A read and, where the old version allows it, a write of every mutated public field."""
        out = []
        for owner, name in sorted(self.hot.fields):
            if owner not in self.ref_types():
                continue
            hit = self.lib.fields(owner).get(name)
            if hit is None or hit[0].access != "public" or self.lib.types[owner].is_iface:
                continue
            f = hit[0]
            recv = self.tname(owner) if f.static else self.receiver(owner, 1, ctx)
            if recv is None:
                continue
            v = self.fresh("v")
            out.append(f"{self.tname(f.type)} {v} = {recv}.{f.name};")
            ctx["locals"].append((v, f.type))
            value = self.expr(f.type, 1, ctx)
            if not f.final and value is not None:
                out.append(f"{recv}.{f.name} = {value};")
        return out

    def call_stmt(self, ctx: dict) -> Optional[str]:
        cands = []
        for t in self.ref_types():
            for key, (m, owner) in self.lib.methods(t).items():
                if m.access == "public":
                    cands.append(("m", t, m, owner))
        pick = self.prefer(cands, self.is_hot)
        if pick is None:
            return None
        _, t, m, owner = pick
        recv = self.tname(t) if m.static else self.receiver(t, 1, ctx)
        a = self.args(m.params, 1, ctx)
        if recv is None or a is None:
            return None
        return f"{recv}.{m.name}({a});"

    # classes

    def client_class(self, name: str, touch: bool = False) -> str:
        rng = self.rng
        lines = []
        header = f"public class {name}"
        sup = None
        extendable = [t for t in self.ref_types() if not self.lib.types[t].final]
        if extendable and rng.random() < 0.6:
            sup = self.prefer(extendable, lambda x: x in self.hot.types or any(
                o == x or o in self.lib.ancestors(x) for o, _ in self.hot.methods))
            clause = "implements" if self.lib.types[sup].is_iface else "extends"
            header += f" {clause} {self.tname(sup)}"
        cls = {"super": sup, "declared": set(), "own_fields": set()}
        body = []
        if sup is not None:
            for key, (m, owner) in sorted(self.lib.methods(sup).items()):
                visible = self.visible_member(m.access, owner, cls)
                must = m.abstract
                may = visible and not m.final and not m.static and rng.random() < 0.5
                hide = visible and m.static and rng.random() < 0.3
                if not (must or may or hide) or not visible:
                    continue
                cls["declared"].add(key)
                params = ", ".join(f"{self.tname(p)} p{i}" for i, p in enumerate(m.params))
                ret = self.tname(m.ret)
                mark = "@Override " if (must or may) and not hide and rng.random() < 0.6 else ""
                static = "static " if hide and not must else ""
                if static:
                    mark = ""
                stmt = "" if m.ret == "void" else f" return {default_value(m.ret)};"
                body.append(f"    {mark}public {static}{ret} {m.name}({params}) {{{stmt} }}")
        for _ in range(rng.randint(0, 2)):
            t = self.prefer(self.ref_types() or list(PRIMS), lambda x: x in self.hot.types)
            if t is None:
                break
            fname = self.fresh("cf")
            cls["own_fields"].add(fname)
            init = self.expr(t, 1, {"locals": [], "cls": cls, "static": False}) if rng.random() < 0.5 else None
            body.append(f"    {self.tname(t)} {fname}" + (f" = {init};" if init else ";"))
        for _ in range(rng.randint(1, 2)):
            static = rng.random() < 0.25
            ptypes = [self.prefer(list(PRIMS) + self.ref_types(), lambda x: x in self.hot.types)
                      for _ in range(rng.randint(0, 2))]
            params = [(f"p{i}", t) for i, t in enumerate(ptypes)]
            ctx = {"locals": list(params), "cls": cls, "static": static}
            stmts = self.touch_hot_fields(ctx) if touch else []
            touch = False
            for _ in range(rng.randint(*self.profile.statements)):
                s = self.stmt(ctx)
                if s is not None:
                    stmts.append(s)
            ret = "void"
            refs = [(n, t) for n, t in ctx["locals"] if t in self.lib.types]
            if refs and rng.random() < 0.5:
                vname, vt = rng.choice(refs)
                rets = [t for t in self.ref_types() if self.lib.is_sub(vt, t)]
                ret = rng.choice(rets)
                stmts.append(f"return {vname};")
            sig = ", ".join(f"{self.tname(t)} {n}" for n, t in params)
            mods = "public static" if static else "public"
            body.append(f"    {mods} {self.tname(ret)} {self.fresh('run')}({sig}) {{")
            body.extend(f"        {s}" for s in stmts)
            body.append("    }")
        lines.append(header + " {")
        lines.extend(body)
        lines.append("}")
        return "\n".join(lines)

    def unit(self, name: str, touch: bool = False) -> str:
        cls = self.client_class(name, touch)
        imports = "".join(f"import {t};\n" for t in sorted(self.imports))
        return f"package {self.pkg};\n\n{imports}\n{cls}\n"


def generate_clients(lib: Lib, rng: random.Random, hot: Hot, profile: Profile) -> dict:
    clients = {}
    for i in range(rng.randint(*profile.clients)):
        pkg = f"client{i}"
        files = {}
        for j in range(rng.randint(*profile.classes)):
            w = _ClientWriter(lib, rng, hot, pkg, profile)
            files[f"{pkg}/K{j}.java"] = w.unit(f"K{j}", touch=(i == 0 and j == 0))
        clients[pkg] = files
    return clients


def _parse_api(files: dict, label: str):
    return extract_api(parse_tree(None, files), version_label=label)


def generate_pair(seed: int, profile: Profile = Profile()) -> Fixture:
    """Deterministic fixture for ``seed``; raises GenerationRetryExhausted."""
    for attempt in range(profile.attempts):
        rng = random.Random(f"{seed}/{attempt}")
        old_types = build_library(rng)
        new_lib = Lib(copy.deepcopy(old_types))
        if profile.kinds is None:
            kinds = rng.sample(sorted(BcKind, key=lambda k: k.name), rng.randint(1, 3))
        else:
            kinds = sorted(profile.kinds, key=lambda k: k.name)
        hot = Hot()
        if not all(mutate(k, new_lib, rng, hot) for k in kinds):
            continue
        old_files = render_lib(old_types)
        new_files = render_lib(new_lib.types.values())
        try:
            old_api = _parse_api(old_files, "old")
            new_api = _parse_api(new_files, "new")
        except ModelError:
            continue
        fired = {c.kind for c in diff(old_api, new_api)}
        if profile.kinds is not None and not set(kinds) <= fired:
            continue
        clients = generate_clients(Lib(old_types), rng, hot, profile)
        if any(check_client(parse_tree(None, files), old_api) for files in clients.values()):
            continue
        return Fixture(f"gen-{seed}", old_files, new_files, clients,
                       kinds=tuple(sorted(k.name for k in fired)))
    raise GenerationRetryExhausted(f"seed {seed}: no valid pair after {profile.attempts} attempts")
