"""Join breaking changes with client uses.

Each (use kind, change kind) cell of the matcher matrix is ALWAYS, NEVER or
CONTEXT. A cell only applies when the change is *related* to the use: the
same declaration, or the declaration reached through the use's qualifying
type. CONTEXT cells then re-check the use against the new API.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .apimodel import ApiModel, DeclRef, element_type
from .delta import BcKind, BreakingChange, Delta
from .syntax.nodes import PRIMITIVES, CompilationUnit
from .usage import ERROR, Assignment, CallSite, ClientEnv, Flow, Use, UseKind, UsageModel, retype, retype_call, retype_receiver


class MatchRule(Enum):
    ALWAYS = "always"
    NEVER = "never"
    CONTEXT = "context"


@dataclass(frozen=True)
class MatcherCell:
    rule: MatchRule
    row: str = ""

    def __str__(self) -> str:
        return f"CONTEXT({self.row})" if self.rule is MatchRule.CONTEXT else self.rule.name


U, B = UseKind, BcKind
A, C = MatchRule.ALWAYS, MatchRule.CONTEXT

_TYPE_SITES = (U.IMPORT, U.TYPE_REFERENCE, U.EXTENDS, U.IMPLEMENTS, U.INSTANTIATION,
               U.METHOD_INVOCATION, U.FIELD_READ, U.FIELD_WRITE, U.CAST)

_ROWS: dict[BcKind, dict[UseKind, MatchRule]] = {
    B.TYPE_REMOVED: {k: A for k in _TYPE_SITES},
    B.TYPE_LESS_ACCESSIBLE: {k: C for k in _TYPE_SITES},
    B.TYPE_NOW_FINAL: {U.EXTENDS: A},
    B.TYPE_NOW_ABSTRACT: {U.INSTANTIATION: A},
    B.TYPE_KIND_CHANGED: {U.EXTENDS: A, U.IMPLEMENTS: A, U.INSTANTIATION: A},
    B.SUPERTYPE_REMOVED: {U.CAST: C},
    B.METHOD_REMOVED: {U.METHOD_INVOCATION: A, U.METHOD_OVERRIDE: A},
    B.METHOD_LESS_ACCESSIBLE: {U.METHOD_INVOCATION: C, U.METHOD_OVERRIDE: C},
    B.METHOD_NOW_FINAL: {U.METHOD_OVERRIDE: A},
    B.METHOD_NOW_ABSTRACT: {U.EXTENDS: C, U.IMPLEMENTS: C},
    B.METHOD_NOW_STATIC: {U.METHOD_INVOCATION: A, U.METHOD_OVERRIDE: A},
    B.METHOD_NO_LONGER_STATIC: {U.METHOD_INVOCATION: A, U.METHOD_OVERRIDE: A},
    B.METHOD_RETURN_TYPE_CHANGED: {U.METHOD_INVOCATION: C, U.METHOD_OVERRIDE: C},
    B.METHOD_PARAMETER_TYPES_CHANGED: {U.METHOD_INVOCATION: C, U.METHOD_OVERRIDE: A},
    B.METHOD_ABSTRACT_ADDED_TO_TYPE: {U.EXTENDS: C, U.IMPLEMENTS: C},
    B.FIELD_REMOVED: {U.FIELD_READ: A, U.FIELD_WRITE: A},
    B.FIELD_LESS_ACCESSIBLE: {U.FIELD_READ: C, U.FIELD_WRITE: C},
    B.FIELD_NOW_FINAL: {U.FIELD_WRITE: A},
    B.FIELD_NOW_STATIC: {U.FIELD_READ: A, U.FIELD_WRITE: A},
    B.FIELD_NO_LONGER_STATIC: {U.FIELD_READ: A, U.FIELD_WRITE: A},
    B.FIELD_TYPE_CHANGED: {U.FIELD_READ: C, U.FIELD_WRITE: C},
    B.CONSTRUCTOR_REMOVED: {U.INSTANTIATION: A},
    B.CONSTRUCTOR_LESS_ACCESSIBLE: {U.INSTANTIATION: C},
}

Matrix = dict[tuple[UseKind, BcKind], MatcherCell]

DEFAULT_MATRIX: Matrix = {
    (uk, bk): MatcherCell(rule, f"{bk.rule}-{uk.abbr}")
    for bk, row in _ROWS.items() for uk, rule in row.items()
}

_NEVER = MatcherCell(MatchRule.NEVER)


def matcher_rule(use_kind: UseKind, bc_kind: BcKind, matrix: Optional[Matrix] = None) -> MatcherCell:
    """Total over UseKind x BcKind; unlisted cells are NEVER."""
    return (DEFAULT_MATRIX if matrix is None else matrix).get((use_kind, bc_kind), _NEVER)


def active_cells(matrix: Optional[Matrix] = None) -> set[tuple[UseKind, BcKind]]:
    matrix = DEFAULT_MATRIX if matrix is None else matrix
    return {cell for cell, m in matrix.items() if m.rule is not MatchRule.NEVER}


@dataclass(frozen=True)
class BrokenLocation:
    use: Use
    cause: BreakingChange
    explanation: str

    @property
    def sort_key(self):
        return (self.use.location, self.cause.sort_key, self.use.kind.name)


@dataclass(frozen=True)
class ImpactModel:
    client_name: str
    broken_locations: tuple[BrokenLocation, ...]
    analyzed_uses: int

    @property
    def locations(self) -> set[tuple[str, int]]:
        return {(b.use.location.file, b.use.location.line) for b in self.broken_locations}


_TYPE_KINDS = {B.TYPE_REMOVED, B.TYPE_LESS_ACCESSIBLE, B.TYPE_NOW_FINAL, B.TYPE_NOW_ABSTRACT, B.TYPE_KIND_CHANGED}
_MEMBER_USES = {U.METHOD_INVOCATION, U.FIELD_READ, U.FIELD_WRITE}
_STATIC_FORMS = {"static", "implicit-static"}


class _Judge:
    def __init__(self, old: ClientEnv, new: ClientEnv):
        self.old = old
        self.new = new
        self._retyped: dict[int, tuple] = {}

    def retype(self, a: Assignment) -> tuple[str, str]:
        """``(target type, value type)`` of an assignment under the new library."""
        hit = self._retyped.get(id(a))
        if hit is None:
            hit = self._retyped[id(a)] = (retype(a.target, a.frame, self.new), retype(a.value, a.frame, self.new))
        return hit

    def receiver(self, u: Use) -> str:
        hit = self._retyped.get(id(u))
        if hit is None:
            hit = self._retyped[id(u)] = retype_receiver(u, self.new)
        return hit

    def retype_call(self, cs: CallSite) -> tuple[str, str, list[str]]:
        hit = self._retyped.get(id(cs))
        if hit is None:
            hit = self._retyped[id(cs)] = retype_call(cs, self.new)
        return hit

    # relation

    def related(self, u: Use, bc: BreakingChange) -> bool:
        k = bc.kind
        d = bc.declaration
        if k in _TYPE_KINDS:
            if u.kind in _MEMBER_USES:
                if u.detail != "static" or u.via != d.owner:
                    return False
                # an unresolvable qualifier falls back to a field lookup, silent in an opaque class
                return k is not B.TYPE_REMOVED or not self.new.opaque(u.enclosing_client_type)
            if u.kind is U.CAST and u.detail != "explicit":
                return False
            return u.target == DeclRef(d.owner)
        if k is B.SUPERTYPE_REMOVED:
            return self._cast_edge(u, bc)
        if u.kind in (U.EXTENDS, U.IMPLEMENTS):
            return self._abstract_relation(u, bc)
        if u.kind is U.INSTANTIATION:
            return u.target == d
        if u.kind is U.METHOD_OVERRIDE:
            return self._override_relation(u, bc)
        return self._member_relation(u, bc)

    def _closure(self, fqn: str) -> tuple[str, ...]:
        return (fqn,) + self.old.ancestors(fqn)

    def _through(self, via: str, d: DeclRef, provenance: str) -> bool:
        """Does ``d`` lie on the old lookup path from ``via`` to ``provenance``?"""
        if d.owner not in self._closure(via):
            return False
        flat = self.old.api.flat(d.owner) if d.owner in self.old.api.types else None
        if flat is None:
            return False
        view = flat.fields if d.kind == "field" else flat.methods
        m = view.get(d.key)
        return m is not None and m.owner == provenance

    def _member_relation(self, u: Use, bc: BreakingChange) -> bool:
        d = bc.declaration
        if u.target.kind != d.kind or u.target.key != d.key or u.via is None:
            return False
        if not self._through(u.via, d, u.target.owner):
            return False
        recv = self.receiver(u)
        if self.new.opaque(recv):
            return False
        view = self.new.fields(recv) if d.kind == "field" else self.new.methods(recv)
        now = view.get(d.key)
        k = bc.kind
        static_form = u.detail in _STATIC_FORMS
        if k in (B.METHOD_REMOVED, B.FIELD_REMOVED):
            return now is None
        if k in (B.METHOD_NOW_STATIC, B.FIELD_NOW_STATIC):
            return now is not None and now.is_static and u.detail == "instance"
        if k in (B.METHOD_NO_LONGER_STATIC, B.FIELD_NO_LONGER_STATIC):
            return now is not None and not now.is_static and static_form
        if k is B.FIELD_NOW_FINAL:
            return now is not None and now.is_final
        return True

    def _override_relation(self, u: Use, bc: BreakingChange) -> bool:
        d = bc.declaration
        if d.kind != "method" or u.member_key != d.key or u.via is None:
            return False
        if not self._through(u.via, d, u.target.owner) or self.new.opaque(u.via):
            return False
        now = self.new.inherited_methods(u.via).get(d.key)
        k = bc.kind
        if k in (B.METHOD_REMOVED, B.METHOD_PARAMETER_TYPES_CHANGED):
            return now is None and u.detail == "marked"
        if k is B.METHOD_NOW_FINAL:
            return now is not None and now.is_final
        if k is B.METHOD_NOW_STATIC:
            return now is not None and now.is_static and u.detail != "hide"
        if k is B.METHOD_NO_LONGER_STATIC:
            return now is not None and not now.is_static and u.detail == "hide"
        return True

    def _abstract_relation(self, u: Use, bc: BreakingChange) -> bool:
        d = bc.declaration
        target = u.target.owner
        if bc.kind is B.METHOD_ABSTRACT_ADDED_TO_TYPE:
            return d.owner == target
        if bc.kind is B.METHOD_NOW_ABSTRACT:
            if d.owner in self._closure(target):
                return True
            # another clause bringing the same key loses the implementation it relied on
            impl = self.old.methods(u.enclosing_client_type).get(d.key)
            return impl is not None and impl.owner == d.owner and d.key in self.old.methods(target)
        return False

    def _cast_edge(self, u: Use, bc: BreakingChange) -> bool:
        if u.kind is not U.CAST or u.via is None:
            return False
        sub, lost = bc.declaration.owner, bc.old_attr
        target = u.target.owner
        return ((lost == target and sub in self._closure(u.via))
                or (lost == u.via and sub in self._closure(target)))

    # context predicates

    def broken_in_context(self, u: Use, bc: BreakingChange) -> bool:
        k = bc.kind
        n = self.new
        if k is B.TYPE_LESS_ACCESSIBLE:
            return not n.type_accessible(bc.declaration.owner, u.enclosing_client_type)
        if k is B.SUPERTYPE_REMOVED:
            if u.detail == "explicit":
                return not n.cast_legal(u.via, u.target.owner)
            if u.assign is not None:
                # the conversion only survives if the assignment target kept its type
                target, value = self.retype(u.assign)
                return target == u.target.owner and value != ERROR and not n.assignable(value, target)
            return not n.assignable(u.via, u.target.owner)
        if k in (B.METHOD_NOW_ABSTRACT, B.METHOD_ABSTRACT_ADDED_TO_TYPE):
            return self._unimplemented(u, bc.declaration.key)
        if u.kind is U.METHOD_OVERRIDE:
            return self._override_broken(u)
        if u.kind in (U.METHOD_INVOCATION, U.INSTANTIATION):
            return not self.call_ok(u.call)
        if u.kind in (U.FIELD_READ, U.FIELD_WRITE):
            recv = self.receiver(u)
            if n.opaque(recv):
                return False
            f = n.fields(recv).get(u.target.name)
            if f is None or not n.accessible(f.access, f.owner, u.enclosing_client_type):
                return True
            if u.kind is U.FIELD_WRITE:
                value = self.retype(u.assign)[1] if u.assign else (u.rhs_type or ERROR)
                return value != ERROR and not n.assignable(value, f.type)
            return not self.flow_ok(u.flow, f.type)
        return False

    def _unimplemented(self, u: Use, key: str) -> bool:
        n = self.new
        cls = n.types.get(u.enclosing_client_type)
        if cls is None or cls.kind != "class" or cls.is_abstract or n.opaque(cls.fqn):
            return False
        mine = n.methods(cls.fqn).get(key)
        theirs = n.methods(u.target.owner).get(key)
        return bool(mine and mine.is_abstract and theirs and theirs.is_abstract)

    def _override_broken(self, u: Use) -> bool:
        n = self.new
        inherited = n.inherited_methods(u.via).get(u.member_key)
        if inherited is None:
            return u.detail == "marked"
        mine = n.types[u.via].methods[u.member_key]
        if mine.is_static != inherited.is_static or inherited.is_final:
            return True
        if mine.access < inherited.access:
            return True
        return not n.assignable(mine.return_type, inherited.return_type)

    def call_ok(self, cs: Optional[CallSite]) -> bool:
        """Does the recorded call still resolve, with every part re-typed under the new library?"""
        if cs is None:
            return True
        n = self.new
        detail, owner, args = self.retype_call(cs)
        if owner == ERROR:
            return True
        if cs.is_ctor:
            c, why = n.resolve_ctor(owner, args, cs.site)
            return c is not None or why == "silent"
        m, why = n.resolve_method(owner, cs.name, args, cs.site)
        if m is None:
            return why == "silent"
        if m.is_static != (detail == "static"):
            return False
        return self.flow_ok(cs.flow, m.return_type)

    def _known(self, t: str) -> bool:
        e = element_type(t)
        return e in PRIMITIVES or e in ("void", "null", ERROR, "String", "Object") or self.new.known(e)

    def flow_ok(self, flow: Optional[Flow], t: str) -> bool:
        n = self.new
        if flow is None or flow.kind == "discard" or t == ERROR:
            return True
        if flow.kind == "assign":
            target = self.retype(flow.assign)[0]
            return target == ERROR or not self._known(target) or n.assignable(t, target)
        if flow.kind == "expect":
            return not self._known(flow.type) or n.assignable(t, flow.type)
        if flow.kind == "cast":
            return not self._known(flow.type) or n.cast_legal(t, flow.type)
        if flow.kind == "arg":
            return self.call_ok(flow.call)
        if flow.kind == "receiver":
            link = flow.link
            if n.opaque(t):
                return True
            if link.call is not None:
                return self.call_ok(link.call)
            f = n.fields(t).get(link.name)
            if f is None or f.is_static or not n.accessible(f.access, f.owner, link.site):
                return False
            if link.flow is not None and link.flow.kind == "write":
                value = self.retype(link.flow.assign)[1] if link.flow.assign else link.flow.type
                return not f.is_final and (value == ERROR or n.assignable(value, f.type))
            return self.flow_ok(link.flow, f.type)
        raise ValueError(f"unknown flow {flow.kind}")


def compute_impact(delta: Delta, usage: UsageModel, old_api: ApiModel, new_api: ApiModel,
                   client_units: list[CompilationUnit], matrix: Optional[Matrix] = None,
                   trace: Optional[set] = None) -> ImpactModel:
    """Broken locations of one client.

    ``matrix`` replaces the default matcher matrix (used to test the
    differential harness); ``trace`` collects the (use kind, change kind)
    cells that produced at least one broken location.
    """
    if not delta.changes or not usage.uses:
        return ImpactModel(usage.client_name, (), len(usage.uses))
    judge = _Judge(ClientEnv(client_units, old_api), ClientEnv(client_units, new_api))
    found: dict[tuple, BrokenLocation] = {}
    for u in usage.uses:
        for bc in delta.changes:
            cell = matcher_rule(u.kind, bc.kind, matrix)
            if cell.rule is MatchRule.NEVER or not judge.related(u, bc):
                continue
            if cell.rule is MatchRule.CONTEXT and not judge.broken_in_context(u, bc):
                continue
            key = (u.location, bc.sort_key)
            if key not in found:
                found[key] = BrokenLocation(u, bc, f"X-{bc.kind.rule}-{u.kind.abbr}")
            if trace is not None:
                trace.add((u.kind, bc.kind))
    broken = sorted(found.values(), key=lambda b: b.sort_key)
    return ImpactModel(usage.client_name, tuple(broken), len(usage.uses))
