"""Diff two API models into a sorted list of breaking changes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .apimodel import (
    Access,
    ApiModel,
    ConstructorDecl,
    DeclRef,
    FieldDecl,
    MethodDecl,
    TypeDecl,
    is_exported,
)
from .syntax import SourceLocation


class BcKind(Enum):
    # value: (rule id, binary incompatible, source incompatible)
    TYPE_REMOVED = ("T1", True, True)
    TYPE_LESS_ACCESSIBLE = ("T2", True, True)
    TYPE_NOW_FINAL = ("T3", True, True)
    TYPE_NOW_ABSTRACT = ("T4", True, True)
    TYPE_KIND_CHANGED = ("T5", True, True)
    SUPERTYPE_REMOVED = ("T6", True, True)
    METHOD_REMOVED = ("M1", True, True)
    METHOD_LESS_ACCESSIBLE = ("M2", True, True)
    METHOD_NOW_FINAL = ("M3", True, True)
    METHOD_NOW_ABSTRACT = ("M4", True, True)
    METHOD_NOW_STATIC = ("M5", True, True)
    METHOD_NO_LONGER_STATIC = ("M6", True, True)
    METHOD_RETURN_TYPE_CHANGED = ("M7", True, True)
    METHOD_PARAMETER_TYPES_CHANGED = ("M8", True, True)
    METHOD_ABSTRACT_ADDED_TO_TYPE = ("M9", True, True)
    FIELD_REMOVED = ("F1", True, True)
    FIELD_LESS_ACCESSIBLE = ("F2", True, True)
    FIELD_NOW_FINAL = ("F3", True, True)
    FIELD_NOW_STATIC = ("F4", True, True)
    FIELD_NO_LONGER_STATIC = ("F5", True, True)
    FIELD_TYPE_CHANGED = ("F6", True, True)
    CONSTRUCTOR_REMOVED = ("C1", False, True)
    CONSTRUCTOR_LESS_ACCESSIBLE = ("C2", False, True)

    @property
    def rule(self) -> str:
        return self.value[0]

    @property
    def binary(self) -> bool:
        return self.value[1]

    @property
    def source(self) -> bool:
        return self.value[2]

    @property
    def prose(self) -> str:
        """``METHOD_NOW_FINAL`` -> ``method now final``."""
        return self.name.lower().replace("_", " ")


@dataclass(frozen=True)
class BreakingChange:
    declaration: DeclRef
    kind: BcKind
    old_attr: str = ""
    new_attr: str = ""
    old_location: Optional[SourceLocation] = None
    deprecated_in_old: bool = False

    @property
    def sort_key(self) -> tuple[str, str, str]:
        return (str(self.declaration), self.kind.name, self.old_attr)


@dataclass(frozen=True)
class Delta:
    old_version: str
    new_version: str
    changes: tuple[BreakingChange, ...]

    def __len__(self) -> int:
        return len(self.changes)

    def __iter__(self):
        return iter(self.changes)


def _deprecated(decl, owner: TypeDecl) -> bool:
    return "Deprecated" in decl.annotations or "Deprecated" in owner.annotations


def _visible(decl, model: ApiModel) -> bool:
    return is_exported(decl, model) and not decl.excluded


def diff(old: ApiModel, new: ApiModel) -> Delta:
    """Compute the breaking changes that turn ``old`` into ``new``."""
    changes: list[BreakingChange] = []
    for fqn in sorted(old.types):
        ot = old.types[fqn]
        if ot.excluded or not is_exported(ot, old):
            continue
        nt = new.types.get(fqn)
        dep = ot.is_deprecated
        if nt is None:
            changes.append(BreakingChange(ot.ref, BcKind.TYPE_REMOVED, ot.kind, "", ot.location, dep))
            continue
        if nt.kind != ot.kind:
            changes.append(BreakingChange(ot.ref, BcKind.TYPE_KIND_CHANGED, ot.kind, nt.kind, ot.location, dep))
        if nt.access < ot.access:
            changes.append(BreakingChange(ot.ref, BcKind.TYPE_LESS_ACCESSIBLE, ot.access.label,
                                          nt.access.label, ot.location, dep))
        if not ot.is_final and nt.is_final:
            changes.append(BreakingChange(ot.ref, BcKind.TYPE_NOW_FINAL, "", "final", ot.location, dep))
        if ot.kind == nt.kind == "class" and not ot.is_abstract and nt.is_abstract:
            changes.append(BreakingChange(ot.ref, BcKind.TYPE_NOW_ABSTRACT, "", "abstract", ot.location, dep))
        changes.extend(supertype_changes(ot, nt, old, new))
        changes.extend(_member_changes(ot, nt, old, new))

    unique = {c.sort_key: c for c in changes}
    return Delta(old.version_label, new.version_label, tuple(unique[k] for k in sorted(unique)))


def supertype_changes(ot: TypeDecl, nt: TypeDecl, old: ApiModel, new: ApiModel) -> list[BreakingChange]:
    """SUPERTYPE_REMOVED per lost ancestor, plus members lost along with it."""
    lost = [s for s in old.ancestors(ot.fqn) if s not in set(new.ancestors(nt.fqn))]
    out = [BreakingChange(ot.ref, BcKind.SUPERTYPE_REMOVED, s, "", ot.location, ot.is_deprecated)
           for s in sorted(lost)]
    if not lost:
        return out
    lost_set = set(lost)
    oflat, nflat = old.flat(ot.fqn), new.flat(nt.fqn)
    for key, m in sorted(oflat.methods.items()):
        if m.owner in lost_set and key not in nflat.methods and _visible(m, old):
            ref = DeclRef(ot.fqn, "method", m.name, m.param_types)
            out.append(BreakingChange(ref, BcKind.METHOD_REMOVED, m.owner, "", ot.location,
                                      _deprecated(m, old.types[m.owner])))
    for name, f in sorted(oflat.fields.items()):
        if f.owner in lost_set and name not in nflat.fields and _visible(f, old):
            out.append(BreakingChange(DeclRef(ot.fqn, "field", name), BcKind.FIELD_REMOVED, f.owner, "",
                                      ot.location, _deprecated(f, old.types[f.owner])))
    return out


def _member_changes(ot: TypeDecl, nt: TypeDecl, old: ApiModel, new: ApiModel) -> list[BreakingChange]:
    out: list[BreakingChange] = []
    oflat, nflat = old.flat(ot.fqn), new.flat(nt.fqn)

    for key, om in sorted(ot.methods.items()):
        if not _visible(om, old):
            continue
        out.extend(compare_member(om, nflat.methods.get(key), (ot, oflat, nflat)))

    # inherited members that turned abstract through a different provenance
    for key, om in sorted(oflat.methods.items()):
        if om.owner == ot.fqn or not _visible(om, old):
            continue
        nm = nflat.methods.get(key)
        if nm is not None and nm.owner != om.owner and not om.is_abstract and nm.is_abstract:
            ref = DeclRef(ot.fqn, "method", om.name, om.param_types)
            out.append(BreakingChange(ref, BcKind.METHOD_NOW_ABSTRACT, om.owner, nm.owner, ot.location,
                                      _deprecated(om, old.types[om.owner])))

    for key, nm in sorted(nflat.methods.items()):
        if nm.is_abstract and key not in oflat.methods and not nm.excluded:
            ref = DeclRef(ot.fqn, "method", nm.name, nm.param_types)
            out.append(BreakingChange(ref, BcKind.METHOD_ABSTRACT_ADDED_TO_TYPE, "", "abstract",
                                      ot.location, ot.is_deprecated))

    for name, of in sorted(ot.fields.items()):
        if _visible(of, old):
            out.extend(compare_member(of, nflat.fields.get(name), (ot, oflat, nflat)))

    for key, oc in sorted(ot.constructors.items()):
        if _visible(oc, old):
            out.extend(compare_member(oc, nt.constructors.get(key), (ot, oflat, nflat)))
    return out


def compare_member(old_decl, new_decl, context) -> list[BreakingChange]:
    """Rule-matrix rows firing for one exported old member.

    ``context`` is ``(old owner TypeDecl, old flat view, new flat view)``; the
    new flat view is consulted to tell a parameter-type change from a removal.
    """
    owner, oflat, nflat = context
    ref = old_decl.ref
    dep = _deprecated(old_decl, owner)
    loc = old_decl.location

    def bc(kind: BcKind, old_attr: str = "", new_attr: str = "") -> BreakingChange:
        return BreakingChange(ref, kind, old_attr, new_attr, loc, dep)

    if isinstance(old_decl, MethodDecl):
        if new_decl is None:
            replacements = [
                m for m in nflat.methods.values()
                if m.name == old_decl.name and len(m.param_types) == len(old_decl.param_types)
                and m.key not in oflat.methods
            ]
            if len(replacements) == 1:
                return [bc(BcKind.METHOD_PARAMETER_TYPES_CHANGED, ",".join(old_decl.param_types),
                           ",".join(replacements[0].param_types))]
            return [bc(BcKind.METHOD_REMOVED)]
        out = []
        if new_decl.access < old_decl.access:
            out.append(bc(BcKind.METHOD_LESS_ACCESSIBLE, old_decl.access.label, new_decl.access.label))
        if not old_decl.is_final and new_decl.is_final:
            out.append(bc(BcKind.METHOD_NOW_FINAL, "", "final"))
        if not old_decl.is_abstract and new_decl.is_abstract:
            out.append(bc(BcKind.METHOD_NOW_ABSTRACT, "", "abstract"))
        if not old_decl.is_static and new_decl.is_static:
            out.append(bc(BcKind.METHOD_NOW_STATIC, "", "static"))
        if old_decl.is_static and not new_decl.is_static:
            out.append(bc(BcKind.METHOD_NO_LONGER_STATIC, "static", ""))
        if old_decl.return_type != new_decl.return_type:
            out.append(bc(BcKind.METHOD_RETURN_TYPE_CHANGED, old_decl.return_type, new_decl.return_type))
        return out

    if isinstance(old_decl, FieldDecl):
        if new_decl is None:
            return [bc(BcKind.FIELD_REMOVED)]
        out = []
        if new_decl.access < old_decl.access:
            out.append(bc(BcKind.FIELD_LESS_ACCESSIBLE, old_decl.access.label, new_decl.access.label))
        if not old_decl.is_final and new_decl.is_final:
            out.append(bc(BcKind.FIELD_NOW_FINAL, "", "final"))
        if not old_decl.is_static and new_decl.is_static:
            out.append(bc(BcKind.FIELD_NOW_STATIC, "", "static"))
        if old_decl.is_static and not new_decl.is_static:
            out.append(bc(BcKind.FIELD_NO_LONGER_STATIC, "static", ""))
        if old_decl.type != new_decl.type:
            out.append(bc(BcKind.FIELD_TYPE_CHANGED, old_decl.type, new_decl.type))
        return out

    assert isinstance(old_decl, ConstructorDecl)
    if new_decl is None:
        return [bc(BcKind.CONSTRUCTOR_REMOVED)]
    if new_decl.access < old_decl.access:
        return [bc(BcKind.CONSTRUCTOR_LESS_ACCESSIBLE, old_decl.access.label, new_decl.access.label)]
    return []


__all__ = ["Access", "BcKind", "BreakingChange", "Delta", "compare_member", "diff", "supertype_changes"]
