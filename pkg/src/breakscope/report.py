"""Maintainer-facing reports: a summary-first Markdown page and a JSON twin."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .apimodel import ApiModel, DeclRef, lookup
from .delta import BcKind, Delta
from .usage import UseKind

REQUIRED_PLACEHOLDERS = ("{ref}", "{path}", "{line}")


class BadTemplate(ValueError):
    pass


def check_template(template: str) -> None:
    missing = [p for p in REQUIRED_PLACEHOLDERS if p not in template]
    if missing:
        raise BadTemplate(f"url template {template!r} lacks {', '.join(missing)}")


def render_link(template: Optional[str], ref: str, path: str, line: int, column: int) -> Optional[str]:
    if not template:
        return None
    check_template(template)
    return (template.replace("{ref}", ref).replace("{path}", path)
            .replace("{line}", str(line)).replace("{col}", str(column)))


@dataclass(frozen=True)
class SummaryStats:
    breaking_changes: int
    broken_locations: int
    impacted_clients: int
    total_clients: int

    def __post_init__(self) -> None:
        if self.impacted_clients > self.total_clients:
            raise ValueError("more impacted clients than clients")


@dataclass(frozen=True)
class ChangeRow:
    declaration: str
    kind: str
    deprecated: bool
    old_attr: str
    new_attr: str
    broken_uses: int
    impacted_clients: tuple


@dataclass(frozen=True)
class BrokenRow:
    path: str
    line: int
    column: int
    use_kind: str
    bc_kind: str
    declaration: str
    explanation: str
    url: Optional[str]


@dataclass(frozen=True)
class ClientSection:
    name: str
    analyzed_uses: int
    broken: tuple
    status: str = "ok"
    errors: tuple = ()


@dataclass(frozen=True)
class Advisory:
    declaration: str
    reason: str
    clients: tuple


@dataclass(frozen=True)
class Report:
    old_version: str
    new_version: str
    stats: SummaryStats
    changes: tuple
    clients: tuple
    advisories: tuple


def summarize(delta: Delta, impacts: Iterable) -> tuple:
    """Stats as ``(breakingChanges, brokenLocations, impactedClients, totalClients)``.

    ``impacts`` holds one entry per configured client: an ImpactModel, or
    ``None`` for a client that could not be analyzed.
    """
    impacts = list(impacts)
    counts = [len(i.broken_locations) if i is not None else 0 for i in impacts]
    stats = SummaryStats(len(delta.changes), sum(counts), sum(1 for c in counts if c), len(impacts))
    return stats


def _deprecated(model: ApiModel, ref: DeclRef) -> Optional[DeclRef]:
    """The declaration carrying ``@Deprecated`` for ``ref`` in ``model``, if any."""
    owner = model.types.get(ref.owner)
    if owner is None:
        return None
    if ref.kind != "type":
        decl = lookup(model, ref)
        if decl is not None and "Deprecated" in decl.annotations:
            return ref
    return DeclRef(ref.owner) if "Deprecated" in owner.annotations else None


def advisories(old_api: ApiModel, new_api: ApiModel, usages: dict) -> tuple:
    """Declarations deprecated in the new version, not in the old, and still used."""
    found: dict[DeclRef, set] = {}
    for client, usage in usages.items():
        for use in usage.uses:
            hit = _deprecated(new_api, use.target)
            if hit is not None and _deprecated(old_api, hit) is None:
                found.setdefault(hit, set()).add(client)
    return tuple(Advisory(str(ref), "deprecated in this change and still used", tuple(sorted(clients)))
                 for ref, clients in sorted(found.items(), key=lambda kv: str(kv[0])))


def _links(config) -> dict:
    out = {}
    for c in getattr(config, "clients", None) or ():
        out[c.name] = (c.url_template, c.ref)
    return out


def build_report(analysis, config=None) -> Report:
    """``analysis`` is a ``pipeline.Analysis``; ``config`` supplies per-client url templates."""
    delta = analysis.delta
    links = _links(config)
    per_cause: dict[tuple, list] = {}
    sections = []
    for client in sorted(analysis.clients, key=lambda c: c.name):
        template, ref = links.get(client.name, (None, ""))
        rows = []
        for b in (client.impact.broken_locations if client.impact else ()):
            loc = b.use.location
            rows.append(BrokenRow(loc.file, loc.line, loc.column, b.use.kind.name, b.cause.kind.name,
                                  str(b.cause.declaration), b.explanation,
                                  render_link(template, ref, loc.file, loc.line, loc.column)))
            per_cause.setdefault(b.cause.sort_key, []).append(client.name)
        analyzed = len(client.usage.uses) if client.usage else 0
        sections.append(ClientSection(client.name, analyzed, tuple(rows), client.status, tuple(client.errors)))
    changes = []
    for bc in delta.changes:
        hits = per_cause.get(bc.sort_key, [])
        changes.append(ChangeRow(str(bc.declaration), bc.kind.name, bc.deprecated_in_old, bc.old_attr,
                                 bc.new_attr, len(hits), tuple(sorted(set(hits)))))
    stats = summarize(delta, [c.impact if c.status == "ok" else None for c in analysis.clients])
    usages = {c.name: c.usage for c in analysis.clients if c.usage is not None}
    return Report(delta.old_version, delta.new_version, stats, tuple(changes), tuple(sections),
                  advisories(analysis.old_api, analysis.new_api, usages))


# markdown

def _prose(kind_name: str, enum) -> str:
    return enum[kind_name].prose


def summary_line(stats: SummaryStats) -> str:
    return (f"**{stats.breaking_changes} breaking changes · {stats.broken_locations} broken locations · "
            f"{stats.impacted_clients}/{stats.total_clients} clients impacted**")


def render_markdown(report: Report, config=None) -> str:
    for template, _ in _links(config).values():
        if template:
            check_template(template)
    out = [f"## Breaking changes: {report.old_version} → {report.new_version}", "", summary_line(report.stats), ""]
    if not report.changes:
        out += ["No breaking changes detected.", ""]
    else:
        out += ["| Declaration | Kind | Deprecated | Broken uses | Impacted clients |",
                "|---|---|---|---|---|"]
        for row in report.changes:
            clients = ", ".join(row.impacted_clients) or "none"
            out.append(f"| `{row.declaration}` | {_prose(row.kind, BcKind)} | "
                       f"{'yes' if row.deprecated else 'no'} | {row.broken_uses} | {clients} |")
        out.append("")
        for section in report.clients:
            if not section.broken:
                continue
            n = len(section.broken)
            out += ["<details>", f"<summary>{section.name}: {n} broken location{'s' if n != 1 else ''}</summary>",
                    ""]
            for b in section.broken:
                place = f"{b.path}:{b.line}"
                link = f"[{place}]({b.url})" if b.url else f"`{place}`"
                out.append(f"- {link} · {_prose(b.use_kind, UseKind)} · {_prose(b.bc_kind, BcKind)} "
                           f"(`{b.declaration}`) · {b.explanation}")
            out += ["", "</details>", ""]
    skipped = [s for s in report.clients if s.status != "ok"]
    if skipped:
        out += ["### Clients not analyzed", ""]
        for s in skipped:
            out.append(f"- {s.name}: {s.status} ({len(s.errors)} error{'s' if len(s.errors) != 1 else ''})")
        out.append("")
    if report.advisories:
        out += ["### Advisories", ""]
        for a in report.advisories:
            out.append(f"- `{a.declaration}`: {a.reason} by {', '.join(a.clients)}")
        out.append("")
    return "\n".join(out)


# json

def report_to_dict(report: Report) -> dict:
    s = report.stats
    return {
        "summary": {"breakingChanges": s.breaking_changes, "brokenLocations": s.broken_locations,
                    "impactedClients": s.impacted_clients, "totalClients": s.total_clients},
        "oldVersion": report.old_version,
        "newVersion": report.new_version,
        "changes": [{"declaration": c.declaration, "kind": c.kind, "deprecated": c.deprecated,
                     "oldAttr": c.old_attr, "newAttr": c.new_attr, "brokenUses": c.broken_uses,
                     "impactedClients": list(c.impacted_clients)} for c in report.changes],
        "clients": [{"name": c.name, "analyzedUses": c.analyzed_uses,
                     "broken": [{"path": b.path, "line": b.line, "column": b.column, "useKind": b.use_kind,
                                 "bcKind": b.bc_kind, "declaration": b.declaration,
                                 "explanation": b.explanation, "url": b.url} for b in c.broken],
                     "status": c.status, "errors": list(c.errors)} for c in report.clients],
        "advisories": [{"declaration": a.declaration, "reason": a.reason, "clients": list(a.clients)}
                       for a in report.advisories],
    }


def render_json(report: Report) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> Report:
    d = json.loads(text)
    s = d["summary"]
    return Report(
        d["oldVersion"], d["newVersion"],
        SummaryStats(s["breakingChanges"], s["brokenLocations"], s["impactedClients"], s["totalClients"]),
        tuple(ChangeRow(c["declaration"], c["kind"], c["deprecated"], c["oldAttr"], c["newAttr"],
                        c["brokenUses"], tuple(c["impactedClients"])) for c in d["changes"]),
        tuple(ClientSection(c["name"], c["analyzedUses"],
                            tuple(BrokenRow(b["path"], b["line"], b["column"], b["useKind"], b["bcKind"],
                                            b["declaration"], b["explanation"], b["url"]) for b in c["broken"]),
                            c.get("status", "ok"), tuple(c.get("errors", ()))) for c in d["clients"]),
        tuple(Advisory(a["declaration"], a["reason"], tuple(a["clients"])) for a in d["advisories"]),
    )
