"""Orchestration shared by the CLI and the fixture corpus."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .apimodel import ApiModel, ExclusionRules, extract_api
from .delta import Delta, diff
from .impact import ImpactModel, Matrix, compute_impact
from .oracle import check_client
from .syntax import MiniJSyntaxError, parse_tree
from .syntax.nodes import CompilationUnit
from .usage import UsageModel, extract_uses


@dataclass
class ClientResult:
    name: str
    status: str  # ok | stale | error
    usage: Optional[UsageModel] = None
    impact: Optional[ImpactModel] = None
    errors: tuple = ()
    units: list = field(default_factory=list, repr=False)


@dataclass
class Analysis:
    old_api: ApiModel
    new_api: ApiModel
    delta: Delta
    clients: list


def load_api(source, exclusions: Optional[ExclusionRules] = None, label: str = "") -> ApiModel:
    """``source`` is a directory or a ``{path: text}`` map."""
    if isinstance(source, dict):
        units = parse_tree(None, source)
    else:
        units = parse_tree(source)
    return extract_api(units, exclusions, label)


def analyze_client(name: str, source, old_api: ApiModel, new_api: ApiModel, delta: Delta,
                   matrix: Optional[Matrix] = None, trace: Optional[set] = None) -> ClientResult:
    """Impact of ``delta`` on one client; parse failures and stale clients are reported, not raised."""
    try:
        units: list[CompilationUnit] = parse_tree(None, source) if isinstance(source, dict) else parse_tree(source)
    except (MiniJSyntaxError, OSError) as exc:
        return ClientResult(name, "error", errors=(str(exc),))
    pre = check_client(units, old_api)
    usage = extract_uses(units, old_api, name)
    if pre:
        return ClientResult(name, "stale", usage, errors=tuple(str(d) for d in pre), units=units)
    impact = compute_impact(delta, usage, old_api, new_api, units, matrix, trace)
    return ClientResult(name, "ok", usage, impact, units=units)


def analyze(old_source, new_source, clients: dict, exclusions: Optional[ExclusionRules] = None,
            old_label: str = "old", new_label: str = "new", matrix: Optional[Matrix] = None,
            trace: Optional[set] = None) -> Analysis:
    """Full pipeline. Library errors propagate; client errors become client statuses."""
    old_api = load_api(old_source, exclusions, old_label)
    new_api = load_api(new_source, exclusions, new_label)
    delta = diff(old_api, new_api)
    results = [analyze_client(name, clients[name], old_api, new_api, delta, matrix, trace)
               for name in sorted(clients)]
    return Analysis(old_api, new_api, delta, results)
