from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from ..apimodel import ExclusionRules
from ..config import parse_config
from ..impact import Matrix
from ..oracle import broken_by_oracle
from ..pipeline import analyze
from .fixture import Fixture


@dataclass
class Verdict:
    fixture: str
    passed: bool
    # client -> (locations only the matcher reports, locations only the oracle reports)
    differences: dict = field(default_factory=dict)
    golden_matches: Optional[bool] = None
    report: Optional[dict] = None

    def __str__(self) -> str:
        if self.passed:
            return f"PASS {self.fixture}"
        parts = [f"FAIL {self.fixture}"]
        for client, (mine, theirs) in sorted(self.differences.items()):
            parts.append(f"  {client}: matcher-only {sorted(mine)} oracle-only {sorted(theirs)}")
        if self.golden_matches is False:
            parts.append("  report.json differs from golden")
        return "\n".join(parts)


def exclusions_of(config: dict) -> ExclusionRules:
    return ExclusionRules(frozenset(config.get("excludedAnnotations", ())),
                          tuple(config.get("excludedPackages", ())))


def run_differential(fixture: Fixture, matrix: Optional[Matrix] = None, trace: Optional[set] = None) -> Verdict:
    """PASS iff matcher and oracle agree on every client and the golden report (if any) matches."""
    from ..report import build_report, render_json

    result = analyze(fixture.old, fixture.new, fixture.clients, exclusions_of(fixture.config),
                     matrix=matrix, trace=trace)
    differences = {}
    for client in result.clients:
        if client.status != "ok":
            differences[client.name] = (set(), {("<" + client.status + ">", 0)})
            continue
        theirs = broken_by_oracle(client.units, result.old_api, result.new_api)
        mine = client.impact.locations
        if mine != theirs:
            differences[client.name] = (mine - theirs, theirs - mine)
    report = json.loads(render_json(build_report(result, parse_config(fixture.config))))
    golden = None if fixture.expected is None else report == fixture.expected
    return Verdict(fixture.name, not differences and golden is not False, differences, golden, report)
