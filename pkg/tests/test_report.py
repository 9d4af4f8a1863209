import json
from pathlib import Path

import pytest

from breakscope.apimodel import DeclRef
from breakscope.config import ClientConfig, Config, parse_config
from breakscope.corpus import committed_fixtures
from breakscope.delta import BcKind, BreakingChange, Delta
from breakscope.impact import ImpactModel
from breakscope.pipeline import analyze
from breakscope.report import (
    BadTemplate, build_report, parse_json, render_json, render_link, render_markdown, summarize, summary_line,
)


def fake_delta(n):
    return Delta("a", "b", tuple(BreakingChange(DeclRef(f"p.T{i:02}"), BcKind.TYPE_REMOVED) for i in range(n)))


def fake_impacts(counts):
    return [ImpactModel(f"c{i}", tuple(range(k)), k) for i, k in enumerate(counts)]


def test_summary_of_thirteen_clients():
    counts = [10, 8, 6, 5, 3] + [0] * 8
    stats = summarize(fake_delta(13), fake_impacts(counts))
    assert (stats.breaking_changes, stats.broken_locations, stats.impacted_clients, stats.total_clients) == \
        (13, 32, 5, 13)
    assert summary_line(stats) == "**13 breaking changes · 32 broken locations · 5/13 clients impacted**"


def test_summary_of_empty_delta():
    stats = summarize(fake_delta(0), fake_impacts([0, 0, 0]))
    assert (stats.breaking_changes, stats.broken_locations, stats.impacted_clients, stats.total_clients) == (0, 0, 0, 3)


def test_summary_two_changes_one_broken_client():
    stats = summarize(fake_delta(2), fake_impacts([3, 0]))
    assert (stats.breaking_changes, stats.broken_locations, stats.impacted_clients, stats.total_clients) == (2, 3, 1, 2)


def test_unanalyzable_client_counts_as_unimpacted():
    stats = summarize(fake_delta(1), fake_impacts([2]) + [None])
    assert (stats.broken_locations, stats.impacted_clients, stats.total_clients) == (2, 1, 2)


def test_link_substitution():
    assert render_link("https://ex.org/r/blob/{ref}/{path}#L{line}", "main", "src/LibParser.java", 23, 29) == \
        "https://ex.org/r/blob/main/src/LibParser.java#L23"
    assert render_link("x/{ref}/{path}#L{line}C{col}", "v1", "a.java", 2, 5) == "x/v1/a.java#L2C5"
    assert render_link(None, "main", "a", 1, 1) is None


@pytest.mark.parametrize("template", ["{ref}/{path}", "{path}#L{line}", "https://ex.org/{ref}#L{line}"])
def test_template_missing_placeholder(template):
    with pytest.raises(BadTemplate):
        render_link(template, "main", "a.java", 1, 1)


def fixture(name):
    return next(f for f in committed_fixtures() if f.name == name)


def report_of(name):
    fx = fixture(name)
    config = parse_config(fx.config)
    result = analyze(fx.old, fx.new, fx.clients, config.exclusions)
    return build_report(result, config), config


def test_empty_delta_markdown_and_json():
    report, config = report_of("clean")
    md = render_markdown(report, config)
    assert "No breaking changes detected." in md
    assert "<details>" not in md
    data = json.loads(render_json(report))
    assert data["summary"] == {"breakingChanges": 0, "brokenLocations": 0, "impactedClients": 0, "totalClients": 1}
    assert data["changes"] == []


def test_json_top_level_schema():
    data = json.loads(render_json(report_of("flagship")[0]))
    assert list(data) == ["summary", "oldVersion", "newVersion", "changes", "clients", "advisories"]
    assert list(data["changes"][0]) == ["declaration", "kind", "deprecated", "oldAttr", "newAttr", "brokenUses",
                                        "impactedClients"]
    broken = next(c for c in data["clients"] if c["broken"])["broken"][0]
    assert list(broken) == ["path", "line", "column", "useKind", "bcKind", "declaration", "explanation", "url"]


def test_one_change_fixture_matches_golden():
    fx = fixture("gen-seed0-field-now-final")
    report, _ = report_of(fx.name)
    data = json.loads(render_json(report))
    assert [c["kind"] for c in data["changes"]] == ["FIELD_NOW_FINAL"]
    assert data == fx.expected


@pytest.mark.parametrize("name", ["flagship", "catalog", "clean", "exclusions"])
def test_json_round_trip(name):
    report, _ = report_of(name)
    assert parse_json(render_json(report)) == report


def test_markdown_layout_and_agreement_with_json():
    report, config = report_of("flagship")
    md = render_markdown(report, config)
    lines = md.splitlines()
    assert lines[0].startswith("## Breaking changes: ")
    assert lines[2] == summary_line(report.stats)
    assert "| Declaration | Kind | Deprecated | Broken uses | Impacted clients |" in lines
    assert md.index("<details>") < md.index("### Advisories")
    assert lines.index("### Advisories") > max(i for i, l in enumerate(lines) if l == "</details>")
    assert sum(r.broken_uses for r in report.changes) == report.stats.broken_locations
    assert sum(len(c.broken) for c in report.clients) == report.stats.broken_locations
    data = json.loads(render_json(report))
    s = data["summary"]
    assert f"**{s['breakingChanges']} breaking changes · {s['brokenLocations']} broken locations · " \
           f"{s['impactedClients']}/{s['totalClients']} clients impacted**" in lines


def test_markdown_links_and_prose():
    report, config = report_of("flagship")
    md = render_markdown(report, config)
    for section in report.clients:
        for b in section.broken:
            assert f"[{b.path}:{b.line}]({b.url})" in md
    assert "type removed" in md and "TYPE_REMOVED" not in md


def test_printed_declarations_parse_back():
    report, _ = report_of("catalog")
    for row in report.changes:
        assert str(DeclRef.parse(row.declaration)) == row.declaration


def test_ordering():
    report, _ = report_of("catalog")
    names = [c.name for c in report.clients]
    assert names == sorted(names)
    keys = [(r.declaration, r.kind) for r in report.changes]
    assert keys == sorted(keys)
    for c in report.clients:
        locs = [(b.path, b.line, b.column) for b in c.broken]
        assert locs == sorted(locs)


def test_rendering_is_byte_stable():
    a, config = report_of("flagship")
    b, _ = report_of("flagship")
    assert render_markdown(a, config) == render_markdown(b, config)
    assert render_json(a) == render_json(b)


def test_markdown_rejects_bad_template():
    report, _ = report_of("clean")
    config = Config(clients=(ClientConfig("x", Path("x"), "{ref}/{path}"),))
    with pytest.raises(BadTemplate):
        render_markdown(report, config)
