"""The eight acceptance criteria; the terminal summary prints one PASS/FAIL line for each."""

import json
import re
import time

import pytest

from breakscope.apimodel import DeclRef
from breakscope.cli import main
from breakscope.corpus import committed_fixtures, fixtures_root, load_manifest, run_differential
from breakscope.corpus.differential import exclusions_of
from breakscope.delta import BcKind, diff
from breakscope.impact import active_cells, compute_impact
from breakscope.oracle import broken_by_oracle
from breakscope.pipeline import load_api
from breakscope.syntax import parse_tree
from breakscope.usage import extract_uses
from conftest import sweep

FX = fixtures_root()
FIXTURES = {f.name: f for f in committed_fixtures()}
SEEDS = range(200)
SUMMARY = re.compile(r"^\*\*(\d+) breaking changes · (\d+) broken locations · (\d+)/(\d+) clients impacted\*\*$")


def cli(*argv):
    return main([str(a) for a in argv])


@pytest.mark.criterion(1, "differential correctness on committed fixtures and 200 seeds")
def test_differential_correctness():
    start = time.perf_counter()
    failing = [str(v) for v in map(run_differential, FIXTURES.values()) if not v.passed]
    failing += [str(v) for v in sweep(SEEDS)]
    elapsed = time.perf_counter() - start
    assert not failing, "\n".join(failing)
    assert elapsed < 60, f"took {elapsed:.1f}s"


@pytest.mark.criterion(2, "identity law on every fixture")
def test_identity_law():
    for fx in FIXTURES.values():
        old = load_api(fx.old, exclusions_of(fx.config), "old")
        delta = diff(old, old)
        assert delta.changes == (), fx.name
        for name, files in fx.clients.items():
            units = parse_tree(None, files)
            impact = compute_impact(delta, extract_uses(units, old, name), old, old, units)
            assert impact.broken_locations == (), (fx.name, name)
            assert broken_by_oracle(units, old, old) == set()


@pytest.mark.criterion(3, "catalog and matrix coverage with innocuous twins")
def test_catalog_and_matrix_coverage():
    fired, innocuous, cells = set(), set(), set()
    for fx in FIXTURES.values():
        verdict = run_differential(fx, trace=cells)
        assert verdict.passed, str(verdict)
        for row in verdict.report["changes"]:
            fired.add(row["kind"])
            if row["brokenUses"] == 0:
                innocuous.add(row["kind"])
    every = {k.name for k in BcKind}
    assert fired == every, sorted(every - fired)
    assert innocuous == every, sorted(every - innocuous)
    missing = active_cells() - cells
    assert not missing, sorted(f"{u.name}x{b.name}" for u, b in missing)
    assert FIXTURES["catalog-innocuous"].expected["summary"]["brokenLocations"] == 0


def _excluded_refs(fx, rules):
    api = load_api(fx.old, rules)
    refs = set()
    for t in api.types.values():
        if t.excluded:
            refs.add(str(t.ref))
        for members in (t.methods, t.fields, t.constructors):
            refs.update(str(m.ref) for m in members.values() if m.excluded)
    return refs


@pytest.mark.criterion(4, "exclusion contract against an unexcluded twin")
def test_exclusion_contract():
    excluded, twin = FIXTURES["exclusions"], FIXTURES["exclusions-unexcluded"]
    assert excluded.old == twin.old and excluded.new == twin.new
    rules = exclusions_of(excluded.config)
    assert "Experimental" in rules.annotations and "*test*" in rules.packages
    refs = _excluded_refs(excluded, rules)
    assert any("test" in DeclRef.parse(r).owner for r in refs)
    assert len(refs) > 1

    def subjects(fx):
        rules = exclusions_of(fx.config)
        delta = diff(load_api(fx.old, rules), load_api(fx.new, rules))
        return {str(c.declaration) for c in delta.changes}, {str(DeclRef(c.declaration.owner)) for c in delta.changes}

    with_rules, owners = subjects(excluded)
    assert not (with_rules | owners) & refs
    without, _ = subjects(twin)
    assert len(without & refs) >= 1
    assert run_differential(excluded).passed and run_differential(twin).passed


@pytest.mark.criterion(5, "flagship scenario summary, golden and advisory")
def test_flagship(tmp_path):
    code = cli("analyze", FX / "flagship" / "old", FX / "flagship" / "new", FX / "flagship" / "config.json",
               "--out", tmp_path, "--quiet")
    assert code == 1
    data = json.loads((tmp_path / "report.json").read_text())
    assert data == FIXTURES["flagship"].expected
    assert data["summary"] == {"breakingChanges": 4, "brokenLocations": 7, "impactedClients": 2, "totalClients": 6}
    removed = {c["declaration"] for c in data["changes"] if c["kind"] == "TYPE_REMOVED"}
    assert removed == {"spoon.reflect.visitor.ImportScanner", "spoon.reflect.visitor.ImportScannerImpl"}
    assert all(c["deprecated"] for c in data["changes"] if c["kind"] == "TYPE_REMOVED")
    assert sorted(c["name"] for c in data["clients"] if c["broken"]) == ["astor", "dspot"]
    [advisory] = data["advisories"]
    assert advisory["declaration"] == "spoon.compiler.Environment"
    assert advisory["clients"] == ["astor", "sorald"]


@pytest.mark.criterion(6, "byte-identical reports, consistent joins, exact summary line")
def test_report_determinism(tmp_path):
    for name in ("flagship", "catalog", "clean"):
        fx = FX / name
        outs = [tmp_path / name / str(i) for i in range(2)]
        for out in outs:
            cli("analyze", fx / "old", fx / "new", fx / "config.json", "--out", out, "--quiet")
        for file in ("report.md", "report.json"):
            assert (outs[0] / file).read_bytes() == (outs[1] / file).read_bytes(), (name, file)
        data = json.loads((outs[0] / "report.json").read_text())
        s = data["summary"]
        assert s["breakingChanges"] == len(data["changes"])
        assert s["brokenLocations"] == sum(len(c["broken"]) for c in data["clients"])
        assert s["brokenLocations"] == sum(c["brokenUses"] for c in data["changes"])
        assert s["impactedClients"] == sum(1 for c in data["clients"] if c["broken"])
        assert s["totalClients"] == len(data["clients"])
        lines = (outs[0] / "report.md").read_text().splitlines()
        matches = [m for m in map(SUMMARY.match, lines) if m]
        assert len(matches) == 1
        assert tuple(map(int, matches[0].groups())) == (
            s["breakingChanges"], s["brokenLocations"], s["impactedClients"], s["totalClients"])
        assert lines.index(matches[0].group(0)) == 2


@pytest.mark.criterion(7, "13 clients of about 500 lines analyzed in under 15 s")
def test_scaled_performance(tmp_path):
    fx = FX / "perf-13"
    sizes = [sum(len(p.read_text().splitlines()) for p in d.rglob("*.java"))
             for d in sorted((fx / "clients").iterdir())]
    assert len(sizes) == 13 and all(450 <= n <= 650 for n in sizes), sizes
    start = time.perf_counter()
    code = cli("analyze", fx / "old", fx / "new", fx / "config.json", "--out", tmp_path, "--quiet")
    elapsed = time.perf_counter() - start
    assert code == 1
    s = json.loads((tmp_path / "report.json").read_text())["summary"]
    assert (s["breakingChanges"], s["brokenLocations"], s["impactedClients"], s["totalClients"]) == (13, 32, 5, 13)
    assert elapsed < 15, f"took {elapsed:.1f}s"


EXPECTED_EXITS = {
    "clean": {"never": 0, "breaking": 0, "impact": 0},
    "breaking-unimpacted": {"never": 0, "breaking": 1, "impact": 0},
    "flagship": {"never": 0, "breaking": 1, "impact": 1},
}


@pytest.mark.criterion(8, "CI exit codes across failOn policies")
def test_ci_policy(tmp_path, capsys):
    for name, expected in EXPECTED_EXITS.items():
        fx = FX / name
        for policy, code in expected.items():
            got = cli("analyze", fx / "old", fx / "new", fx / "config.json", "--out", tmp_path / name,
                      "--fail-on", policy, "--quiet")
            assert got == code, (name, policy, got)
    bad = tmp_path / "bad.json"
    bad.write_text('{"failOn": "sometimes"}')
    fx = FX / "clean"
    assert cli("analyze", fx / "old", fx / "new", bad, "--out", tmp_path / "x") == 2
    assert cli("analyze", tmp_path / "missing", fx / "new", fx / "config.json", "--out", tmp_path / "x") == 2
    broken = tmp_path / "broken-lib" / "p"
    broken.mkdir(parents=True)
    (broken / "A.java").write_text("package p; public class A { int }")
    for policy in ("never", "breaking", "impact"):
        assert cli("analyze", fx / "old", broken.parent, fx / "config.json", "--out", tmp_path / "x",
                   "--fail-on", policy) == 3
    capsys.readouterr()
    manifest = {m["name"]: m["expectedSummary"] for m in load_manifest()}
    assert manifest["clean"]["breakingChanges"] == 0
    assert manifest["breaking-unimpacted"]["breakingChanges"] > 0
    assert manifest["breaking-unimpacted"]["brokenLocations"] == 0
