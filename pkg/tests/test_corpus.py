import hashlib

import pytest

from breakscope.corpus import (
    Fixture, GenerationRetryExhausted, Profile, committed_fixtures, generate_pair, load_manifest, run_differential,
)
from breakscope.delta import BcKind, diff
from breakscope.impact import DEFAULT_MATRIX, MatchRule, MatcherCell
from breakscope.oracle import check_client
from breakscope.pipeline import load_api
from breakscope.syntax import parse_tree
from breakscope.usage import UseKind
from conftest import sweep

FIELD_NOW_FINAL = Profile(kinds=frozenset({BcKind.FIELD_NOW_FINAL}))
FIXTURES = {f.name: f for f in committed_fixtures()}


def test_seed_zero_field_now_final_is_frozen():
    pair = generate_pair(0, FIELD_NOW_FINAL)
    frozen = FIXTURES["gen-seed0-field-now-final"]
    assert pair.source_bytes() == frozen.source_bytes()
    changed = [p for p in pair.old if pair.old[p] != pair.new[p]]
    assert len(changed) == 1 and set(pair.old) == set(pair.new)
    before, after = pair.old[changed[0]].splitlines(), pair.new[changed[0]].splitlines()
    diffs = [(a, b) for a, b in zip(before, after) if a != b]
    assert diffs == [("    public boolean f7;", "    public final boolean f7;")]
    assert len(pair.clients) == 1
    verdict = run_differential(pair)
    assert verdict.passed
    [section] = verdict.report["clients"]
    assert [(b["useKind"], b["line"]) for b in section["broken"]] == [("FIELD_WRITE", 14)]


def test_same_seed_same_bytes():
    for seed in (0, 7, 123):
        a, b = generate_pair(seed), generate_pair(seed)
        assert a.source_bytes() == b.source_bytes()
        assert hashlib.sha256(a.source_bytes()).hexdigest() == hashlib.sha256(b.source_bytes()).hexdigest()


def test_different_seeds_differ():
    assert generate_pair(1).source_bytes() != generate_pair(2).source_bytes()


def test_empty_kind_profile_is_identity():
    pair = generate_pair(5, Profile(kinds=frozenset()))
    assert pair.new == pair.old and pair.kinds == ()
    assert diff(load_api(pair.old), load_api(pair.new)).changes == ()
    verdict = run_differential(pair)
    assert verdict.passed and verdict.report["summary"]["brokenLocations"] == 0


def test_retry_exhaustion():
    with pytest.raises(GenerationRetryExhausted):
        generate_pair(0, Profile(kinds=frozenset({BcKind.FIELD_NOW_FINAL}), attempts=0))


def test_generated_clients_conform_to_old_library():
    for seed in range(20):
        pair = generate_pair(seed)
        api = load_api(pair.old)
        for files in pair.clients.values():
            assert check_client(parse_tree(None, files), api) == []


def test_generated_kinds_fire():
    for seed in range(20):
        pair = generate_pair(seed)
        fired = {c.kind.name for c in diff(load_api(pair.old), load_api(pair.new)).changes}
        assert set(pair.kinds) == fired and fired


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_committed_fixture_passes(name):
    verdict = run_differential(FIXTURES[name])
    assert verdict.passed, str(verdict)
    assert verdict.golden_matches is True


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_committed_clients_conform(name):
    fx = FIXTURES[name]
    api = load_api(fx.old)
    for files in fx.clients.values():
        assert check_client(parse_tree(None, files), api) == []


def test_manifest_matches_fixtures():
    manifest = load_manifest()
    assert [m["name"] for m in manifest] == sorted(FIXTURES)
    for entry in manifest:
        fx = FIXTURES[entry["name"]]
        fired = sorted({c.kind.name for c in diff(load_api(fx.old), load_api(fx.new)).changes})
        assert entry["kinds"] == list(fx.kinds)
        # the clean fixture is the one pair with nothing to report
        if entry["name"] != "clean":
            assert entry["kinds"] and set(entry["kinds"]) <= set(fired)
        assert entry["clients"] == sorted(fx.clients)
        assert entry["expectedSummary"] == fx.expected["summary"]


def test_flagship_impacts_two_clients_through_imports_and_references():
    verdict = run_differential(FIXTURES["flagship"])
    assert verdict.passed
    impacted = [c for c in verdict.report["clients"] if c["broken"]]
    assert [c["name"] for c in impacted] == ["astor", "dspot"]
    kinds = {b["useKind"] for c in impacted for b in c["broken"]}
    assert kinds <= {"IMPORT", "TYPE_REFERENCE", "IMPLEMENTS", "METHOD_INVOCATION", "INSTANTIATION"}
    assert "IMPORT" in kinds and "TYPE_REFERENCE" in kinds


def test_innocuous_removal_fixture():
    verdict = run_differential(FIXTURES["breaking-unimpacted"])
    assert verdict.passed
    s = verdict.report["summary"]
    assert s["breakingChanges"] > 0 and s["brokenLocations"] == 0


def test_corrupted_matcher_row_is_detected():
    matrix = dict(DEFAULT_MATRIX)
    matrix[(UseKind.IMPORT, BcKind.TYPE_REMOVED)] = MatcherCell(MatchRule.NEVER)
    fx = FIXTURES["flagship"]
    verdict = run_differential(Fixture(fx.name, fx.old, fx.new, fx.clients, fx.kinds, fx.config), matrix=matrix)
    assert not verdict.passed
    assert verdict.differences
    assert all(not mine and theirs for mine, theirs in verdict.differences.values())
    assert "FAIL flagship" in str(verdict)


def test_overeager_matcher_row_is_detected():
    matrix = dict(DEFAULT_MATRIX)
    matrix[(UseKind.FIELD_READ, BcKind.FIELD_NOW_FINAL)] = MatcherCell(MatchRule.ALWAYS)
    verdict = run_differential(FIXTURES["gen-seed0-field-now-final"], matrix=matrix)
    assert not verdict.passed
    [(mine, theirs)] = verdict.differences.values()
    assert mine and not theirs


def test_golden_mismatch_fails():
    fx = FIXTURES["flagship"]
    tampered = dict(fx.expected, newVersion="other")
    verdict = run_differential(Fixture(fx.name, fx.old, fx.new, fx.clients, fx.kinds, fx.config, tampered))
    assert not verdict.passed and verdict.golden_matches is False and not verdict.differences


def test_fixture_write_load_round_trip(tmp_path):
    fx = FIXTURES["flagship"]
    again = Fixture.load(fx.write(tmp_path / "flagship"))
    assert again.source_bytes() == fx.source_bytes()
    assert (again.config, again.kinds, again.expected) == (fx.config, fx.kinds, fx.expected)


def test_large_profile_seeds_agree_with_oracle():
    big = Profile(clients=(2, 3), classes=(2, 3), statements=(6, 12))
    failures = sweep(range(1000, 1040), big)
    assert not failures, "\n".join(map(str, failures))
