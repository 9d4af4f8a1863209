import json
import subprocess
import sys

import pytest

from breakscope.cli import main
from breakscope.corpus import fixtures_root

FX = fixtures_root()


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def analyze(capsys, name, out, *extra):
    fx = FX / name
    return run(capsys, "analyze", fx / "old", fx / "new", fx / "config.json", "--out", out, *extra)


def test_delta_identical_trees(capsys):
    code, out, _ = run(capsys, "delta", FX / "flagship" / "old", FX / "flagship" / "old")
    assert code == 0
    assert "No breaking changes detected." in out


@pytest.mark.parametrize("policy", ["breaking", "impact"])
def test_delta_field_now_final_fails_the_build(capsys, policy):
    fx = FX / "gen-seed0-field-now-final"
    code, out, _ = run(capsys, "delta", fx / "old", fx / "new", "--fail-on", policy)
    assert code == 1
    assert "field now final" in out


def test_delta_json_and_out_dir(capsys, tmp_path):
    fx = FX / "gen-seed0-field-now-final"
    code, out, _ = run(capsys, "delta", fx / "old", fx / "new", "--format", "json", "--out", tmp_path,
                       "--fail-on", "never")
    assert code == 0
    data = json.loads(out)
    assert [c["kind"] for c in data["changes"]] == ["FIELD_NOW_FINAL"]
    assert data["clients"] == []
    assert json.loads((tmp_path / "report.json").read_text()) == data
    assert (tmp_path / "report.md").exists()


def test_malformed_library_source(capsys, tree):
    old = tree("old", {"p/A.java": "package p; public class A { }"})
    new = tree("new", {"p/A.java": "package p; public class A { int }"})
    code, out, err = run(capsys, "delta", old, new)
    assert code == 3 and out == ""
    assert "A.java:1" in err


@pytest.mark.parametrize("files", [
    {"x/A.java": "package p; class A {}", "y/A.java": "package p; class A {}"},
    {"p/A.java": "package p; class A extends B {}", "p/B.java": "package p; class B extends A {}"},
])
def test_model_errors_exit_3(capsys, tree, files):
    lib = tree("lib", files)
    assert run(capsys, "delta", lib, lib)[0] == 3


def test_analyze_flagship(capsys, tmp_path):
    code, out, _ = analyze(capsys, "flagship", tmp_path)
    assert code == 1
    data = json.loads((tmp_path / "report.json").read_text())
    assert data["summary"] == {"breakingChanges": 4, "brokenLocations": 7, "impactedClients": 2, "totalClients": 6}
    assert out.rstrip("\n") == (tmp_path / "report.md").read_text().rstrip("\n")


def test_analyze_clean_fixture(capsys, tmp_path):
    code, out, _ = analyze(capsys, "clean", tmp_path)
    assert code == 0
    assert "No breaking changes detected." in out
    assert json.loads((tmp_path / "report.json").read_text())["summary"]["breakingChanges"] == 0


def test_analyze_perf_corpus_summary(capsys, tmp_path):
    code, _, _ = analyze(capsys, "perf-13", tmp_path, "--quiet")
    assert code == 1
    s = json.loads((tmp_path / "report.json").read_text())["summary"]
    assert (s["breakingChanges"], s["brokenLocations"], s["impactedClients"], s["totalClients"]) == (13, 32, 5, 13)


@pytest.mark.parametrize("name", ["clean", "breaking-unimpacted", "flagship", "catalog"])
def test_fail_on_never_never_fails(capsys, tmp_path, name):
    assert analyze(capsys, name, tmp_path, "--fail-on", "never", "--quiet")[0] == 0


def test_reruns_are_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    analyze(capsys, "flagship", a)
    analyze(capsys, "flagship", b)
    for name in ("report.md", "report.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_summary_equals_rejoined_arrays(capsys, tmp_path):
    analyze(capsys, "catalog", tmp_path, "--quiet")
    data = json.loads((tmp_path / "report.json").read_text())
    s = data["summary"]
    assert s["breakingChanges"] == len(data["changes"])
    assert s["brokenLocations"] == sum(len(c["broken"]) for c in data["clients"]) == \
        sum(c["brokenUses"] for c in data["changes"])
    assert s["impactedClients"] == sum(1 for c in data["clients"] if c["broken"])
    assert s["totalClients"] == len(data["clients"])


def test_zero_clients_uses_breaking_semantics(capsys, tmp_path):
    config = tmp_path / "empty.json"
    config.write_text('{"clients": []}')
    fx = FX / "breaking-unimpacted"
    code, _, _ = run(capsys, "analyze", fx / "old", fx / "new", config, "--out", tmp_path / "o", "--quiet")
    assert code == 1
    fx = FX / "clean"
    assert run(capsys, "analyze", fx / "old", fx / "new", config, "--out", tmp_path / "p", "--quiet")[0] == 0


def test_breaking_but_unimpacted(capsys, tmp_path):
    assert analyze(capsys, "breaking-unimpacted", tmp_path, "--quiet")[0] == 0
    assert analyze(capsys, "breaking-unimpacted", tmp_path, "--quiet", "--fail-on", "breaking")[0] == 1


def test_unparsable_and_stale_clients_are_reported_not_fatal(capsys, tree, tmp_path):
    lib = {"lib/A.java": "package lib; public class A { public void m() {} }"}
    old, new = tree("old", lib), tree("new", lib)
    tree("broken", {"c/C.java": "package c; class C { void g( }"})
    tree("stale", {"c/D.java": "package c;\nimport lib.Gone;\nclass D { }"})
    tree("fine", {"c/E.java": "package c; class E { void g(lib.A a) { a.m(); } }"})
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"clients": [{"name": n, "path": n} for n in ("broken", "stale", "fine")]}))
    code, out, err = run(capsys, "analyze", old, new, config, "--out", tmp_path / "out")
    assert code == 0
    data = json.loads((tmp_path / "out" / "report.json").read_text())
    assert {c["name"]: c["status"] for c in data["clients"]} == {"broken": "error", "stale": "stale", "fine": "ok"}
    assert "### Clients not analyzed" in out
    assert "broken (error)" in err and "stale (stale)" in err


def test_check_conforming_client(capsys):
    fx = FX / "flagship"
    assert run(capsys, "check", fx / "old", fx / "clients" / "astor") == (0, "", "")


def test_check_removed_import(capsys, tree):
    lib = tree("lib", {"lib/Keep.java": "package lib; public class Keep { }"})
    client = tree("client", {"c/C.java": "package c;\nimport lib.Gone;\nclass C { }"})
    code, out, _ = run(capsys, "check", lib, client)
    assert code == 1
    [line] = out.splitlines()
    assert line.startswith("c/C.java:2:1 MISSING_SYMBOL ")


def test_check_parse_error(capsys, tree):
    lib = tree("lib", {"lib/Keep.java": "package lib; public class Keep { }"})
    client = tree("client", {"c/C.java": "package c class C { }"})
    assert run(capsys, "check", lib, client)[0] == 3


@pytest.mark.parametrize("command", ["delta", "check"])
def test_missing_directory(capsys, tmp_path, command):
    code, out, err = run(capsys, command, tmp_path / "nope", FX / "clean" / "old")
    assert code == 2 and out == "" and "not a directory" in err


def test_analyze_missing_client_directory(capsys, tmp_path):
    config = tmp_path / "c.json"
    config.write_text('{"clients": [{"name": "x", "path": "gone"}]}')
    fx = FX / "clean"
    assert run(capsys, "analyze", fx / "old", fx / "new", config, "--out", tmp_path)[0] == 2


def test_invalid_config(capsys, tmp_path):
    config = tmp_path / "c.json"
    config.write_text('{"clients": [], "failOn": "sometimes"}')
    fx = FX / "clean"
    code, _, err = run(capsys, "analyze", fx / "old", fx / "new", config, "--out", tmp_path)
    assert code == 2 and "failOn" in err


def test_argument_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["delta"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["delta", "a", "b", "--fail-on", "sometimes"])
    assert info.value.code == 2


def test_quiet_suppresses_the_result_stream(capsys, tmp_path):
    code, out, _ = analyze(capsys, "flagship", tmp_path, "--quiet")
    assert code == 1 and out == ""


def test_module_entry_point(tmp_path):
    fx = FX / "clean"
    proc = subprocess.run([sys.executable, "-m", "breakscope", "delta", str(fx / "old"), str(fx / "new"),
                           "--format", "json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"]["breakingChanges"] == 0
