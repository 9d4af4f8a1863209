from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from breakscope.corpus import Profile, generate_pair
from breakscope.delta import BcKind, Delta, diff
from breakscope.impact import MatchRule, active_cells, compute_impact, matcher_rule
from breakscope.oracle import broken_by_oracle
from breakscope.pipeline import load_api
from breakscope.syntax import parse_source
from breakscope.usage import UseKind, extract_uses
from conftest import build_api, parse_files


def run(old_lib, new_lib, client_files):
    old, new = build_api(old_lib, "old"), build_api(new_lib, "new")
    units = parse_files(client_files)
    usage = extract_uses(units, old, "c")
    delta = diff(old, new)
    impact = compute_impact(delta, usage, old, new, units)
    return impact, broken_by_oracle(units, old, new), delta


SCANNER = {"spoon/imports/ImportScanner.java": "package spoon.imports; public interface ImportScanner { void scan(); }",
           "spoon/imports/MinimalImportScanner.java":
               "package spoon.imports; public class MinimalImportScanner { }",
           "spoon/Env.java": "package spoon; public class Env { }"}
SCANNER_NEW = {"spoon/Env.java": "package spoon; public class Env { }"}
SCANNER_CLIENT = {"astor/Fix.java": """package astor;
import spoon.imports.ImportScanner;
public class Fix {
    ImportScanner scanner;
    void run(ImportScanner s) { s.scan(); }
}
"""}


def test_import_of_removed_type_breaks():
    impact, oracle, _ = run(SCANNER, SCANNER_NEW, SCANNER_CLIENT)
    rows = [(b.use.location.line, b.use.kind.name, b.cause.kind.name, b.explanation) for b in impact.broken_locations]
    assert (2, "IMPORT", "TYPE_REMOVED", "X-T1-IMP") in rows
    # import line plus each use line
    assert impact.locations == oracle == {("astor/Fix.java", 2), ("astor/Fix.java", 4), ("astor/Fix.java", 5)}


def test_unused_removal_is_innocuous():
    impact, _, delta = run(SCANNER, SCANNER_NEW, SCANNER_CLIENT)
    assert "spoon.imports.MinimalImportScanner" in [str(c.declaration) for c in delta.changes]
    assert all(str(b.cause.declaration) != "spoon.imports.MinimalImportScanner" for b in impact.broken_locations)


def test_field_now_final_breaks_writes_only():
    old = {"lib/A.java": "package lib; public class A { public int f; }"}
    new = {"lib/A.java": "package lib; public class A { public final int f = 0; }"}
    client = {"c/C.java": "package c;\nclass C {\n  void g(lib.A a) {\n    int x = a.f;\n    a.f = 2;\n  }\n}"}
    impact, oracle, _ = run(old, new, client)
    assert [(b.use.kind.name, b.use.location.line) for b in impact.broken_locations] == [("FIELD_WRITE", 5)]
    assert oracle == {("c/C.java", 5)}


def test_empty_delta_gives_empty_impact():
    lib = {"lib/A.java": "package lib; public class A { public int f; }"}
    impact, oracle, delta = run(lib, lib, {"c/C.java": "package c; class C { int g(lib.A a) { return a.f; } }"})
    assert delta.changes == () and impact.broken_locations == () and oracle == set()
    assert impact.analyzed_uses > 0


@pytest.mark.parametrize("body, broken", [
    ("", True),
    ("public void m() {}", False),
])
def test_abstract_method_added_to_extended_type(body, broken):
    old = {"lib/Base.java": "package lib; public abstract class Base { }"}
    new = {"lib/Base.java": "package lib; public abstract class Base { public abstract void m(); }"}
    client = {"c/C.java": f"package c;\npublic class C extends lib.Base {{\n  {body}\n}}"}
    impact, oracle, _ = run(old, new, client)
    expected = {("c/C.java", 2)} if broken else set()
    assert impact.locations == oracle == expected


def test_abstract_client_is_not_broken_by_new_abstract_method():
    old = {"lib/Base.java": "package lib; public abstract class Base { }"}
    new = {"lib/Base.java": "package lib; public abstract class Base { public abstract void m(); }"}
    impact, oracle, _ = run(old, new, {"c/C.java": "package c; public abstract class C extends lib.Base { }"})
    assert impact.locations == oracle == set()


def test_matcher_rule_examples():
    assert matcher_rule(UseKind.METHOD_INVOCATION, BcKind.METHOD_REMOVED).rule is MatchRule.ALWAYS
    assert matcher_rule(UseKind.METHOD_OVERRIDE, BcKind.METHOD_NOW_FINAL).rule is MatchRule.ALWAYS
    assert matcher_rule(UseKind.FIELD_READ, BcKind.FIELD_NOW_FINAL).rule is MatchRule.NEVER
    cell = matcher_rule(UseKind.FIELD_WRITE, BcKind.FIELD_TYPE_CHANGED)
    assert cell.rule is MatchRule.CONTEXT and str(cell) == "CONTEXT(F6-WRITE)"


def test_matcher_rule_is_total():
    for uk in UseKind:
        for bk in BcKind:
            assert matcher_rule(uk, bk).rule in MatchRule
    assert all(uk is not UseKind.TYPE_ARGUMENT for uk, _ in active_cells())
    assert len(active_cells()) == 54


@pytest.mark.parametrize("use, kind", [
    (UseKind.TYPE_REFERENCE, BcKind.TYPE_KIND_CHANGED),
    (UseKind.CAST, BcKind.TYPE_KIND_CHANGED),
    (UseKind.IMPORT, BcKind.TYPE_KIND_CHANGED),
    (UseKind.EXTENDS, BcKind.SUPERTYPE_REMOVED),
])
def test_never_cells(use, kind):
    assert matcher_rule(use, kind).rule is MatchRule.NEVER


def test_parameter_change_breaks_only_incompatible_calls():
    old = {"lib/A.java": "package lib; public class A { public void m(lib.B b) {} }",
           "lib/B.java": "package lib; public class B { }", "lib/S.java": "package lib; public class S extends B { }"}
    new = dict(old, **{"lib/A.java": "package lib; public class A { public void m(lib.S b) {} }"})
    client = {"c/C.java": "package c;\nclass C {\n  void g(lib.A a, lib.B b, lib.S s) {\n"
                          "    a.m(b);\n    a.m(s);\n    a.m(null);\n  }\n}"}
    impact, oracle, _ = run(old, new, client)
    assert impact.locations == oracle == {("c/C.java", 4)}


def test_return_type_change_breaks_consumed_results_only():
    old = {"lib/A.java": "package lib; public class A { public int n() { return 0; } }"}
    new = {"lib/A.java": "package lib; public class A { public long n() { return 0; } }"}
    client = {"c/C.java": "package c;\nclass C {\n  void g(lib.A a) {\n    a.n();\n    int x = a.n();\n  }\n}"}
    impact, oracle, _ = run(old, new, client)
    assert impact.locations == oracle == {("c/C.java", 5)}


def test_supertype_removed_breaks_upcast():
    old = {"lib/P.java": "package lib; public class P { }",
           "lib/K.java": "package lib; public class K extends P { }"}
    new = dict(old, **{"lib/K.java": "package lib; public class K { }"})
    client = {"c/C.java": "package c;\nclass C {\n  void g(lib.K k) {\n    Object o = (lib.P) k;\n"
                          "    lib.K j = (lib.K) o;\n  }\n}"}
    impact, oracle, _ = run(old, new, client)
    assert impact.locations == oracle == {("c/C.java", 4)}
    [b] = impact.broken_locations
    assert b.cause.kind is BcKind.SUPERTYPE_REMOVED and b.use.kind is UseKind.CAST


def test_causes_come_from_the_delta_and_are_unique():
    impact, _, delta = run(SCANNER, SCANNER_NEW, SCANNER_CLIENT)
    assert {b.cause for b in impact.broken_locations} <= set(delta.changes)
    keys = [(b.use.location, b.cause.sort_key) for b in impact.broken_locations]
    assert len(keys) == len(set(keys))
    assert [b.sort_key for b in impact.broken_locations] == sorted(b.sort_key for b in impact.broken_locations)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 5000), st.randoms(use_true_random=False))
def test_dropping_uses_never_adds_breakage(seed, rnd):
    pair = generate_pair(seed, Profile(clients=(1, 1)))
    old, new = load_api(pair.old, label="old"), load_api(pair.new, label="new")
    delta = diff(old, new)
    name, files = next(iter(sorted(pair.clients.items())))
    units = [parse_source(text, path) for path, text in sorted(files.items())]
    usage = extract_uses(units, old, name)
    full = compute_impact(delta, usage, old, new, units)
    kept = tuple(u for u in usage.uses if rnd.random() < 0.5)
    part = compute_impact(delta, replace(usage, uses=kept), old, new, units)
    full_keys = {(b.use.location, b.cause.sort_key) for b in full.broken_locations}
    assert {(b.use.location, b.cause.sort_key) for b in part.broken_locations} <= full_keys
    assert {b.cause for b in full.broken_locations} <= set(delta.changes)
    assert compute_impact(Delta("old", "new", ()), usage, old, new, units).broken_locations == ()
