import pytest

from breakscope.diagnostics import CODES, Diagnostic
from breakscope.oracle import PreconditionViolation, broken_by_oracle, check_client
from breakscope.syntax import SourceLocation
from conftest import build_api, parse_files

LIB = {
    "lib/Base.java": """
        package lib;
        public abstract class Base {
            protected int hidden;
            int packaged;
            public final void locked() {}
            public abstract int size();
            public void open() {}
        }
    """,
    "lib/Sealed.java": "package lib; public final class Sealed { public Sealed() {} }",
    "lib/Box.java": """
        package lib;
        public class Box {
            public static int COUNT;
            public final int id = 0;
            public int v;
            public Box() {}
            public static Box of(int v) { return null; }
            public void put(String s) {}
        }
    """,
}


def codes(client, lib=LIB):
    return [(d.location.line, d.code) for d in check_client(parse_files(client), build_api(lib))]


def test_missing_import_is_missing_symbol():
    assert codes({"c/C.java": "package c;\nimport lib.Gone;\nclass C {}"}) == [(2, "MISSING_SYMBOL")]


def test_conforming_client_is_clean():
    client = {"c/C.java": """package c;
import lib.Box;
public class C extends lib.Base {
    public int size() { return this.hidden; }
    @Override public void open() { }
    void g() {
        Box b = Box.of(1);
        b.v = Box.COUNT;
        b.put("x");
        int i = b.id;
        Object o = (Object) b;
    }
}
"""}
    assert codes(client) == []


def test_concrete_subclass_missing_abstract_method():
    assert codes({"c/C.java": "package c;\n\npublic class C extends lib.Base { }"}) == [(3, "ABSTRACT_NOT_IMPLEMENTED")]


@pytest.mark.parametrize("body, code", [
    ("void g() { new lib.Sealed(); lib.Box.of(1).id = 3; }", "ASSIGN_TO_FINAL"),
    ("void g(lib.Box b) { b.of(1); }", "STATIC_MISMATCH"),
    ("void g(lib.Box b) { lib.Box.put(\"s\"); }", "STATIC_MISMATCH"),
    ("void g(lib.Box b) { b.put(1); }", "TYPE_MISMATCH"),
    ("void g(lib.Box b) { int x = b.v; String s = b.v; }", "TYPE_MISMATCH"),
    ("void g() { new lib.Base(); }", "CANNOT_INSTANTIATE_ABSTRACT"),
    ("void g(lib.Box b) { b.nothing(); }", "MISSING_SYMBOL"),
    ("void g(lib.Base b) { int x = b.packaged; }", "ACCESS_VIOLATION"),
    ("void g(lib.Base b) { int x = b.hidden; }", "ACCESS_VIOLATION"),
    ("void g() { Nope n; }", "UNRESOLVED_NAME"),
])
def test_single_violation(body, code):
    got = codes({"c/C.java": f"package c;\nclass C {{\n  {body}\n}}"})
    assert got == [(3, code)]


def test_extending_a_final_class():
    assert codes({"c/C.java": "package c;\nclass C extends lib.Sealed { }"}) == [(2, "CANNOT_EXTEND_FINAL")]


def test_overriding_a_final_method():
    client = {"c/C.java": "package c;\nclass C extends lib.Base {\n  public int size() { return 0; }\n"
                          "  public void locked() {}\n}"}
    assert codes(client) == [(4, "CANNOT_OVERRIDE_FINAL")]


def test_override_marker_must_match_inherited_method():
    client = {"c/C.java": "package c;\nclass C extends lib.Base {\n  public int size() { return 0; }\n"
                          "  @Override public void close() {}\n}"}
    assert codes(client) == [(4, "MISSING_SYMBOL")]


def test_unresolved_type_silences_the_rest_of_the_statement():
    client = {"c/C.java": "package c;\nclass C {\n  void g() { int x = new Nope().a().b; }\n}"}
    assert codes(client) == [(3, "UNRESOLVED_NAME")]


def test_no_primitive_widening():
    lib = {"lib/W.java": "package lib; public class W { public void take(long x) {} }"}
    assert codes({"c/C.java": "package c;\nclass C {\n  void g(lib.W w) { w.take(1); }\n}"}, lib) == \
        [(3, "TYPE_MISMATCH")]


def test_diagnostics_are_sorted_and_deterministic():
    client = {"c/B.java": "package c;\nimport lib.Gone;\nclass B { }",
              "c/A.java": "package c;\nclass A {\n  void g(lib.Box b) { b.x(); b.y(); }\n}"}
    first = check_client(parse_files(client), build_api(LIB))
    assert first == sorted(first)
    assert first == check_client(parse_files(client), build_api(LIB))
    assert [d.location.file for d in first] == ["c/A.java", "c/A.java", "c/B.java"]


def test_diagnostic_format_and_closed_codes():
    d = Diagnostic(SourceLocation("c/A.java", 3, 7), "MISSING_SYMBOL", "cannot find symbol lib.Gone")
    assert str(d) == "c/A.java:3:7 MISSING_SYMBOL cannot find symbol lib.Gone"
    assert "TYPE_UNKNOWN" in CODES and len(CODES) == 12
    with pytest.raises(ValueError):
        Diagnostic(SourceLocation("a", 1, 1), "SOMETHING_ELSE")


def test_broken_by_oracle_identity():
    units = parse_files({"c/C.java": "package c; class C { lib.Box b; }"})
    api = build_api(LIB)
    assert broken_by_oracle(units, api, api) == set()


def test_scanner_removal_lists_import_and_use_lines():
    old = {"spoon/imports/ImportScanner.java": "package spoon.imports; public interface ImportScanner { void scan(); }",
           "spoon/Env.java": "package spoon; public class Env { }"}
    new = {"spoon/Env.java": "package spoon; public class Env { }"}
    client = {"astor/Fix.java": "package astor;\nimport spoon.imports.ImportScanner;\nclass Fix {\n"
                                "  ImportScanner s;\n  void run() { this.s.scan(); }\n  void idle() { }\n}"}
    got = broken_by_oracle(parse_files(client), build_api(old), build_api(new))
    # line 5 reaches the scanner through an error-typed field and stays silent
    assert got == {("astor/Fix.java", 2), ("astor/Fix.java", 4)}


def test_field_now_final_flags_only_the_write():
    old = {"lib/A.java": "package lib; public class A { public int f; }"}
    new = {"lib/A.java": "package lib; public class A { public final int f = 1; }"}
    client = {"c/C.java": "package c;\nclass C {\n  void g(lib.A a) {\n    int r = a.f;\n    a.f = 1;\n  }\n}"}
    assert broken_by_oracle(parse_files(client), build_api(old), build_api(new)) == {("c/C.java", 5)}


def test_nonconforming_client_violates_precondition():
    units = parse_files({"c/C.java": "package c;\nimport lib.Gone;\nclass C {}"})
    with pytest.raises(PreconditionViolation) as info:
        broken_by_oracle(units, build_api(LIB), build_api(LIB))
    assert [d.code for d in info.value.diagnostics] == ["MISSING_SYMBOL"]
