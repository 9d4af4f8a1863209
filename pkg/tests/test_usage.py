import random

from breakscope.syntax import parse_source
from breakscope.usage import ClientEnv, UseKind, extract_uses, infer_expr_type
from conftest import build_api, parse_files

LIB = {
    "lib/A.java": """
        package lib;
        public class A {
            public static final int CONST = 1;
            public int f;
            public B b;
            public A() {}
            public A(int x) {}
            public B m() { return null; }
            public void take(int x) {}
            public void take(String s) {}
            public static A make() { return null; }
        }
    """,
    "lib/B.java": "package lib; public class B { public int f; public void run() {} }",
    "lib/Base.java": "package lib; public abstract class Base { public void m() {} public abstract int size(); }",
    "lib/Face.java": "package lib; public interface Face { void go(); }",
}


def uses(client_files, lib=LIB):
    model = extract_uses(parse_files(client_files), build_api(lib), "c")
    return model, [(u.location.line, u.kind.name, str(u.target), u.detail) for u in model.uses]


def client(body, imports="import lib.A;\n"):
    return {"c/C.java": f"package c;\n{imports}public class C {{\n{body}\n}}\n"}


def test_direct_import_and_type_reference():
    model, got = uses(client("    A x;"))
    assert got == [(2, "IMPORT", "lib.A", ""), (4, "TYPE_REFERENCE", "lib.A", "")]
    assert model.resolution_errors == ()


def test_qualified_static_field_via_type_prefix():
    _, got = uses(client("    int v = lib.A.CONST;", imports=""))
    assert (3, "FIELD_READ", "lib.A::CONST", "static") in got


def test_unresolved_simple_name_is_a_diagnostic():
    model, got = uses(client("    Missing x;", imports=""))
    assert got == []
    assert [d.code for d in model.resolution_errors] == ["UNRESOLVED_NAME"]


def test_chained_call_typing():
    api = build_api(LIB)
    units = parse_files(client("    void g() { new lib.A().m().run(); }", imports=""))
    model = extract_uses(units, api)
    invs = [str(u.target) for u in model.uses if u.kind is UseKind.METHOD_INVOCATION]
    assert invs == ["lib.A::m()", "lib.B::run()"]
    call = parse_source("package c; class D { void g() { new lib.A().m(); } }", "D.java")
    expr = call.types[0].members[0].body.stmts[0].expr
    env = ClientEnv(units, api)
    assert infer_expr_type(expr, env, units[0], "c.C")[0] == "lib.B"


def test_cast_then_field_read():
    _, got = uses(client("    void g(Object x) { int v = ((lib.B) x).f; }", imports=""))
    assert (3, "CAST", "lib.B", "explicit") in got
    assert (3, "FIELD_READ", "lib.B::f", "instance") in got


def test_string_builtin_has_no_members():
    model, got = uses(client('    void g() { "s".length(); }', imports=""))
    assert got == []
    assert model.resolution_errors


def test_import_of_removed_spoon_type_is_recorded():
    lib = {"spoon/imports/ImportScanner.java": "package spoon.imports; public interface ImportScanner { }"}
    _, got = uses({"c/C.java": "package c;\nimport spoon.imports.ImportScanner;\nclass C { }"}, lib)
    assert got == [(2, "IMPORT", "spoon.imports.ImportScanner", "")]


def test_extends_with_marked_override():
    src = {"c/C.java": "package c;\nclass C extends lib.Base {\n  @Override public void m() {}\n"
                       "  public int size() { return 0; }\n}"}
    _, got = uses(src)
    assert (2, "EXTENDS", "lib.Base", "") in got
    assert any(g[:3] == (3, "METHOD_OVERRIDE", "lib.Base::m()") for g in got)


def test_client_without_library_references():
    model, got = uses({"c/C.java": "package c; class C { int x; C other; void g() { this.x = 1; } }"})
    assert got == [] and model.resolution_errors == ()


def test_one_import_use_per_import():
    _, got = uses(client("    A x;\n    A y;\n    A z() { return null; }"))
    assert [g for g in got if g[1] == "IMPORT"] == [(2, "IMPORT", "lib.A", "")]
    assert len([g for g in got if g[1] == "TYPE_REFERENCE"]) == 3


def test_instantiation_records_type_and_constructor():
    _, got = uses(client("    void g() { new A(3); }"))
    assert [g for g in got if g[1] == "INSTANTIATION"] == [
        (4, "INSTANTIATION", "lib.A", ""), (4, "INSTANTIATION", "lib.A::<init>(int)", "constructor")]


def test_static_versus_instance_invocation():
    _, got = uses(client("    void g(A a) { A.make(); a.m(); }"))
    inv = [(g[2], g[3]) for g in got if g[1] == "METHOD_INVOCATION"]
    assert inv == [("lib.A::make()", "static"), ("lib.A::m()", "instance")]


def test_overload_selection_by_argument_type():
    _, got = uses(client('    void g(A a) { a.take(1); a.take("s"); }'))
    assert [g[2] for g in got if g[1] == "METHOD_INVOCATION"] == ["lib.A::take(int)", "lib.A::take(String)"]


def test_null_argument_picks_the_reference_overload():
    model, got = uses(client("    void g(A a) { a.take(null); }"))
    assert model.resolution_errors == ()
    assert [g[2] for g in got if g[1] == "METHOD_INVOCATION"] == ["lib.A::take(String)"]


def test_ambiguous_call_is_a_diagnostic():
    lib = dict(LIB, **{"lib/O.java": "package lib; public class O { public void p(A a) {} public void p(B b) {} }"})
    model, got = uses(client("    void g(lib.O o) { o.p(null); }", imports=""), lib)
    assert [d.code for d in model.resolution_errors] == ["AMBIGUOUS_CALL"]
    assert [g for g in got if g[1] == "METHOD_INVOCATION"] == []


def test_field_write_versus_read():
    _, got = uses(client("    void g(A a) { a.f = a.f; a.b.f = 2; }"))
    rw = [(g[1], g[2]) for g in got if g[1] in ("FIELD_READ", "FIELD_WRITE")]
    assert ("FIELD_WRITE", "lib.A::f") in rw and ("FIELD_READ", "lib.A::f") in rw
    assert ("FIELD_READ", "lib.A::b") in rw and ("FIELD_WRITE", "lib.B::f") in rw


def test_implements_clause():
    _, got = uses({"c/C.java": "package c;\nimport lib.Face;\nclass C implements Face {\n  public void go() {}\n}"})
    assert (3, "IMPLEMENTS", "lib.Face", "") in got


def test_uses_target_the_library_only_and_are_sorted():
    files = {"c/C.java": "package c;\nimport lib.A;\npublic class C { public A a; public C self; }",
             "c/D.java": "package c;\npublic class D extends C { void g() { this.a.m(); this.self.a.f = 1; } }"}
    model, _ = uses(files)
    api = build_api(LIB)
    assert model.uses
    for u in model.uses:
        assert u.target.owner in api
    keys = [(u.location.file, u.location.line, u.location.column) for u in model.uses]
    assert keys == sorted(keys)


def test_extraction_ignores_file_order():
    files = {f"c/K{i}.java": f"package c;\nimport lib.A;\nclass K{i} {{ A a; void g() {{ this.a.m(); A.make(); }} }}"
             for i in range(6)}
    api = build_api(LIB)
    units = parse_files(files)
    base = extract_uses(units, api, "c")
    for seed in range(4):
        shuffled = list(units)
        random.Random(seed).shuffle(shuffled)
        assert extract_uses(shuffled, api, "c") == base


def test_type_argument_kind_is_never_produced():
    _, got = uses(client("    A[] xs;\n    void g(A[] ys) { }"))
    assert all(g[1] != "TYPE_ARGUMENT" for g in got)
    assert [g[1] for g in got].count("TYPE_REFERENCE") == 2
