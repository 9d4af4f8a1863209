import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from breakscope.apimodel import ExclusionRules, is_exported, lookup
from breakscope.corpus import Profile, generate_pair
from breakscope.delta import BcKind, diff
from breakscope.pipeline import load_api
from conftest import build_api


def changes(old_files, new_files, rules=None):
    delta = diff(build_api(old_files, "old", rules), build_api(new_files, "new", rules))
    return [(str(c.declaration), c.kind.name) for c in delta.changes]


def one(src):
    return {"p/A.java": src}


def test_catalog_is_closed_and_flagged():
    assert len(BcKind) == 23
    for kind in BcKind:
        assert kind.binary or kind.source
    assert not BcKind.CONSTRUCTOR_REMOVED.binary and BcKind.CONSTRUCTOR_REMOVED.source
    assert BcKind.METHOD_NOW_FINAL.prose == "method now final"
    assert len({k.rule for k in BcKind}) == 23


def test_removed_deprecated_interface():
    old = {"spoon/imports/ImportScanner.java": """
        package spoon.imports;
        @Deprecated
        public interface ImportScanner { void scan(); }
    """, "spoon/Launcher.java": "package spoon; public class Launcher {}"}
    new = {"spoon/Launcher.java": "package spoon; public class Launcher {}"}
    delta = diff(build_api(old), build_api(new))
    [bc] = delta.changes
    assert (str(bc.declaration), bc.kind) == ("spoon.imports.ImportScanner", BcKind.TYPE_REMOVED)
    assert bc.deprecated_in_old


def test_identity():
    files = one("package p; public class A { public int f; public A() {} public void m(int x) {} }")
    assert changes(files, files) == []


def test_field_now_final_attributes():
    delta = diff(build_api(one("package p; public class A { public int f; }")),
                 build_api(one("package p; public class A { public final int f = 0; }")))
    [bc] = delta.changes
    assert (bc.kind, bc.old_attr, bc.new_attr) == (BcKind.FIELD_NOW_FINAL, "", "final")
    assert bc.old_location.line == 1


def test_class_turns_abstract_with_new_abstract_method():
    got = changes(one("package p; public class C { public void n() {} }"),
                  one("package p; public abstract class C { public void n() {} public abstract void m(); }"))
    assert got == [("p.C", "TYPE_NOW_ABSTRACT"), ("p.C::m()", "METHOD_ABSTRACT_ADDED_TO_TYPE")]


def test_parameter_type_change_beats_removal():
    assert changes(one("package p; public class A { public void m(int x) {} }"),
                   one("package p; public class A { public void m(long x) {} }")) == \
        [("p.A::m(int)", "METHOD_PARAMETER_TYPES_CHANGED")]


def test_added_overload_is_harmless():
    assert changes(one("package p; public class A { public void m(int x) {} }"),
                   one("package p; public class A { public void m(int x) {} public void m(long x) {} }")) == []


def test_ambiguous_name_arity_match_is_a_removal():
    assert changes(one("package p; public class A { public void m(int x) {} }"),
                   one("package p; public class A { public void m(long x) {} public void m(String s) {} }")) == \
        [("p.A::m(int)", "METHOD_REMOVED")]


def test_method_less_accessible():
    delta = diff(build_api(one("package p; public class A { public void m() {} }")),
                 build_api(one("package p; public class A { protected void m() {} }")))
    [bc] = delta.changes
    assert (bc.kind, bc.old_attr, bc.new_attr) == (BcKind.METHOD_LESS_ACCESSIBLE, "public", "protected")


@pytest.mark.parametrize("old, new, expected", [
    # a class without constructors gets a default one that mirrors the class access
    ("public class A {}", "class A {}",
     [("p.A", "TYPE_LESS_ACCESSIBLE"), ("p.A::<init>()", "CONSTRUCTOR_LESS_ACCESSIBLE")]),
    ("public class A {}", "public final class A {}", [("p.A", "TYPE_NOW_FINAL")]),
    ("public abstract class A {}", "public interface A {}",
     [("p.A", "TYPE_KIND_CHANGED"), ("p.A::<init>()", "CONSTRUCTOR_REMOVED")]),
    ("public class A { public void m() {} }", "public class A { public final void m() {} }",
     [("p.A::m()", "METHOD_NOW_FINAL")]),
    ("public abstract class A { public void m() {} }", "public abstract class A { public abstract void m(); }",
     [("p.A::m()", "METHOD_NOW_ABSTRACT")]),
    ("public class A { public void m() {} }", "public class A { public static void m() {} }",
     [("p.A::m()", "METHOD_NOW_STATIC")]),
    ("public class A { public static void m() {} }", "public class A { public void m() {} }",
     [("p.A::m()", "METHOD_NO_LONGER_STATIC")]),
    ("public class A { public int m() { return 0; } }", "public class A { public long m() { return 0; } }",
     [("p.A::m()", "METHOD_RETURN_TYPE_CHANGED")]),
    ("public interface A { }", "public interface A { void m(); }", [("p.A::m()", "METHOD_ABSTRACT_ADDED_TO_TYPE")]),
    ("public class A { public int f; }", "public class A { }", [("p.A::f", "FIELD_REMOVED")]),
    ("public class A { public int f; }", "public class A { int f; }", [("p.A::f", "FIELD_LESS_ACCESSIBLE")]),
    ("public class A { public int f; }", "public class A { public static int f; }", [("p.A::f", "FIELD_NOW_STATIC")]),
    ("public class A { public static int f; }", "public class A { public int f; }",
     [("p.A::f", "FIELD_NO_LONGER_STATIC")]),
    ("public class A { public int f; }", "public class A { public long f; }", [("p.A::f", "FIELD_TYPE_CHANGED")]),
    ("public class A { public A(int x) {} }", "public class A { public A(long x) {} }",
     [("p.A::<init>(int)", "CONSTRUCTOR_REMOVED")]),
    ("public class A { public A() {} }", "public class A { A() {} }",
     [("p.A::<init>()", "CONSTRUCTOR_LESS_ACCESSIBLE")]),
    ("public class A { private void m() {} int g; }", "public class A { }", []),
    ("class A { public void m() {} }", "class A { }", []),
])
def test_rule_rows(old, new, expected):
    assert changes(one("package p; " + old), one("package p; " + new)) == expected


def test_type_removal_subsumes_member_changes():
    assert changes(one("package p; public class A { public void m() {} public int f; }"),
                   {"p/B.java": "package p; public class B {}"}) == [("p.A", "TYPE_REMOVED")]


def test_supertype_removed_with_inherited_members():
    old = {"p/A.java": "package p; public class A { public void m() {} public int f; }",
           "p/B.java": "package p; public class B extends A {}"}
    new = {"p/A.java": "package p; public class A { public void m() {} public int f; }",
           "p/B.java": "package p; public class B {}"}
    assert changes(old, new) == [("p.B", "SUPERTYPE_REMOVED"), ("p.B::f", "FIELD_REMOVED"),
                                 ("p.B::m()", "METHOD_REMOVED")]


def test_skipping_an_intermediate_supertype():
    old = {"p/A2.java": "package p; public class A2 { public void top() {} }",
           "p/A.java": "package p; public class A extends A2 { public void mid() {} }",
           "p/B.java": "package p; public class B extends A {}"}
    new = dict(old, **{"p/B.java": "package p; public class B extends A2 {}"})
    assert changes(old, new) == [("p.B", "SUPERTYPE_REMOVED"), ("p.B::mid()", "METHOD_REMOVED")]
    delta = diff(build_api(old), build_api(new))
    assert delta.changes[0].old_attr == "p.A"


def test_unchanged_hierarchy():
    files = {"p/A.java": "package p; public class A {}", "p/B.java": "package p; public class B extends A {}"}
    assert changes(files, files) == []


def test_excluded_declarations_are_never_subjects():
    rules = ExclusionRules(frozenset({"Experimental"}), ("*internal*",))
    old = {"p/A.java": "package p; public class A { @Experimental public void m() {} public void n() {} }",
           "p/internal/H.java": "package p.internal; public class H { public int f; }"}
    new = {"p/A.java": "package p; public class A { }"}
    assert changes(old, new, rules) == [("p.A::n()", "METHOD_REMOVED")]


def test_removal_is_not_symmetric():
    a = one("package p; public class A {}")
    b = {"p/A.java": "package p; public class A {}", "p/B.java": "package p; public class B { public int f; }"}
    assert changes(b, a) == [("p.B", "TYPE_REMOVED")]
    assert changes(a, b) == []


def test_ordering_and_uniqueness():
    old = one("package p; public class A { public int z; public int a; public void m() {} public A() {} }")
    new = one("package p; public final class A { }")
    delta = diff(build_api(old), build_api(new))
    keys = [c.sort_key for c in delta.changes]
    assert keys == sorted(keys)
    assert len({(str(c.declaration), c.kind) for c in delta.changes}) == len(keys)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_generated_libraries_laws(seed):
    pair = generate_pair(seed, Profile(clients=(1, 1)))
    old, new = load_api(pair.old, label="old"), load_api(pair.new, label="new")
    assert diff(old, old).changes == ()
    assert diff(new, new).changes == ()
    for bc in diff(old, new).changes:
        model = new if bc.kind is BcKind.METHOD_ABSTRACT_ADDED_TO_TYPE else old
        if bc.kind is BcKind.SUPERTYPE_REMOVED or "::" not in str(bc.declaration):
            assert is_exported(model[bc.declaration.owner], model)
        elif bc.declaration.owner in model and lookup(model, bc.declaration) is not None:
            assert is_exported(lookup(model, bc.declaration), model)
