import random

import pytest

from breakscope.apimodel import (
    Access, CycleError, DeclRef, DuplicateType, ExclusionRules, ModelError, extract_api, is_exported,
    lookup, package_matches,
)
from conftest import build_api, parse_files


def test_experimental_annotation_excludes_type_and_members():
    api = build_api({"a/X.java": """
        package a;
        @Experimental
        public class X { public int f; public void m() {} }
    """, "a/Y.java": "package a; public class Y { @Experimental public void m() {} public void n() {} }"},
        rules=ExclusionRules(frozenset({"Experimental"})))
    x = api["a.X"]
    assert x.excluded and x.fields["f"].excluded and x.methods["m()"].excluded
    y = api["a.Y"]
    assert not y.excluded and y.methods["m()"].excluded and not y.methods["n()"].excluded


def test_no_rules_one_public_class():
    api = build_api({"p/A.java": "package p; public class A {}"})
    assert list(api.types) == ["p.A"]
    assert api["p.A"].excluded is False
    assert api["p.A"].access is Access.PUBLIC


def test_package_glob_semantics():
    assert package_matches("a.test.util", "*test*")
    assert not package_matches("a.testing", "*.test.*")
    assert package_matches("a.testing", "*test*")
    assert package_matches("test", "*test*")
    assert not package_matches("a.b", "a")
    assert package_matches("a.b.c", "a.*")
    # regex metacharacters other than the star are literal
    assert not package_matches("aXb", "a.b")


def test_package_rule_excludes_whole_package():
    api = build_api({"a/test/util/H.java": "package a.test.util; public class H { public void m() {} }",
                     "a/testing/K.java": "package a.testing; public class K {}"},
                    rules=ExclusionRules(packages=("*.test.*",)))
    assert api["a.test.util.H"].excluded and api["a.test.util.H"].methods["m()"].excluded
    assert not api["a.testing.K"].excluded


def test_deprecated_is_metadata_not_exclusion():
    api = build_api({"p/A.java": "package p; @Deprecated public class A {}"},
                    rules=ExclusionRules(frozenset({"Experimental"})))
    assert api["p.A"].is_deprecated and not api["p.A"].excluded


def test_interface_members_are_normalized():
    api = build_api({"p/I.java": "package p; interface I { void m(); int K = 1; }"})
    i = api["p.I"]
    assert i.is_abstract and not i.is_final and not i.constructors
    m = i.methods["m()"]
    assert m.access is Access.PUBLIC and m.is_abstract
    k = i.fields["K"]
    assert k.access is Access.PUBLIC and k.is_static and k.is_final


def test_access_order():
    assert Access.PUBLIC > Access.PROTECTED > Access.PACKAGE_PRIVATE > Access.PRIVATE


def test_signature_keys_use_resolved_param_types():
    api = build_api({"p/A.java": "package p; import q.B; public class A { public void m(B b, int[] xs) {} A(String s) {} }",
                     "q/B.java": "package q; public class B {}"})
    a = api["p.A"]
    assert list(a.methods) == ["m(q.B,int[])"]
    assert str(a.methods["m(q.B,int[])"].ref) == "p.A::m(q.B,int[])"
    assert str(a.constructors["<init>(String)"].ref) == "p.A::<init>(String)"


def test_single_step_inheritance():
    api = build_api({"p/A.java": "package p; public class A { public void m() {} }",
                     "p/B.java": "package p; public class B extends A {}"})
    assert api.flat("p.B").provenance("m()") == "p.A"


def test_shadowing():
    api = build_api({"p/A.java": "package p; public class A { public void m() {} }",
                     "p/B.java": "package p; public class B extends A { public void m() {} }"})
    assert api.flat("p.B").provenance("m()") == "p.B"


def test_diamond_merges_identical_signatures():
    api = build_api({"p/I1.java": "package p; public interface I1 { void m(); }",
                     "p/I2.java": "package p; public interface I2 { void m(); }",
                     "p/C.java": "package p; public abstract class C implements I1, I2 {}"})
    flat = api.flat("p.C")
    assert [k for k in flat.methods if k == "m()"] == ["m()"]
    assert len(flat.methods) == 1


def test_flatten_keeps_declared_members():
    api = build_api({"p/A.java": "package p; public class A { public int x; public void m() {} }",
                     "p/B.java": "package p; public class B extends A { public int y; void m() {} }"})
    for fqn, t in api.types.items():
        flat = api.flat(fqn)
        assert set(t.methods) <= set(flat.methods)
        assert set(t.fields) <= set(flat.fields)
        assert len(flat.methods) + len(flat.fields) >= len(t.methods) + len(t.fields)


@pytest.mark.parametrize("cls_mod, member, expected", [
    ("public", "public void m() {}", True),
    ("public", "private int f;", False),
    ("", "public void m() {}", False),
    ("public", "protected int f;", True),
    ("public", "int f;", False),
])
def test_is_exported(cls_mod, member, expected):
    api = build_api({"p/A.java": f"package p; {cls_mod} class A {{ {member} }}"})
    a = api["p.A"]
    [decl] = list(a.methods.values()) + list(a.fields.values())
    assert is_exported(decl, api) is expected


def test_type_exported_iff_public():
    api = build_api({"p/A.java": "package p; public class A {}", "p/B.java": "package p; class B {}"})
    assert is_exported(api["p.A"], api) and not is_exported(api["p.B"], api)


def test_duplicate_type_is_rejected():
    units = parse_files({"x/A.java": "package p; class A {}", "y/A.java": "package p; class A {}"})
    with pytest.raises(DuplicateType):
        extract_api(units)


def test_inheritance_cycle_is_rejected():
    with pytest.raises(CycleError):
        build_api({"p/A.java": "package p; class A extends B {}", "p/B.java": "package p; class B extends A {}"})


def test_external_supertype_is_rejected():
    with pytest.raises(ModelError):
        build_api({"p/A.java": "package p; class A extends q.Missing {}"})


def test_extraction_is_order_independent():
    files = {f"p/T{i}.java": f"package p; public class T{i} extends T{i - 1} {{ public void m{i}() {{}} }}"
             for i in range(1, 6)}
    files["p/T0.java"] = "package p; public class T0 {}"
    units = parse_files(files)
    base = extract_api(units, None, "v")
    for seed in range(5):
        shuffled = list(units)
        random.Random(seed).shuffle(shuffled)
        other = extract_api(shuffled, None, "v")
        assert other.types == base.types
        assert list(other.types) == list(base.types)


@pytest.mark.parametrize("text", [
    "p.q.T", "p.q.T::m(p.A,int)", "p.q.T::f", "p.q.T::<init>(int)", "T::m()", "a.B::<init>()",
])
def test_declref_round_trip(text):
    ref = DeclRef.parse(text)
    assert str(ref) == text
    assert DeclRef.parse(str(ref)) == ref


def test_declref_parts_and_lookup():
    ref = DeclRef.parse("p.A::m(int,String)")
    assert (ref.owner, ref.kind, ref.name, ref.params) == ("p.A", "method", "m", ("int", "String"))
    api = build_api({"p/A.java": "package p; public class A { public void m(int a, String b) {} public int f; }"})
    assert lookup(api, ref).name == "m"
    assert lookup(api, DeclRef.parse("p.A::f")).name == "f"
    assert lookup(api, DeclRef.parse("p.A::g")) is None
    assert lookup(api, DeclRef.parse("p.Z")) is None
