from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from breakscope.syntax import (
    LexError, MiniJSyntaxError, ParseError, SourceLocation, declaration_list, parse_source, parse_tree, render, tokenize,
)
from breakscope.syntax.nodes import Block, Call, CtorAst, FieldAst, MethodAst

GOLDEN = Path(__file__).parent / "golden"


def kinds(text):
    return [str(t) for t in tokenize(text, "T.java")]


def test_empty_source_has_no_tokens():
    assert kinds("") == []


def test_minimal_header_tokens():
    assert kinds("package p;") == ["kw:package", "ident:p", "semi"]


def test_comments_and_whitespace_are_dropped():
    assert kinds("// x\npackage /* y */ p ;\n") == ["kw:package", "ident:p", "semi"]


def test_lex_error_points_at_offending_character():
    # the euro sign sits at the fifteenth column of this line
    src = "class A { int €; }"
    assert src.index("€") + 1 == 15
    with pytest.raises(LexError) as info:
        tokenize(src, "A.java")
    assert (info.value.location.line, info.value.location.column) == (1, 15)


def test_lex_error_on_later_line():
    with pytest.raises(LexError) as info:
        tokenize("package p;\nclass A { # }", "A.java")
    assert info.value.location == SourceLocation("A.java", 2, 11)


def test_token_locations():
    toks = tokenize("package p;\n  import q.B;", "X.java")
    assert [(t.loc.line, t.loc.column) for t in toks[:4]] == [(1, 1), (1, 9), (1, 10), (2, 3)]


def test_minimal_class():
    unit = parse_source("package p; public class A {}", "A.java")
    assert unit.package == "p"
    assert unit.imports == ()
    [a] = unit.types
    assert (a.kind, a.name, a.modifiers, a.members) == ("class", "A", ("public",), ())


def test_minimal_interface():
    unit = parse_source("package p; import q.B; public interface I { void m(); }", "I.java")
    assert [i.name for i in unit.imports] == ["q.B"]
    [i] = unit.types
    assert i.kind == "interface"
    [m] = i.members
    assert isinstance(m, MethodAst) and m.name == "m" and m.body is None


def test_declaration_list_matches_golden():
    text = (GOLDEN / "Shapes.java").read_text()
    assert len(text.splitlines()) == 30
    unit = parse_source(text, "Shapes.java")
    expected = (GOLDEN / "Shapes.decls").read_text().splitlines()
    assert declaration_list(unit) == expected


def test_member_shapes():
    unit = parse_source((GOLDEN / "Shapes.java").read_text(), "Shapes.java")
    shape = unit.types[0]
    assert [str(t) for t in shape.extends] == ["Base"]
    assert [str(t) for t in shape.implements] == ["Drawable", "Named"]
    assert [a.name for a in shape.annotations] == ["Deprecated"]
    assert sum(isinstance(m, CtorAst) for m in shape.members) == 2
    assert sum(isinstance(m, FieldAst) for m in shape.members) == 4
    drawable = unit.types[1]
    assert [str(t) for t in drawable.extends] == ["Visible", "geo.core.Sized"]


def test_dotted_chain_is_left_generic():
    unit = parse_source("package p; class A { void f() { a.b.c.run(1, \"s\"); } }", "A.java")
    call = unit.types[0].members[0].body.stmts[0].expr
    assert isinstance(call, Call) and call.name == "run" and len(call.args) == 2


@pytest.mark.parametrize("src", [
    "package p; class A { class B {} }",
    "package p; class A<T> {}",
    "package p; class A { void f() { Runnable r = () -> 1; } }",
    "package p; class A { void f(int... xs) {} }",
    "package p; class A { static { } }",
    "package p; class A { int x = 1 + 2; }",
    "package p; class A { final abstract void f(); }",
    "package p; class A { public public int x; }",
    "package p; import q.B;",
    "class A {}",
])
def test_unsupported_constructs_are_rejected(src):
    # operators such as < + -> are outside the token alphabet and fail in the lexer
    with pytest.raises(MiniJSyntaxError):
        parse_source(src, "A.java")


def test_parse_error_reports_expected_tokens():
    with pytest.raises(ParseError) as info:
        parse_source("package p; class A { int }", "A.java")
    err = info.value
    assert err.location.line == 1 and err.expected


def test_locations_are_inside_the_file():
    text = (GOLDEN / "Shapes.java").read_text()
    unit = parse_source(text, "Shapes.java")
    nlines = len(text.splitlines())
    seen = []

    def walk(node):
        loc = getattr(node, "loc", None)
        if isinstance(loc, SourceLocation):
            seen.append(loc)
        if isinstance(node, tuple):
            for x in node:
                walk(x)
        elif hasattr(node, "__dataclass_fields__"):
            for name in node.__dataclass_fields__:
                if name != "loc":
                    walk(getattr(node, name))

    walk(unit)
    assert len(seen) > 30
    assert all(loc.file == "Shapes.java" and 1 <= loc.line <= nlines for loc in seen)


def test_render_round_trip_on_golden():
    unit = parse_source((GOLDEN / "Shapes.java").read_text(), "Shapes.java")
    again = parse_source(render(unit), "Shapes.java")
    assert again == unit
    assert render(again) == render(unit)


def test_parsing_is_deterministic():
    text = (GOLDEN / "Shapes.java").read_text()
    assert parse_source(text, "S.java") == parse_source(text, "S.java")


def test_parse_tree_uses_relative_posix_paths(tmp_path):
    (tmp_path / "a" / "b").mkdir(parents=True)
    (tmp_path / "a" / "b" / "C.java").write_text("package a.b; public class C {}")
    (tmp_path / "notes.txt").write_text("ignored")
    units = parse_tree(tmp_path)
    assert [u.file for u in units] == ["a/b/C.java"]


_idents = st.sampled_from(["a", "b", "val", "x1", "count", "name"])
_types = st.sampled_from(["int", "double", "boolean", "String", "q.Thing", "int[]", "long[][]"])
_access = st.sampled_from(["", "public", "protected", "private"])
_mods = st.tuples(_access, st.lists(st.sampled_from(["static", "final"]), unique=True)).map(
    lambda m: [x for x in (m[0], *m[1]) if x])


@st.composite
def units(draw):
    members = []
    names = draw(st.lists(_idents, unique=True, min_size=1, max_size=5))
    for i, name in enumerate(names):
        mods = " ".join(draw(_mods))
        typ = draw(_types)
        if draw(st.booleans()):
            members.append(f"{mods} {typ} {name};")
        else:
            params = ", ".join(f"{draw(_types)} p{j}" for j in range(draw(st.integers(0, 3))))
            members.append(f"{mods} {typ} {name}({params}) {{ return null; }}")
    body = "\n    ".join(members)
    return f"package gen.pkg;\nimport q.Thing;\npublic class G {{\n    {body}\n}}\n"


@settings(max_examples=80, deadline=None)
@given(units())
def test_round_trip_property(text):
    unit = parse_source(text, "G.java")
    assert parse_source(render(unit), "G.java") == unit
    assert declaration_list(unit) == declaration_list(parse_source(text, "G.java"))


def test_block_bodies_render_and_reparse():
    src = ("package p; class A { A() { int x = 1; this.x = 2; { return; } } "
           "int f(String s) { Object o = (Object) s; return ((String) o).length(); } }")
    unit = parse_source(src, "A.java")
    assert isinstance(unit.types[0].members[0].body, Block)
    assert parse_source(render(unit), "A.java") == unit
