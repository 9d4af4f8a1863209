"""Builds the 13-client performance corpus (about 500 lines per client).

Five clients carry breaking statements; each statement yields exactly one
broken location, so the oracle-derived summary is (13, 32, 5, 13).
Run ``scripts/refresh_fixtures.py`` afterwards to re-derive the golden report.
"""

import json
import shutil
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1] / "src" / "breakscope" / "corpus" / "fixtures"

STABLE = [f"Node{i}" for i in (0, 1, 2, 14, 15, 16, 17, 18, 19)]


def node(name, extra_old="", extra_new=None, mods="public", new_mods=None):
    body = f"""    public int value;
    public {name}() {{ }}
    public void touch() {{ }}
    public int compute(int x) {{ return x; }}
    public String label() {{ return ""; }}
"""
    old = f"package core;\n\n{mods} class {name} {{\n{body}{extra_old}}}\n"
    new = f"package core;\n\n{new_mods or mods} class {name} {{\n{body}{extra_new if extra_new is not None else extra_old}}}\n"
    return old, new


def library():
    old, new = {}, {}
    specs = {
        "Node3": ("    public void oldName() { }\n", ""),
        "Node4": ("    public int count;\n", ""),
        "Node5": ("    public int limit;\n", "    public final int limit;\n"),
        "Node6": ("    public int size() { return 0; }\n", "    public String size() { return \"\"; }\n"),
        "Node7": ("    public void put(int x) { }\n", "    public void put(String x) { }\n"),
        "Node9": ("    public Node9(int seed) { }\n", ""),
        "Node10": ("    public void helper() { }\n", "    protected void helper() { }\n"),
        "Node11": ("    public void ping() { }\n", "    public static void ping() { }\n"),
        "Node12": ("    public int flag;\n", "    public String flag;\n"),
        "Node13": ("    public void spare() { }\n", ""),
    }
    for i in range(20):
        name = f"Node{i}"
        if name == "Node8":
            o, n = node(name, new_mods="public final")
        else:
            extra_old, extra_new = specs.get(name, ("", None))
            o, n = node(name, extra_old, extra_new)
        old[f"core/{name}.java"], new[f"core/{name}.java"] = o, n
    for gone in ("Legacy", "Unused1"):
        old[f"core/{gone}.java"] = f"package core;\n\npublic class {gone} {{\n    public {gone}() {{ }}\n}}\n"
    return old, new


# one broken location each
BREAKERS = {
    "inv3": ("Node3", "n3.oldName();"),
    "read4": ("Node4", "int c{i} = n4.count;"),
    "write4": ("Node4", "n4.count = {i};"),
    "write5": ("Node5", "n5.limit = {i};"),
    "size6": ("Node6", "int s{i} = n6.size();"),
    "put7": ("Node7", "n7.put({i});"),
    "new9": ("Node9", "Object o{i} = new Node9({i});"),
    "help10": ("Node10", "n10.helper();"),
    "ping11": ("Node11", "n11.ping();"),
    "flag12": ("Node12", "n12.flag = {i};"),
}


def stable_lines(rng_i, count):
    out = []
    for k in range(count):
        t = STABLE[(rng_i + k) % len(STABLE)]
        v = t.lower()
        pattern = k % 4
        if pattern == 0:
            out.append(f"int a{k} = {v}.compute({k});")
        elif pattern == 1:
            out.append(f"{v}.value = {k};")
        elif pattern == 2:
            out.append(f"{v}.touch();")
        else:
            out.append(f"String t{k} = {v}.label();")
    return out


def client(idx, breakers, legacy_import=False, extends8=False, classes=5, lines_per_method=14):
    pkg = f"client{idx:02d}"
    files = {}
    plan = list(breakers)
    for c in range(classes):
        name = f"Worker{c}"
        imports = sorted({f"core.{t}" for t in STABLE} | {f"core.{BREAKERS[b][0]}" for b in BREAKERS}
                         | {"core.Node8"})
        if legacy_import and c == 0:
            imports.append("core.Legacy")
        head = [f"package {pkg}.work;", ""] + [f"import {i};" for i in sorted(imports)] + [""]
        ext = " extends Node8" if extends8 and c == 0 else ""
        body = [f"public class {name}{ext} {{"]
        for m in range(4):
            params = ", ".join([f"{t} {t.lower()}" for t in STABLE[:5]])
            body.append(f"    public void step{m}({params}) {{")
            locals_ = [f"{t} {t.lower()} = new {t}();" for t in STABLE[5:]]
            body += [f"        {s}" for s in locals_]
            body += [f"        {s}" for s in stable_lines(idx + c + m, lines_per_method)]
            body.append("    }")
        if c == 0 and plan:
            params = ", ".join(f"{t} n{t[4:]}" for t in ("Node3", "Node4", "Node5", "Node6", "Node7",
                                                          "Node10", "Node11", "Node12"))
            body.append(f"    public void upgrade({params}) {{")
            for i, b in enumerate(plan):
                body.append("        " + BREAKERS[b][1].format(i=i))
            body.append("    }")
        body.append("}")
        files[f"{pkg}/work/{name}.java"] = "\n".join(head + body) + "\n"
    return pkg, files


def build(name="perf-13"):
    base = ROOT / name
    shutil.rmtree(base, ignore_errors=True)
    old, new = library()
    for tree, files in (("old", old), ("new", new)):
        for rel, text in files.items():
            p = base / tree / rel
            p.parent.mkdir(parents=True, exist_ok=True)
            p.write_text(text)
    impacted = {
        1: (["inv3", "read4", "write4", "write5", "size6", "put7", "new9", "help10", "ping11", "flag12"], True, False),
        4: (["inv3", "read4", "write5", "size6", "put7", "help10", "ping11"], False, True),
        6: (["write4", "put7", "new9", "flag12", "inv3", "size6"], True, False),
        9: (["ping11", "help10", "read4"], False, False),
        11: (["new9", "flag12"], False, True),
    }
    clients = []
    for i in range(13):
        breakers, legacy, ext = impacted.get(i, ([], False, False))
        pkg, files = client(i, breakers, legacy, ext)
        for rel, text in files.items():
            p = base / "clients" / pkg / rel
            p.parent.mkdir(parents=True, exist_ok=True)
            p.write_text(text)
        clients.append(pkg)
    cfg = {"clients": [{"name": c, "path": f"clients/{c}"} for c in clients], "failOn": "impact"}
    (base / "config.json").write_text(json.dumps(cfg, indent=2) + "\n")
    kinds = ["CONSTRUCTOR_REMOVED", "FIELD_NOW_FINAL", "FIELD_REMOVED", "FIELD_TYPE_CHANGED",
             "METHOD_LESS_ACCESSIBLE", "METHOD_NOW_STATIC", "METHOD_PARAMETER_TYPES_CHANGED", "METHOD_REMOVED",
             "METHOD_RETURN_TYPE_CHANGED", "TYPE_NOW_FINAL", "TYPE_REMOVED"]
    (base / "meta.json").write_text(json.dumps({"kinds": kinds}, indent=2) + "\n")


if __name__ == "__main__":
    build()
