import json
from pathlib import Path

import pytest

from breakscope.config import ConfigError, load_config, parse_config


def test_minimal_config():
    config = parse_config({"clients": [], "failOn": "never"})
    assert config.clients == () and config.fail_on == "never"


def test_defaults():
    config = parse_config({})
    assert config.fail_on == "impact"
    assert config.excluded_annotations == () and config.excluded_packages == ()


def test_exclusion_rules():
    config = parse_config({"excludedAnnotations": ["Experimental"], "excludedPackages": ["*test*"]})
    rules = config.exclusions
    assert rules.annotations == frozenset({"Experimental"})
    assert rules.package_excluded("org.lib.test.util")
    assert rules.package_excluded("testkit")
    assert not rules.package_excluded("org.lib.core")


def test_duplicate_client_names():
    with pytest.raises(ConfigError) as info:
        parse_config({"clients": [{"name": "a", "path": "x"}, {"name": "a", "path": "y"}]})
    assert info.value.path == "clients[1].name"


def test_client_fields_and_relative_paths(tmp_path):
    path = tmp_path / "conf" / "breakscope.json"
    path.parent.mkdir()
    path.write_text(json.dumps({"clients": [
        {"name": "astor", "path": "../astor", "urlTemplate": "https://h/{ref}/{path}#L{line}", "ref": "main"},
        {"name": "dspot", "path": "dspot"}]}))
    config = load_config(path)
    astor, dspot = config.clients
    assert astor.path == path.parent / "../astor"
    assert astor.url_template == "https://h/{ref}/{path}#L{line}" and astor.ref == "main"
    assert dspot.url_template is None and dspot.ref == "HEAD"


@pytest.mark.parametrize("data, where", [
    ({"failOn": "sometimes"}, "failOn"),
    ({"clients": {}}, "clients"),
    ({"clients": [{"path": "x"}]}, "clients[0].name"),
    ({"clients": [{"name": "a"}]}, "clients[0].path"),
    ({"clients": [{"name": "a", "path": "x", "urlTemplate": "{ref}/{path}"}]}, "clients[0].urlTemplate"),
    ({"clients": [{"name": "a", "path": "x", "build": "mvn"}]}, "clients[0].build"),
    ({"excludedAnnotations": ["@Experimental"]}, "excludedAnnotations[0]"),
    ({"excludedPackages": "test"}, "excludedPackages"),
    ({"excludedPackages": [""]}, "excludedPackages[0]"),
    ({"build": "mvn package"}, "build"),
])
def test_schema_violations_name_the_field(data, where):
    with pytest.raises(ConfigError) as info:
        parse_config(data)
    assert info.value.path == where


def test_top_level_must_be_an_object():
    with pytest.raises(ConfigError):
        parse_config([])


def test_unreadable_and_malformed_files(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{ nope")
    with pytest.raises(ConfigError, match="not valid JSON"):
        load_config(bad)


def test_fail_on_override():
    config = parse_config({"failOn": "never"})
    assert config.with_fail_on(None) is config
    assert config.with_fail_on("breaking").fail_on == "breaking"
    with pytest.raises(ConfigError):
        config.with_fail_on("always")


def test_committed_fixture_configs_are_valid():
    root = Path(__file__).parents[1] / "src" / "breakscope" / "corpus" / "fixtures"
    for path in sorted(root.glob("*/config.json")):
        config = load_config(path)
        for c in config.clients:
            assert c.path.is_dir(), c.path
