import textwrap

import pytest

from breakscope.apimodel import ExclusionRules, extract_api
from breakscope.syntax import parse_source


def parse_files(files: dict) -> list:
    """Parse ``{relative path: source}`` into compilation units."""
    return [parse_source(textwrap.dedent(src), path) for path, src in sorted(files.items())]


def build_api(files: dict, label: str = "v", rules: ExclusionRules = None):
    return extract_api(parse_files(files), rules, label)


def write_tree(root, files: dict):
    for path, src in files.items():
        target = root / path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(textwrap.dedent(src), encoding="utf-8")
    return root


@pytest.fixture
def tree(tmp_path):
    def make(name: str, files: dict):
        return write_tree(tmp_path / name, files)
    return make


def sweep(seeds, profile=None):
    """Run the differential over generated pairs; returns the failing verdicts."""
    from breakscope.corpus import Profile, generate_pair, run_differential

    profile = profile or Profile()
    return [v for v in (run_differential(generate_pair(s, profile)) for s in seeds) if not v.passed]


_criteria: dict = {}
_criterion_of: dict = {}


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        info = _criterion_of.get(report.nodeid)
        if info is not None:
            _criteria[info] = report.outcome


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criterion_of[item.nodeid] = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_criteria.items()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
