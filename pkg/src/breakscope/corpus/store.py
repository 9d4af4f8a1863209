from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .fixture import Fixture

MANIFEST = "fixtures.json"


def fixtures_root() -> Path:
    return Path(__file__).parent / "fixtures"


def load_manifest(root: Optional[Path] = None) -> list:
    return json.loads(((root or fixtures_root()) / MANIFEST).read_text())


def committed_fixtures(root: Optional[Path] = None) -> list:
    root = root or fixtures_root()
    return [Fixture.load(root / entry["name"]) for entry in load_manifest(root)]


def refresh(root: Optional[Path] = None) -> list:
    """Rewrite every golden report and the manifest from the fixture trees under ``root``.

    Goldens are only written for fixtures on which the matcher and the oracle
    agree; a disagreement raises instead of freezing a wrong answer.
    """
    from .differential import run_differential

    root = root or fixtures_root()
    manifest = []
    verdicts = []
    for d in sorted(p for p in root.iterdir() if (p / "old").is_dir()):
        fixture = Fixture.load(d)
        fixture.expected = None
        verdict = run_differential(fixture)
        if not verdict.passed:
            raise RuntimeError(f"refusing to freeze a failing fixture:\n{verdict}")
        verdicts.append((d, verdict))
    for d, verdict in verdicts:
        golden = d / "expected" / "report.json"
        golden.parent.mkdir(exist_ok=True)
        golden.write_text(json.dumps(verdict.report, indent=2, ensure_ascii=False) + "\n")
        fixture = Fixture.load(d)
        manifest.append({"name": d.name, "kinds": list(fixture.kinds), "clients": sorted(fixture.clients),
                         "expectedSummary": verdict.report["summary"]})
    (root / MANIFEST).write_text(json.dumps(manifest, indent=2) + "\n")
    return manifest
