from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional


def _read_tree(root: Path) -> dict:
    return {p.relative_to(root).as_posix(): p.read_text(encoding="utf-8")
            for p in sorted(root.rglob("*.java"))}


def _write_tree(root: Path, files: dict) -> None:
    for rel, text in sorted(files.items()):
        target = root / rel
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")


@dataclass
class Fixture:
    """A library version pair plus client sources, all held as ``{relative path: text}`` maps.

    On disk: ``old/``, ``new/``, ``clients/<name>/``, an optional
    ``config.json`` usable as-is by the command line, ``meta.json`` with the
    kinds the pair exercises, and an optional golden ``expected/report.json``.
    """

    name: str
    old: dict
    new: dict
    clients: dict
    kinds: tuple = ()
    config: dict = field(default_factory=dict)
    expected: Optional[dict] = None

    @classmethod
    def load(cls, root) -> "Fixture":
        root = Path(root)
        clients_dir = root / "clients"
        clients = {}
        if clients_dir.is_dir():
            for d in sorted(p for p in clients_dir.iterdir() if p.is_dir()):
                clients[d.name] = _read_tree(d)
        config_path = root / "config.json"
        config = json.loads(config_path.read_text()) if config_path.exists() else {}
        meta_path = root / "meta.json"
        meta = json.loads(meta_path.read_text()) if meta_path.exists() else {}
        golden = root / "expected" / "report.json"
        expected = json.loads(golden.read_text()) if golden.exists() else None
        return cls(root.name, _read_tree(root / "old"), _read_tree(root / "new"), clients,
                   tuple(meta.get("kinds", ())), config, expected)

    def write(self, root) -> Path:
        root = Path(root)
        _write_tree(root / "old", self.old)
        _write_tree(root / "new", self.new)
        for name, files in self.clients.items():
            _write_tree(root / "clients" / name, files)
        if self.config:
            (root / "config.json").write_text(json.dumps(self.config, indent=2) + "\n")
        if self.kinds:
            (root / "meta.json").write_text(json.dumps({"kinds": list(self.kinds)}, indent=2) + "\n")
        if self.expected is not None:
            (root / "expected").mkdir(parents=True, exist_ok=True)
            (root / "expected" / "report.json").write_text(json.dumps(self.expected, indent=2) + "\n")
        return root

    def source_bytes(self) -> bytes:
        """Canonical serialization, used to compare generated fixtures."""
        payload = {"old": self.old, "new": self.new, "clients": self.clients}
        return json.dumps(payload, sort_keys=True).encode()
