"""JSON configuration: clients of interest, exclusion rules and the CI failure policy."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .apimodel import ExclusionRules
from .report import REQUIRED_PLACEHOLDERS

FAIL_ON = ("never", "breaking", "impact")
_IDENT = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*\Z")
_CLIENT_KEYS = {"name", "path", "urlTemplate", "ref"}
_TOP_KEYS = {"clients", "excludedAnnotations", "excludedPackages", "failOn"}


class ConfigError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass(frozen=True)
class ClientConfig:
    name: str
    path: Path
    url_template: Optional[str] = None
    ref: str = "HEAD"


@dataclass(frozen=True)
class Config:
    clients: tuple = ()
    excluded_annotations: tuple = ()
    excluded_packages: tuple = ()
    fail_on: str = "impact"

    @property
    def exclusions(self) -> ExclusionRules:
        return ExclusionRules(frozenset(self.excluded_annotations), tuple(self.excluded_packages))

    def with_fail_on(self, policy: Optional[str]) -> "Config":
        if policy is None:
            return self
        if policy not in FAIL_ON:
            raise ConfigError("failOn", f"expected one of {', '.join(FAIL_ON)}, got {policy!r}")
        return Config(self.clients, self.excluded_annotations, self.excluded_packages, policy)


def _strings(value, where: str, check=None) -> tuple:
    if not isinstance(value, list):
        raise ConfigError(where, "expected a list of strings")
    for i, item in enumerate(value):
        if not isinstance(item, str) or not item:
            raise ConfigError(f"{where}[{i}]", "expected a non-empty string")
        if check is not None and not check(item):
            raise ConfigError(f"{where}[{i}]", f"invalid value {item!r}")
    return tuple(value)


def _client(raw, i: int, base: Path) -> ClientConfig:
    where = f"clients[{i}]"
    if not isinstance(raw, dict):
        raise ConfigError(where, "expected an object")
    for key in sorted(set(raw) - _CLIENT_KEYS):
        raise ConfigError(f"{where}.{key}", "unknown field")
    for key in ("name", "path"):
        if not isinstance(raw.get(key), str) or not raw[key]:
            raise ConfigError(f"{where}.{key}", "required non-empty string")
    template = raw.get("urlTemplate")
    if template is not None:
        if not isinstance(template, str):
            raise ConfigError(f"{where}.urlTemplate", "expected a string")
        missing = [p for p in REQUIRED_PLACEHOLDERS if p not in template]
        if missing:
            raise ConfigError(f"{where}.urlTemplate", f"missing placeholder {missing[0]}")
    ref = raw.get("ref", "HEAD")
    if not isinstance(ref, str) or not ref:
        raise ConfigError(f"{where}.ref", "expected a non-empty string")
    return ClientConfig(raw["name"], base / raw["path"], template, ref)


def parse_config(data, base_dir=".") -> Config:
    """Validate a decoded JSON document; client paths are taken relative to ``base_dir``."""
    if not isinstance(data, dict):
        raise ConfigError("", "top level must be an object")
    for key in sorted(set(data) - _TOP_KEYS):
        raise ConfigError(key, "unknown field")
    raw_clients = data.get("clients", [])
    if not isinstance(raw_clients, list):
        raise ConfigError("clients", "expected a list")
    base = Path(base_dir)
    clients = []
    seen = set()
    for i, raw in enumerate(raw_clients):
        c = _client(raw, i, base)
        if c.name in seen:
            raise ConfigError(f"clients[{i}].name", f"duplicate client name {c.name!r}")
        seen.add(c.name)
        clients.append(c)
    annotations = _strings(data.get("excludedAnnotations", []), "excludedAnnotations", _IDENT.match)
    packages = _strings(data.get("excludedPackages", []), "excludedPackages")
    fail_on = data.get("failOn", "impact")
    if fail_on not in FAIL_ON:
        raise ConfigError("failOn", f"expected one of {', '.join(FAIL_ON)}, got {fail_on!r}")
    return Config(tuple(clients), annotations, packages, fail_on)


def load_config(path) -> Config:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError("", f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None
    return parse_config(data, path.parent)
