"""``breakscope`` command line: ``delta``, ``analyze`` and ``check``.

Exit codes: 0 clean, 1 policy violated, 2 usage or configuration error,
3 analysis error (library parse failure, duplicate types, inheritance cycle).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .apimodel import ModelError
from .config import FAIL_ON, Config, ConfigError, load_config
from .oracle import check_client
from .pipeline import Analysis, analyze, load_api
from .report import BadTemplate, Report, build_report, render_json, render_markdown
from .syntax import MiniJSyntaxError, parse_tree

EXIT_OK, EXIT_POLICY, EXIT_USAGE, EXIT_ANALYSIS = 0, 1, 2, 3


class UsageError(Exception):
    pass


def policy_exit(report: Report, fail_on: str, impact_known: bool = True) -> int:
    """Exit code for a finished analysis.

    Without impact information (the ``delta`` command, or no configured
    clients) the ``impact`` policy degrades to ``breaking``.
    """
    if fail_on == "never":
        return EXIT_OK
    if fail_on == "breaking" or not impact_known:
        return EXIT_POLICY if report.stats.breaking_changes else EXIT_OK
    return EXIT_POLICY if report.stats.broken_locations else EXIT_OK


def _directory(path: str, what: str) -> Path:
    p = Path(path)
    if not p.is_dir():
        raise UsageError(f"{what} {path} is not a directory")
    return p


def _render(report: Report, fmt: str, config: Optional[Config]) -> str:
    return render_json(report) if fmt == "json" else render_markdown(report, config)


def _write_outputs(report: Report, out: Path, config: Optional[Config]) -> None:
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.md").write_text(render_markdown(report, config), encoding="utf-8")
    (out / "report.json").write_text(render_json(report), encoding="utf-8")


def _emit(text: str, quiet: bool) -> None:
    if not quiet:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_delta(args) -> int:
    config = load_config(args.config) if args.config else Config()
    config = config.with_fail_on(args.fail_on)
    old = _directory(args.old, "old library")
    new = _directory(args.new, "new library")
    result = analyze(old, new, {}, config.exclusions, old.name or "old", new.name or "new")
    report = build_report(result, config)
    if args.out:
        _write_outputs(report, Path(args.out), config)
    _emit(_render(report, args.format, config), args.quiet)
    return policy_exit(report, config.fail_on, impact_known=False)


def run_analysis(old: Path, new: Path, config: Config) -> Analysis:
    for c in config.clients:
        if not c.path.is_dir():
            raise UsageError(f"client {c.name}: {c.path} is not a directory")
    return analyze(old, new, {c.name: c.path for c in config.clients}, config.exclusions,
                   old.name or "old", new.name or "new")


def cmd_analyze(args) -> int:
    config = load_config(args.config).with_fail_on(args.fail_on)
    old = _directory(args.old, "old library")
    new = _directory(args.new, "new library")
    result = run_analysis(old, new, config)
    report = build_report(result, config)
    _write_outputs(report, Path(args.out), config)
    for client in result.clients:
        for line in client.errors:
            print(f"{client.name} ({client.status}): {line}", file=sys.stderr)
    _emit(_render(report, args.format, config), args.quiet)
    return policy_exit(report, config.fail_on, impact_known=bool(config.clients))


def cmd_check(args) -> int:
    lib = _directory(args.lib, "library")
    client = _directory(args.client, "client")
    api = load_api(lib)
    diagnostics = check_client(parse_tree(client), api)
    _emit("".join(f"{d}\n" for d in diagnostics), args.quiet or not diagnostics)
    return EXIT_POLICY if diagnostics else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("md", "json"), default="md", help="result stream format")
    common.add_argument("--out", help="directory receiving report.md and report.json")
    common.add_argument("--fail-on", choices=FAIL_ON, help="override the configured failure policy")
    common.add_argument("--quiet", action="store_true", help="do not print the result")

    parser = argparse.ArgumentParser(prog="breakscope",
                                     description="Detect breaking changes between two library versions "
                                                 "and their impact on client code.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", parents=[common], help="list breaking changes between two versions")
    p.add_argument("old")
    p.add_argument("new")
    p.add_argument("--config", help="configuration file (exclusions, failOn)")
    p.set_defaults(run=cmd_delta)

    p = sub.add_parser("analyze", parents=[common], help="compute the impact on configured clients")
    p.add_argument("old")
    p.add_argument("new")
    p.add_argument("config")
    p.set_defaults(run=cmd_analyze)

    p = sub.add_parser("check", parents=[common], help="type-check a client against a library")
    p.add_argument("lib")
    p.add_argument("client")
    p.set_defaults(run=cmd_check)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze" and args.out is None:
        args.out = "."
    try:
        return args.run(args)
    except (UsageError, ConfigError, BadTemplate) as exc:
        print(f"breakscope: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MiniJSyntaxError, ModelError) as exc:
        print(f"breakscope: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS


if __name__ == "__main__":
    sys.exit(main())
