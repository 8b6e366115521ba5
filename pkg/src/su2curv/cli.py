"""Command-line entry point ``su2curv``.

Exit status: 0 on success, 1 when a verification or expectation fails, 2 for
input errors (unreadable or malformed files, unknown instances, Jacobi
failures).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import catalog
from .curvature import CheckResult
from .report import LEVELS, build_report, check_expected, render_text
from .structfile import StructureFileError, parse_structure_text

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2
COMMANDS = LEVELS + ("catalog",)


class InputError(Exception):
    """Bad command-line input; carries an optional machine-readable payload."""

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {"error": {"message": message}}


def _resolve(target: str):
    """(coframe, expected) for a file path or a catalog name."""
    if os.path.exists(target):
        try:
            with open(target, encoding="utf-8") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise InputError(f"{target}: cannot read: {exc}") from None
        default = os.path.splitext(os.path.basename(target))[0]
        try:
            parsed = parse_structure_text(text, default)
        except StructureFileError as exc:
            where = f":{exc.line}:{exc.column}" if exc.line else ""
            raise InputError(f"{target}{where}: {exc.message}", {
                "name": default,
                "error": {"message": exc.message, "line": exc.line, "column": exc.column},
            }) from None
        return parsed.coframe, parsed.expected
    if target in catalog.CATALOG:
        loaded = catalog.load_verified(target)
        return loaded.coframe, loaded.expected
    raise InputError(f"{target!r} is neither a readable file nor a catalog instance "
                     f"(known: {', '.join(catalog.names())})")


def _catalog_command(target: str | None, as_json: bool) -> tuple[object, int]:
    chosen = [target] if target else catalog.names()
    if target and target not in catalog.CATALOG:
        raise InputError(f"no catalog instance named {target!r}")
    rows = []
    for name in chosen:
        loaded = catalog.load_verified(name)
        e = loaded.entry
        rows.append({"name": e.name, "tags": list(e.tags), "provenance": e.provenance, "text": e.text,
                     "checks": len(loaded.verification.results), "verified": loaded.verification.ok})
    if as_json:
        return {"instances": rows}, EXIT_OK
    lines = []
    for row in rows:
        lines.append(f"{row['name']}  [{', '.join(row['tags'])}]  verified: {row['checks']} checks passed")
        lines.append(f"  {row['provenance']}")
        if target:
            lines.append("")
            lines.append(row["text"].rstrip())
    return "\n".join(lines), EXIT_OK


def run_command(command: str, target: str | None, as_json: bool = False,
                check: bool = False) -> tuple[object, int]:
    """Run one command; returns (report dict or text, exit status)."""
    if command == "catalog":
        return _catalog_command(target, as_json)
    if not target:
        raise InputError(f"command {command!r} needs an instance name or file")
    cf, expected = _resolve(target)
    try:
        report = build_report(cf, command)
    except (ArithmeticError, ValueError, RuntimeError) as exc:
        raise RuntimeError(f"{cf.name or target}: {exc}") from exc
    status = EXIT_OK
    if not report["jacobi"]:
        status = EXIT_INPUT
    elif not report["adapted"]:
        status = EXIT_FAILED
    if any(not r["pass"] for r in report.get("verification", [])):
        status = max(status, EXIT_FAILED)
    if check:
        full = report if "curvature" in report else build_report(cf, "curvature")
        results: list[CheckResult] = check_expected(full, expected)
        report.setdefault("verification", []).extend(r.as_dict() for r in results)
        if any(not r.passed for r in results):
            status = max(status, EXIT_FAILED)
    return (report if as_json else render_text(report)), status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su2curv",
        description="Torsion, classification and curvature of SU(2)-structures on 5-dimensional Lie algebras.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("target", nargs="?", help="structure file or catalog instance name")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--check-expected", action="store_true",
                        help="compare against the [expected] block of the input")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, status = run_command(args.command, args.target, args.json, args.check_expected)
    except InputError as exc:
        if args.json:
            print(json.dumps(exc.payload, indent=2))
        print(f"su2curv: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RuntimeError as exc:  # includes catalog.CatalogError
        print(f"su2curv: {exc}", file=sys.stderr)
        return EXIT_FAILED
    print(json.dumps(out, indent=2) if args.json else out)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
