"""Lossless machine reports and their human-readable rendering.

Every rational is written as a string ``"p"`` or ``"p/q"`` so that JSON
consumers never see a float.  Field names are fixed::

    {name, jacobi, adapted,
     torsion: {nu, sigma, phi, f},
     flags: {...},
     curvature: {s, lambda, mu, ric},
     verification: [{check, pass, detail}]}

1-forms are lists of five components in the basis w^1..w^5; 2-forms are
objects mapping an index pair such as ``"14"`` to its coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .curvature import CALIBRATED, CheckResult, Conventions, ricci_via_torsion, verify_all
from .exterior import DIM, Form, format_form
from .lie import Coframe5, validate_jacobi
from .structfile import parse_rational
from .su2 import STANDARD, validate_adapted
from .torsion import TorsionForms, classify, extract_torsion

#: Commands in increasing order of how much they compute.
LEVELS = ("validate", "torsion", "classify", "curvature", "verify")


def rational(x) -> str:
    return str(Fraction(x))


def one_form_json(a: Form) -> list[str]:
    return [rational(a[(i,)]) for i in range(DIM)]


def two_form_json(a: Form) -> dict[str, str]:
    return {"".join(str(i + 1) for i in key): rational(v) for key, v in a.items()}


def torsion_json(t: TorsionForms) -> dict:
    return {
        "nu": [one_form_json(n) for n in t.nu],
        "sigma": [two_form_json(s) for s in t.sigma],
        "phi": [rational(p) for p in t.phi],
        "f": [[rational(x) for x in row] for row in t.f],
    }


def build_report(cf: Coframe5, level: str = "verify", conv: Conventions = CALIBRATED) -> dict:
    """Report on ``cf`` up to ``level`` (one of :data:`LEVELS`).

    Later sections are omitted when the Jacobi identity fails, since nothing
    downstream is defined then.
    """
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    depth = LEVELS.index(level)
    jacobi, bad = validate_jacobi(cf)
    adapted, problems = validate_adapted(STANDARD.forms())
    out: dict = {"name": cf.name, "jacobi": jacobi, "adapted": adapted}
    if not jacobi:
        index, residue = bad
        out["jacobi_failure"] = {"index": index + 1, "residue": format_form(residue)}
    if problems:
        out["adapted_failures"] = problems
    if not jacobi or depth < 1:
        return out
    t = extract_torsion(cf)
    out["torsion"] = torsion_json(t)
    if depth >= 2:
        out["flags"] = classify(t).as_dict()
    if depth >= 3:
        rr = ricci_via_torsion(t, cf, conv)
        out["curvature"] = {
            "s": rational(rr.s_oracle),
            "lambda": rational(rr.lam),
            "mu": rational(rr.mu),
            "ric": [[rational(x) for x in row] for row in rr.ric_oracle.rows()],
        }
    if depth >= 4:
        out["verification"] = [r.as_dict() for r in verify_all(cf, conv).results]
    return out


# ---------------------------------------------------------------- expectations

def _lookup(report: dict, key: str):
    """Actual value behind an ``[expected]`` key, or ``KeyError`` when the report lacks it."""
    if key in ("jacobi", "adapted"):
        return report[key]
    if key in report.get("flags", {}):
        return report["flags"][key]
    if key in ("s", "lambda", "mu"):
        return report["curvature"][key]
    if len(key) == 4 and key.startswith("phi") and key[3] in "123":
        return report["torsion"]["phi"][int(key[3]) - 1]
    if len(key) == 3 and key[0] == "f" and key[1] in "123" and key[2] in "123":
        return report["torsion"]["f"][int(key[1]) - 1][int(key[2]) - 1]
    raise KeyError(key)


def check_expected(report: dict, expected: dict[str, str]) -> list[CheckResult]:
    """Compare ``[expected]`` entries against ``report``; unknown keys fail."""
    results = []
    for key, want in expected.items():
        name = f"expected {key}"
        try:
            got = _lookup(report, key)
        except KeyError:
            results.append(CheckResult(name, False, f"no value for {key!r} in this report"))
            continue
        if isinstance(got, bool):
            got = str(got).lower()
            ok = want.lower() == got
        else:
            try:
                ok = parse_rational(want) == parse_rational(got)
            except ValueError:
                ok = False
        results.append(CheckResult(name, ok, "" if ok else f"expected {want}, got {got}"))
    return results


def parse_report_rationals(report: dict) -> dict:
    """Copy of ``report`` with every rational string turned back into a Fraction."""
    out = dict(report)
    if "torsion" in report:
        t = report["torsion"]
        out["torsion"] = {
            "nu": [[Fraction(c) for c in n] for n in t["nu"]],
            "sigma": [{k: Fraction(v) for k, v in s.items()} for s in t["sigma"]],
            "phi": [Fraction(p) for p in t["phi"]],
            "f": [[Fraction(x) for x in row] for row in t["f"]],
        }
    if "curvature" in report:
        c = report["curvature"]
        out["curvature"] = {k: Fraction(c[k]) for k in ("s", "lambda", "mu")}
        out["curvature"]["ric"] = [[Fraction(x) for x in row] for row in c["ric"]]
    return out


# ---------------------------------------------------------------- text rendering

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _sub(n: int | str) -> str:
    return str(n).translate(_SUB)


def _form_text(coeffs: Iterable[str] | dict[str, str], degree: int) -> str:
    if degree == 1:
        terms = {(i,): Fraction(c) for i, c in enumerate(coeffs) if Fraction(c)}
    else:
        terms = {tuple(int(ch) - 1 for ch in k): Fraction(v) for k, v in coeffs.items()}
    return format_form(Form(degree, terms))


def render_text(report: dict) -> str:
    """Plain-text view using the symbol names ν, σ, φ, f."""
    lines = [f"instance: {report['name'] or '(unnamed)'}",
             f"jacobi: {'ok' if report['jacobi'] else 'FAILED'}",
             f"adapted: {'ok' if report['adapted'] else 'FAILED'}"]
    if "jacobi_failure" in report:
        jf = report["jacobi_failure"]
        lines.append(f"  d(dw{_sub(jf['index'])}) = {jf['residue']}")
    for p in report.get("adapted_failures", []):
        lines.append(f"  {p}")
    if "torsion" in report:
        t = report["torsion"]
        lines.append("torsion:")
        for i, n in enumerate(t["nu"], start=1):
            lines.append(f"  ν{_sub(i)} = {_form_text(n, 1)}")
        for i, s in enumerate(t["sigma"], start=1):
            lines.append(f"  σ{_sub(i)} = {_form_text(s, 2)}")
        lines.append("  " + ", ".join(f"φ{_sub(i)} = {p}" for i, p in enumerate(t["phi"], start=1)))
        for r, row in enumerate(t["f"], start=1):
            lines.append("  " + ", ".join(f"f{_sub(r)}{_sub(j)} = {x}" for j, x in enumerate(row, start=1)))
    if "flags" in report:
        lines.append("flags:")
        lines.extend(f"  {k}: {'true' if v else 'false'}" for k, v in report["flags"].items())
    if "curvature" in report:
        c = report["curvature"]
        lines.append("curvature:")
        lines.append(f"  s = {c['s']}, λ = {c['lambda']}, μ = {c['mu']}")
        width = max(len(x) for row in c["ric"] for x in row)
        lines.append("  Ric =")
        lines.extend("    [" + "  ".join(x.rjust(width) for x in row) + "]" for row in c["ric"])
    if "verification" in report:
        v = report["verification"]
        failed = [r for r in v if not r["pass"]]
        lines.append(f"verification: {len(v) - len(failed)}/{len(v)} passed")
        for r in v:
            mark = "pass" if r["pass"] else "FAIL"
            lines.append(f"  [{mark}] {r['check']}" + (f": {r['detail']}" if r["detail"] else ""))
    return "\n".join(lines)


__all__ = [
    "LEVELS",
    "build_report",
    "check_expected",
    "parse_report_rationals",
    "render_text",
    "torsion_json",
]
