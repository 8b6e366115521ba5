"""Text format for structure equations.

A structure file is UTF-8 text with one ``dK = expr`` line per nonzero
differential, where ``expr`` is a signed sum of terms ``c*ij`` (``c`` an
integer or ``p/q``, omitted when 1) and ``ij`` stands for w^i ^ w^j with
1 <= i < j <= 5.  ``0`` denotes the zero form.  Further line kinds:

* ``name: <label>`` sets the instance label;
* ``# ...`` comments and blank lines are ignored;
* an ``[expected]`` line opens a block of ``key = value`` regression
  expectations (classification flags, ``jacobi``, ``adapted``, the scalars
  ``s``, ``lambda``, ``mu``, ``phi1``..``phi3`` and ``f11``..``f33``).

Example::

    name: heisenberg
    d5 = -2*12 - 2*34
    [expected]
    contact_hypo = true
    s = -4
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import DIM, Form, format_form
from .lie import Coframe5, validate_jacobi

_DLINE = re.compile(r"\s*d(\S*?)\s*=(.*)$")
_TERM = re.compile(r"""
    \s*(?P<sign>[+-])?\s*
    (?:(?P<coef>\d+(?:\s*/\s*\d+)?)\s*\*\s*)?
    (?P<idx>\d+)\s*
""", re.VERBOSE)
_KEY = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?$")


class StructureFileError(ValueError):
    """Malformed input; ``line`` and ``column`` are 1-based (0 when not tied to a position)."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class StructureFile:
    """Parsed contents: the coframe plus any ``[expected]`` entries (raw strings)."""

    coframe: Coframe5
    expected: dict[str, str] = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.coframe.name


def _parse_expr(text: str, line: int, offset: int) -> Form:
    """Parse the right-hand side ``text`` whose first character sits at column ``offset``."""
    stripped = text.strip()
    if not stripped:
        raise StructureFileError("empty expression", line, offset + len(text) + 1)
    if stripped == "0":
        return Form.zero(2)
    coeffs: dict[tuple[int, int], Fraction] = {}
    pos = 0
    first = True
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        col = offset + pos + (len(text[pos:]) - len(text[pos:].lstrip())) + 1
        if not m or m.end() == pos:
            raise StructureFileError(f"expected a term such as '2*13' or '-1/2*45', got {text[pos:].strip()!r}",
                                     line, col)
        if m.group("sign") is None and not first:
            raise StructureFileError("missing '+' or '-' between terms", line, col)
        coef = Fraction(1)
        if m.group("coef") is not None:
            raw = m.group("coef").replace(" ", "")
            num, _, den = raw.partition("/")
            if den and int(den) == 0:
                raise StructureFileError("zero denominator", line, offset + m.start("coef") + 1)
            coef = Fraction(int(num), int(den) if den else 1)
        if m.group("sign") == "-":
            coef = -coef
        idx = m.group("idx")
        idx_col = offset + m.start("idx") + 1
        if text[m.end():].startswith("*"):
            raise StructureFileError(f"expected a term such as '2*13', got a dangling coefficient {idx!r}",
                                     line, idx_col)
        if len(idx) != 2:
            raise StructureFileError(f"index pair must be two digits, got {idx!r}", line, idx_col)
        i, j = int(idx[0]), int(idx[1])
        for k, v in enumerate((i, j)):
            if not 1 <= v <= DIM:
                raise StructureFileError(f"index {v} out of range 1..{DIM}", line, idx_col + k)
        if i >= j:
            raise StructureFileError(f"indices must increase, got {idx!r}", line, idx_col)
        key = (i - 1, j - 1)
        coeffs[key] = coeffs.get(key, Fraction(0)) + coef
        pos = m.end()
        first = False
    return Form(2, coeffs)


def parse_structure_text(text: str, name: str = "", check_jacobi: bool = True) -> StructureFile:
    """Parse structure-file text; ``name`` is the fallback label when the text has no ``name:`` line."""
    images: dict[int, Form] = {}
    lines_of: dict[int, int] = {}
    expected: dict[str, str] = {}
    in_expected = False
    label = name
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        lead = len(body) - len(body.lstrip()) + 1
        content = body.strip()
        if content == "[expected]":
            in_expected = True
            continue
        if in_expected:
            key, eq, value = content.partition("=")
            key, value = key.strip(), value.strip()
            if not eq or not _KEY.match(key) or not value:
                raise StructureFileError("expected 'key = value' in [expected] block", lineno, lead)
            expected[key] = value
            continue
        if content.startswith("name:"):
            label = content[5:].strip()
            continue
        m = _DLINE.match(body)
        if not m:
            raise StructureFileError("expected 'dK = expression'", lineno, lead)
        k_text = m.group(1)
        if not k_text.isdigit() or len(k_text) != 1:
            raise StructureFileError(f"bad differential label 'd{k_text}'", lineno, m.start(1) + 1)
        k = int(k_text)
        if not 1 <= k <= DIM:
            raise StructureFileError(f"index {k} out of range 1..{DIM}", lineno, m.start(1) + 1)
        if k in images:
            raise StructureFileError(f"d{k} already given on line {lines_of[k]}", lineno, lead)
        images[k] = _parse_expr(m.group(2), lineno, m.start(2))
        lines_of[k] = lineno
    cf = Coframe5.from_dict(images, label)
    if check_jacobi:
        ok, bad = validate_jacobi(cf)
        if not ok:
            index, residue = bad
            raise StructureFileError(f"Jacobi identity fails: d(dw^{index + 1}) = {format_form(residue)}",
                                     lines_of.get(index + 1, 0), 1 if index + 1 in lines_of else 0)
    return StructureFile(cf, expected)


def parse_structure_file(text: str, name: str = "") -> Coframe5:
    """Coframe described by ``text``; raises :class:`StructureFileError` on any defect."""
    return parse_structure_text(text, name).coframe


def format_structure(cf: Coframe5, expected: dict[str, str] | None = None) -> str:
    """Canonical text of ``cf``; parsing it returns an equal coframe."""
    lines = [f"name: {cf.name}"] if cf.name else []
    for k, f in enumerate(cf.d_images, start=1):
        if not f.is_zero():
            lines.append(f"d{k} = {format_form(f)}")
    if expected:
        lines.append("[expected]")
        lines.extend(f"{k} = {v}" for k, v in expected.items())
    return "\n".join(lines) + "\n"


def parse_rational(text: str) -> Fraction:
    """Exact value of ``"p"`` or ``"p/q"``."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(text)


__all__ = [
    "StructureFile",
    "StructureFileError",
    "format_structure",
    "parse_rational",
    "parse_structure_file",
    "parse_structure_text",
]
