"""Built-in instances.

Each entry is stored as structure-file text together with a provenance note.
Nothing about an entry is trusted: :func:`load` parses the text, runs the full
verification harness and checks the ``[expected]`` block, and refuses the
instance if anything fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .curvature import CALIBRATION_INSTANCES, VerificationReport, verify_all
from .lie import Coframe5
from .report import build_report, check_expected
from .structfile import StructureFileError, parse_structure_text

_NO_FLAGS = dict.fromkeys(
    ("hypo", "contact_hypo", "nearly_hypo", "double_hypo", "sasaki_einstein_structure", "half_flat_cone",
     "kahler_cone"), "false")


def _expected(flags: tuple[str, ...], s: str, lam: str, mu: str) -> str:
    values = dict(_NO_FLAGS)
    values.update(dict.fromkeys(flags, "true"))
    values.update({"s": s, "lambda": lam, "mu": mu})
    return "[expected]\n" + "".join(f"{k} = {v}\n" for k, v in values.items())


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    text: str
    provenance: str
    tags: tuple[str, ...] = ()


class CatalogError(RuntimeError):
    """A built-in entry failed its load-time verification."""


_ENTRIES = (
    CatalogEntry(
        "abelian",
        "name: abelian\n" + _expected(("hypo",), "0", "0", "0"),
        "The abelian Lie algebra R^5. All structure forms are closed, so every torsion "
        "component vanishes and the metric is flat.",
        ("nilpotent",),
    ),
    CatalogEntry(
        "heisenberg",
        "name: heisenberg\nd5 = -2*12 - 2*34\n"
        + _expected(("hypo", "contact_hypo", "kahler_cone"), "-4", "-8", "4"),
        "Five-dimensional Heisenberg algebra (0,0,0,0,12+34) with its standard left-invariant "
        "Sasakian structure, the basic Sasakian nilmanifold (see Boyer and Galicki, Sasakian "
        "Geometry, Oxford 2008). Contact-Hypo with f23 = 0.",
        ("nilpotent", "contact-hypo"),
    ),
    CatalogEntry(
        "nil-12",
        "name: nil-12\nd2 = 15\n" + _expected(("hypo",), "-1/2", "0", "-1/2"),
        "Nilpotent algebra (0,0,0,0,12), the product of the three-dimensional Heisenberg algebra "
        "with R^2. Hypo structures on five-dimensional nilpotent algebras were classified by Conti "
        "and Salamon (Generalized Killing spinors in dimension 5, Trans. AMS 359, 2007). Here w^2 "
        "and w^5 of the usual basis are swapped, which makes sigma_2 and sigma_3 nonzero. The "
        "coframe came from a search over signed permutations and is certified by re-verification.",
        ("nilpotent", "hypo", "sigma"),
    ),
    CatalogEntry(
        "nil-12-13",
        "name: nil-12-13\nd2 = -15\nd4 = -35\n" + _expected(("hypo",), "-1", "0", "-1"),
        "Nilpotent algebra (0,0,0,12,13) in Salamon's notation, which carries hypo structures "
        "(Conti and Salamon, Trans. AMS 359, 2007). Adapted coframe obtained from the usual basis "
        "by the signed permutation w'1 = w2, w'2 = w4, w'3 = w3, w'4 = w5, w'5 = w1, found by "
        "search and certified by re-verification.",
        ("nilpotent", "hypo", "sigma"),
    ),
    CatalogEntry(
        "nil-12-13-14",
        "name: nil-12-13-14\nd2 = 45\nd3 = -15\nd4 = 35\n" + _expected(("hypo",), "-3/2", "0", "-3/2"),
        "Nilpotent algebra (0,0,12,13,14) in Salamon's notation, which carries hypo structures "
        "(Conti and Salamon, Trans. AMS 359, 2007). Adapted coframe w'1 = w2, w'2 = w5, w'3 = w3, "
        "w'4 = -w4, w'5 = w1, found by a signed-permutation search and certified by re-verification.",
        ("nilpotent", "hypo", "sigma"),
    ),
    CatalogEntry(
        "hyperbolic",
        "name: hyperbolic\nd2 = 12\nd3 = 13\nd4 = 14\nd5 = 15\n" + _expected((), "-20", "-16", "-4"),
        "Real hyperbolic space H^5 as the solvable group with [e1, ei] = -ei for i = 2..5 "
        "(Milnor, Curvatures of left invariant metrics on Lie groups, Adv. Math. 21, 1976). "
        "Constant curvature -1, so Ric = -4g. All four nu_i are nonzero.",
        ("solvable", "nu4", "einstein"),
    ),
    CatalogEntry(
        "calib-solvable",
        "name: calib-solvable\nd1 = -3/5*15\nd2 = -8/5*12 - 6/5*25\nd3 = 4/5*13 + 3/5*35\n"
        "d4 = -12/5*14 - 9/5*45\nd5 = -4/5*15\n" + _expected((), "-40", "-157/5", "-43/5"),
        "Almost abelian solvable algebra dw^i = a_i w^5 ^ w^i with a = (1, 2, -1, 3), rewritten "
        "in the coframe rotated by the rational rotation (cos, sin) = (3/5, 4/5) in the "
        "(w1, w5)-plane. Constructed for this package so that every nu_i and sigma_1..sigma_3 is "
        "nonzero. It pins the codifferential sign, the symmetric-product normalisation, the sign "
        "of Phi_4 and both Phi_1 readings.",
        ("solvable", "nu4", "sigma", "calibration"),
    ),
    CatalogEntry(
        "calib-nilpotent",
        "name: calib-nilpotent\nd1 = -12/25*14 - 4/5*23 + 16/25*45\nd3 = 3/5*12 - 4/5*25\n"
        "d4 = 3/5*13 - 4/5*35\nd5 = 9/25*14 + 3/5*23 - 12/25*45\n" + _expected((), "-2", "-7/5", "-3/5"),
        "Filiform nilpotent algebra (0,0,12,13,14+23) in Salamon's notation, rewritten in the "
        "coframe rotated by (3/5, 4/5) in the (w1, w5)-plane. Constructed for this package; "
        "all torsion classes are nonzero. It pins the f12 term of Phi_2.",
        ("nilpotent", "nu4", "sigma", "calibration"),
    ),
    CatalogEntry(
        "double-hypo-su2",
        "name: double-hypo-su2\nd1 = -3*25\nd2 = 3*15\nd5 = -4*12\n"
        + _expected(("hypo", "nearly_hypo", "double_hypo"), "16", "8", "8"),
        "su(2) + R^2, with e1, e2, e5 spanning su(2) and e3, e4 central. Found by an exact search "
        "of the double-Hypo torsion equations on Lie algebras. sigma_4 is nonzero, so s < 20.",
        ("double-hypo", "sigma"),
    ),
    CatalogEntry(
        "double-hypo-solvable",
        "name: double-hypo-solvable\nd1 = 3*23 - 3*25\nd2 = -3*13 + 3*15\nd3 = 3*34\nd5 = -7*12 + 3*34\n"
        + _expected(("hypo", "nearly_hypo", "double_hypo"), "-5", "-34", "29"),
        "Solvable double-Hypo algebra found by an exact search of the double-Hypo torsion "
        "equations. sigma_4 is nonzero and the metric has negative scalar curvature.",
        ("solvable", "double-hypo", "sigma"),
    ),
    CatalogEntry(
        "contact-hypo-sigma",
        "name: contact-hypo-sigma\nd1 = 14\nd2 = 12 - 2*13 - 3*15 - 24 + 3*45\n"
        "d3 = -13 - 3*15 - 2*24 + 34 + 3*45\nd4 = 14\nd5 = -2*12 - 2*34\n"
        + _expected(("hypo", "contact_hypo"), "-46", "-32", "-14"),
        "Contact-Hypo algebra with sigma_2 and sigma_3 nonzero and f23 = -3. Found by sparsifying "
        "a numerical solution of the contact-Hypo and Jacobi equations and then solving the "
        "remaining polynomial system exactly.",
        ("solvable", "contact-hypo", "sigma"),
    ),
)

CATALOG: dict[str, CatalogEntry] = {e.name: e for e in _ENTRIES}


def names() -> list[str]:
    return list(CATALOG)


def entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"no catalog instance named {name!r}") from None


@dataclass(frozen=True)
class LoadedInstance:
    entry: CatalogEntry
    coframe: Coframe5
    expected: dict[str, str]
    verification: VerificationReport


@lru_cache(maxsize=None)
def load_verified(name: str) -> LoadedInstance:
    """Parse and verify a catalog entry, raising :class:`CatalogError` on any failure."""
    e = entry(name)
    try:
        parsed = parse_structure_text(e.text, name)
    except StructureFileError as exc:
        raise CatalogError(f"catalog instance {name!r} does not parse: {exc}") from exc
    if parsed.name != name:
        raise CatalogError(f"{name}: text declares name {parsed.name!r}")
    report = verify_all(parsed.coframe)
    expectations = check_expected(build_report(parsed.coframe, "curvature"), parsed.expected)
    failures = report.failures + [r for r in expectations if not r.passed]
    if failures:
        detail = "; ".join(f"{r.check}: {r.detail}" if r.detail else r.check for r in failures)
        raise CatalogError(f"catalog instance {name!r} failed verification: {detail}")
    return LoadedInstance(e, parsed.coframe, dict(parsed.expected), report)


def load(name: str) -> Coframe5:
    """Verified coframe of the catalog entry ``name``."""
    return load_verified(name).coframe


def calibration_instances() -> dict[str, str]:
    """Switch name -> catalog instance pinning it."""
    return dict(CALIBRATION_INSTANCES)


__all__ = [
    "CATALOG",
    "CatalogEntry",
    "CatalogError",
    "LoadedInstance",
    "calibration_instances",
    "entry",
    "load",
    "load_verified",
    "names",
]
