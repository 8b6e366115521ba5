"""Exact torsion and curvature of SU(2)-structures on five-dimensional Lie algebras.

The structure forms are always the standard model in the given coframe, so
the metric is the identity and all geometry lives in the structure equations
dw^i.  Arithmetic is exact throughout (:class:`fractions.Fraction`).
"""

from .catalog import CatalogError, load
from .curvature import CALIBRATED, Conventions, RicciReport, VerificationReport, ricci_via_torsion, verify_all
from .exterior import Form, TangentVector, format_form, w
from .lie import Coframe5, JacobiError, structure_constants, validate_jacobi
from .structfile import StructureFileError, format_structure, parse_structure_file
from .torsion import ClassificationReport, TorsionForms, classify, extract_torsion

__version__ = "0.1.0"

__all__ = [
    "CALIBRATED",
    "CatalogError",
    "ClassificationReport",
    "Coframe5",
    "Conventions",
    "Form",
    "JacobiError",
    "RicciReport",
    "StructureFileError",
    "TangentVector",
    "TorsionForms",
    "VerificationReport",
    "classify",
    "extract_torsion",
    "format_form",
    "format_structure",
    "load",
    "parse_structure_file",
    "ricci_via_torsion",
    "structure_constants",
    "validate_jacobi",
    "verify_all",
    "w",
]
