"""Five-dimensional Lie algebras given by their structure equations dw^i."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exterior import DIM, Form, TangentVector, evaluate, sort_sign
from .linalg import inverse


class JacobiError(ValueError):
    """The prescribed differentials do not satisfy d^2 = 0."""

    def __init__(self, index: int, residue: Form):
        self.index = index
        self.residue = residue
        super().__init__(f"d(dw^{index + 1}) = {residue!r} is not zero")


@dataclass(frozen=True)
class Coframe5:
    """Structure equations of a Lie algebra in an adapted coframe.

    ``d_images[i]`` is the 2-form dw^{i+1}.
    """

    d_images: tuple[Form, ...]
    name: str = ""

    def __post_init__(self):
        images = tuple(self.d_images)
        if len(images) != DIM:
            raise ValueError(f"{DIM} differentials expected, got {len(images)}")
        for i, f in enumerate(images):
            if not isinstance(f, Form) or f.degree != 2:
                raise ValueError(f"dw^{i + 1} must be a 2-form")
        object.__setattr__(self, "d_images", images)

    @classmethod
    def from_dict(cls, images: dict[int, Form], name: str = "") -> "Coframe5":
        """Build from ``{label: dw^label}`` with 1-based labels; missing entries are 0."""
        return cls(tuple(images.get(i + 1, Form.zero(2)) for i in range(DIM)), name)

    def d(self, a: Form) -> Form:
        return exterior_derivative(a, self)


def exterior_derivative(a: Form, cf: Coframe5) -> Form:
    """d of a constant-coefficient form, by the Leibniz rule on monomials."""
    if a.degree == DIM:
        # no 6-forms in dimension 5
        return Form.zero(DIM)
    out = Form.zero(a.degree + 1)
    for key, val in a.items():
        for pos, i in enumerate(key):
            sign = -1 if pos % 2 else 1
            left = Form.monomial(key[:pos])
            right = Form.monomial(key[pos + 1:])
            out = out + (left ^ cf.d_images[i] ^ right) * (sign * val)
    return out


def jacobi_residues(cf: Coframe5) -> list[Form]:
    return [exterior_derivative(f, cf) for f in cf.d_images]


def validate_jacobi(cf: Coframe5) -> tuple[bool, tuple[int, Form] | None]:
    """(True, None) if d^2 w^i = 0 for all i, else (False, (first index, 3-form))."""
    for i, res in enumerate(jacobi_residues(cf)):
        if not res.is_zero():
            return False, (i, res)
    return True, None


def require_jacobi(cf: Coframe5) -> None:
    ok, diag = validate_jacobi(cf)
    if not ok:
        raise JacobiError(*diag)


@dataclass(frozen=True)
class StructureConstants:
    """c[k, i, j] with [e_i, e_j] = c^k_ij e_k and c^k_ij = -dw^k(e_i, e_j)."""

    c: np.ndarray = field(repr=False)

    def bracket(self, i: int, j: int) -> list[Fraction]:
        return [self.c[k, i, j] for k in range(DIM)]

    def lowered(self) -> np.ndarray:
        """c_ijk = <[e_i, e_j], e_k> (orthonormal frame)."""
        return np.einsum("kij->ijk", self.c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return bool(np.all(self.c == other.c))


def structure_constants(cf: Coframe5) -> StructureConstants:
    c = np.full((DIM, DIM, DIM), Fraction(0), dtype=object)
    for k, dk in enumerate(cf.d_images):
        for i in range(DIM):
            for j in range(DIM):
                if i != j:
                    c[k, i, j] = -evaluate(dk, TangentVector.basis(i), TangentVector.basis(j))
    return StructureConstants(c)


def coframe_from_constants(sc: StructureConstants, name: str = "") -> Coframe5:
    """Inverse of :func:`structure_constants`."""
    images = []
    for k in range(DIM):
        images.append(Form(2, {(i, j): -sc.c[k, i, j] for i in range(DIM) for j in range(i + 1, DIM)}))
    return Coframe5(tuple(images), name)


def change_coframe(cf: Coframe5, matrix: Sequence[Sequence[int | Fraction]], name: str = "") -> Coframe5:
    """Structure equations in the new coframe w'^a = sum_b A[a][b] w^b.

    ``matrix`` must be invertible over the rationals.
    """
    A = [[Fraction(x) for x in row] for row in matrix]
    Ainv = inverse(A)

    def to_new(form: Form) -> Form:
        # substitute w^b = sum_a Ainv[b][a] w'^a
        out = Form.zero(form.degree)
        for key, val in form.items():
            term = Form.scalar(val)
            for b in key:
                term = term ^ Form.from_vector(Ainv[b][a] for a in range(DIM))
            out = out + term
        return out

    images = []
    for a in range(DIM):
        dw_old = Form.zero(2)
        for b in range(DIM):
            if A[a][b]:
                dw_old = dw_old + cf.d_images[b] * A[a][b]
        images.append(to_new(dw_old))
    return Coframe5(tuple(images), name or cf.name)


__all__ = [
    "Coframe5",
    "JacobiError",
    "StructureConstants",
    "change_coframe",
    "coframe_from_constants",
    "exterior_derivative",
    "jacobi_residues",
    "require_jacobi",
    "structure_constants",
    "validate_jacobi",
]
