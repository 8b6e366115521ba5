"""Levi-Civita connection of a left-invariant metric and its SU(2)-adapted splitting.

Conventions (orthonormal frame e_i, coframe w^i):

* ``gamma[i, j, k] = <nabla_{e_i} e_j, e_k>``, from the Koszul formula
  ``gamma_ijk = 1/2 (c_ijk - c_jki + c_kij)`` with ``c_ijk = <[e_i, e_j], e_k>``;
* the connection 1-forms are ``psi_ij(e_k) = gamma_kji``, so that
  ``dw_i = -psi_ij ^ w_j`` (first structure equation);
* the curvature 2-forms ``Psi = d psi + psi ^ psi = 1/2 R_ijkl w_k ^ w_l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exterior import DIM, Form, wedge
from .lie import Coframe5, StructureConstants, structure_constants

FormMatrix = list[list[Form]]


class LeviCivitaError(RuntimeError):
    """An identity that must hold for the Levi-Civita connection failed (internal error)."""


def zeros(*shape) -> np.ndarray:
    return np.full(shape, Fraction(0), dtype=object)


def form_matrix_zero(degree: int, n: int = DIM) -> FormMatrix:
    return [[Form.zero(degree) for _ in range(n)] for _ in range(n)]


def mat_wedge(A: FormMatrix, B: FormMatrix) -> FormMatrix:
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = wedge(A[i][0], B[0][j])
            for k in range(1, n):
                acc = acc + wedge(A[i][k], B[k][j])
            row.append(acc)
        out.append(row)
    return out


def mat_add(*mats: FormMatrix) -> FormMatrix:
    n = len(mats[0])
    return [[sum((m[i][j] for m in mats[1:]), mats[0][i][j]) for j in range(n)] for i in range(n)]


def mat_scale(A: FormMatrix, c) -> FormMatrix:
    return [[x * c for x in row] for row in A]


def mat_d(A: FormMatrix, cf: Coframe5) -> FormMatrix:
    return [[cf.d(x) for x in row] for row in A]


def mat_vec_wedge(A: FormMatrix, v: list[Form]) -> list[Form]:
    n = len(A)
    out = []
    for i in range(n):
        acc = wedge(A[i][0], v[0])
        for k in range(1, n):
            acc = acc + wedge(A[i][k], v[k])
        out.append(acc)
    return out


def two_form_coeffs(a: Form) -> np.ndarray:
    """X with a = 1/2 X_kl w_k ^ w_l, X antisymmetric."""
    X = zeros(DIM, DIM)
    for (k, l), c in a.items():
        X[k, l] = c
        X[l, k] = -c
    return X


def one_form(coeffs) -> Form:
    return Form.from_vector(coeffs)


@dataclass(frozen=True)
class Connection:
    gamma: np.ndarray
    psi: tuple[tuple[Form, ...], ...]

    def psi_matrix(self) -> FormMatrix:
        return [list(row) for row in self.psi]


def levi_civita(sc: StructureConstants) -> Connection:
    c = sc.lowered()
    gamma = zeros(DIM, DIM, DIM)
    for i in range(DIM):
        for j in range(DIM):
            for k in range(DIM):
                gamma[i, j, k] = (c[i, j, k] - c[j, k, i] + c[k, i, j]) / 2
    psi = tuple(tuple(one_form(gamma[:, j, i]) for j in range(DIM)) for i in range(DIM))
    conn = Connection(gamma, psi)
    for i in range(DIM):
        for j in range(DIM):
            if psi[i][j] != -psi[j][i]:
                raise LeviCivitaError(f"psi is not skew at ({i + 1}, {j + 1})")
    return conn


def structure_equation_residues(conn: Connection, cf: Coframe5) -> list[Form]:
    """dw_i + psi_ij ^ w_j for each i; all zero for a torsion-free connection."""
    ws = [Form.monomial([j]) for j in range(DIM)]
    rhs = mat_vec_wedge(conn.psi_matrix(), ws)
    return [cf.d_images[i] + rhs[i] for i in range(DIM)]


def connection_for(cf: Coframe5) -> Connection:
    conn = levi_civita(structure_constants(cf))
    for i, res in enumerate(structure_equation_residues(conn, cf)):
        if not res.is_zero():
            raise LeviCivitaError(f"first structure equation fails for w^{i + 1}: {res!r}")
    return conn


def curvature_forms(conn: Connection, cf: Coframe5) -> FormMatrix:
    psi = conn.psi_matrix()
    return mat_add(mat_d(psi, cf), mat_wedge(psi, psi))


def riemann_from_forms(Psi: FormMatrix) -> np.ndarray:
    """R[i, j, k, l] from Psi_ij = 1/2 R_ijkl w_k ^ w_l."""
    R = zeros(DIM, DIM, DIM, DIM)
    for i in range(DIM):
        for j in range(DIM):
            R[i, j] = two_form_coeffs(Psi[i][j])
    return R


def riemann_koszul(conn: Connection, sc: StructureConstants) -> np.ndarray:
    """Rm[a, b, c, d] = <R(e_a, e_b) e_c, e_d>, R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].

    For constant Christoffel symbols all terms are algebraic.
    """
    g = conn.gamma
    # nabla_{e_a} e_c = g[a, c, m] e_m
    Rm = zeros(DIM, DIM, DIM, DIM)
    for a in range(DIM):
        for b in range(DIM):
            br = sc.bracket(a, b)
            for cc in range(DIM):
                for d in range(DIM):
                    val = Fraction(0)
                    for m in range(DIM):
                        val += g[b, cc, m] * g[a, m, d] - g[a, cc, m] * g[b, m, d]
                        val -= br[m] * g[m, cc, d]
                    Rm[a, b, cc, d] = val
    return Rm


@dataclass(frozen=True)
class CurvatureOracle:
    riemann: np.ndarray  # Rm[a, b, c, d] = <R(e_a, e_b) e_c, e_d>
    ric: np.ndarray
    scalar: Fraction

    def frame_components(self) -> np.ndarray:
        """R_ijkl in the Psi convention: R_ijkl = Psi_ij(e_k, e_l) = <R(e_k, e_l) e_j, e_i>."""
        return np.einsum("klji->ijkl", self.riemann)


def curvature_oracle(conn: Connection, sc: StructureConstants) -> CurvatureOracle:
    Rm = riemann_koszul(conn, sc)
    # Ric(Y, Z) = sum_k <R(e_k, Y) Z, e_k>
    ric = zeros(DIM, DIM)
    for y in range(DIM):
        for z in range(DIM):
            ric[y, z] = sum((Rm[k, y, z, k] for k in range(DIM)), Fraction(0))
    s = sum((ric[i, i] for i in range(DIM)), Fraction(0))
    return CurvatureOracle(Rm, ric, s)


def first_bianchi_holds(Rm: np.ndarray) -> bool:
    for a in range(DIM):
        for b in range(DIM):
            for c in range(DIM):
                for d in range(DIM):
                    if Rm[a, b, c, d] + Rm[b, c, a, d] + Rm[c, a, b, d] != 0:
                        return False
    return True
