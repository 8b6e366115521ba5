"""Splitting of the Levi-Civita connection along so(5) = su(2) + [[R^4]] + [R]_1 + [R]_2 + [R]_3.

``psi = theta + [[tau]] + [mu_1]_1 + [mu_2]_2 + [mu_3]_3`` with
``tau_i = T_ij w_j`` (i = 1..4) and ``mu_r = M^r_j w_j``.  The curvature splits
the same way through the D-quantities, whose coefficients S, T_ijk and N^r
rebuild the Riemann tensor.  On a Lie group every coefficient is constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .connection import (
    Connection,
    FormMatrix,
    mat_add,
    mat_d,
    mat_scale,
    mat_wedge,
    one_form,
    two_form_coeffs,
    zeros,
)
from .exterior import DIM, Form, wedge
from .lie import Coframe5
from .su2 import EPS, ETA, SymTensor, matrix_two_form


class DecompositionError(RuntimeError):
    pass


def bracket_tau(tau: list[Form]) -> FormMatrix:
    """[[tau]]_ij = eta_ijk tau_k."""
    return [[sum((tau[k] * ETA[i, j, k] for k in range(4)), Form.zero(tau[0].degree))
             for j in range(DIM)] for i in range(DIM)]


def bracket_r(r: int, mu: Form) -> FormMatrix:
    """([mu]_r)_ij = mu eps^r_ij."""
    return [[mu * EPS[r - 1, i, j] for j in range(DIM)] for i in range(DIM)]


def eps_contract(r: int, A: FormMatrix) -> Form:
    """eps^r_ij A_ij."""
    out = Form.zero(A[0][0].degree)
    for i in range(4):
        for j in range(4):
            if EPS[r - 1, i, j]:
                out = out + A[i][j] * EPS[r - 1, i, j]
    return out


def in_su2(A: FormMatrix) -> bool:
    if any(not eps_contract(r, A).is_zero() for r in (1, 2, 3)):
        return False
    return all(A[i][4].is_zero() and A[4][i].is_zero() for i in range(DIM))


@dataclass(frozen=True)
class ConnectionDecomposition:
    theta: tuple[tuple[Form, ...], ...]
    tau: tuple[Form, ...]  # tau_1..tau_4
    mu: tuple[Form, Form, Form]
    T: np.ndarray  # T[i, j], i < 4
    M: np.ndarray  # M[r-1, j]

    def theta_matrix(self) -> FormMatrix:
        return [list(row) for row in self.theta]

    def reassemble(self) -> FormMatrix:
        parts = [self.theta_matrix(), bracket_tau(list(self.tau))]
        parts += [bracket_r(r, self.mu[r - 1]) for r in (1, 2, 3)]
        return mat_add(*parts)

    def tau5(self) -> list[Form]:
        """tau as an R^5-valued 1-form (tau_1, .., tau_4, 0)."""
        return list(self.tau) + [Form.zero(1)]


def psi_decompose(conn: Connection) -> ConnectionDecomposition:
    psi = conn.psi_matrix()
    tau = [psi[i][4] for i in range(4)]
    mu = [eps_contract(r, psi) / 4 for r in (1, 2, 3)]
    rest = mat_add(psi, mat_scale(bracket_tau(tau), -1),
                   *[mat_scale(bracket_r(r, mu[r - 1]), -1) for r in (1, 2, 3)])
    if not in_su2(rest):
        raise DecompositionError("theta does not take values in su(2)")
    T = zeros(4, DIM)
    for i in range(4):
        T[i] = tau[i].vector()
    M = zeros(3, DIM)
    for r in range(3):
        M[r] = mu[r].vector()
    dec = ConnectionDecomposition(tuple(tuple(row) for row in rest), tuple(tau), tuple(mu), T, M)
    if dec.reassemble() != psi:
        raise DecompositionError("psi does not reassemble")
    return dec


def bracket_identities(dec: ConnectionDecomposition) -> list[str]:
    """Check [mu_r]_r^[[tau]] + [[tau]]^[mu_r]_r = [[ [mu_r]_r ^ tau ]] and
    [[tau]]^theta + theta^[[tau]] = [[theta ^ tau]]; returns failures."""
    failures = []
    tt = bracket_tau(list(dec.tau))
    tau5 = dec.tau5()
    theta = dec.theta_matrix()
    for r in (1, 2, 3):
        m = bracket_r(r, dec.mu[r - 1])
        lhs = mat_add(mat_wedge(m, tt), mat_wedge(tt, m))
        rhs = bracket_tau(_mat_vec(m, tau5)[:4])
        if lhs != rhs:
            failures.append(f"bracket identity 1 (r={r})")
    lhs = mat_add(mat_wedge(tt, theta), mat_wedge(theta, tt))
    rhs = bracket_tau(_mat_vec(theta, tau5)[:4])
    if lhs != rhs:
        failures.append("bracket identity 2")
    return failures


def _mat_vec(A: FormMatrix, v: list[Form]) -> list[Form]:
    return [sum((wedge(A[i][k], v[k]) for k in range(1, DIM)), wedge(A[i][0], v[0])) for i in range(DIM)]


@dataclass(frozen=True)
class DQuantities:
    d_theta: tuple[tuple[Form, ...], ...]
    d_tau: tuple[Form, ...]
    d_mu: tuple[Form, Form, Form]
    S: np.ndarray  # S[i, j, k, l]
    Tder: np.ndarray  # Tder[i, j, k], i < 4
    N: np.ndarray  # N[r-1, k, l]

    def riemann(self) -> np.ndarray:
        """R_ijkl = S_ijkl + eta_ijh T_hkl + eps^r_ij N^r_kl."""
        R = self.S.copy()
        R = R + np.einsum("ijh,hkl->ijkl", ETA[:, :, :4], self.Tder)
        R = R + np.einsum("rij,rkl->ijkl", EPS, self.N)
        return R


_QUAT = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


def d_quantities(dec: ConnectionDecomposition, cf: Coframe5) -> DQuantities:
    theta = dec.theta_matrix()
    tau = list(dec.tau)
    tt = bracket_tau(tau)
    extra = form_matrix_sum_r(tau)
    d_theta = mat_add(mat_d(theta, cf), mat_wedge(theta, theta), mat_wedge(tt, tt), mat_scale(extra, Fraction(1, 4)))
    tau5 = dec.tau5()
    conn_part = mat_add(theta, *[bracket_r(r, dec.mu[r - 1]) for r in (1, 2, 3)])
    rot = _mat_vec(conn_part, tau5)
    d_tau = [cf.d(tau[i]) + rot[i] for i in range(4)]
    d_mu = []
    for r in (1, 2, 3):
        s, t = _QUAT[r]
        val = cf.d(dec.mu[r - 1]) - tau_square(r, tau) / 4 - 2 * wedge(dec.mu[s - 1], dec.mu[t - 1])
        d_mu.append(val)

    S = zeros(DIM, DIM, DIM, DIM)
    for i in range(DIM):
        for j in range(DIM):
            S[i, j] = two_form_coeffs(d_theta[i][j])
    Tder = zeros(4, DIM, DIM)
    for i in range(4):
        Tder[i] = two_form_coeffs(d_tau[i])
    N = zeros(3, DIM, DIM)
    for r in range(3):
        N[r] = two_form_coeffs(d_mu[r])
    return DQuantities(tuple(tuple(row) for row in d_theta), tuple(d_tau), tuple(d_mu), S, Tder, N)


def tau_square(r: int, tau: list[Form]) -> Form:
    """eps^r_ij tau_i ^ tau_j."""
    out = Form.zero(2)
    for i in range(4):
        for j in range(4):
            if EPS[r - 1, i, j]:
                out = out + wedge(tau[i], tau[j]) * EPS[r - 1, i, j]
    return out


def form_matrix_sum_r(tau: list[Form]) -> FormMatrix:
    """sum_r [eps^r_ij tau_i ^ tau_j]_r."""
    return mat_add(*[bracket_r(r, tau_square(r, tau)) for r in (1, 2, 3)])


def curvature_reassembly(dq: DQuantities) -> FormMatrix:
    """D theta + [[D tau]] + sum_r [D mu_r]_r."""
    parts = [[list(row) for row in dq.d_theta], bracket_tau(list(dq.d_tau))]
    parts += [bracket_r(r, dq.d_mu[r - 1]) for r in (1, 2, 3)]
    return mat_add(*parts)


def tau_derivative_expansion(dec: ConnectionDecomposition) -> list[Form]:
    """D tau_i rebuilt from the S_ijk symbols of dT_ij = T_ik theta_kj + T_kj theta_ki + S_ijk w_k.

    With dT_ij = 0 on the group, S_ijk w_k = -(T_ik theta_kj + T_kj theta_ki) and
    D tau_i = (S_ijk - T_im T_lk eta_mjl - sum_r (T_il M^r_k eps^r_lj - T_lj M^r_k eps^r_il)) w_k ^ w_j.

    The last sign follows from D tau_i containing + eps^r_ik mu_r ^ tau_k.
    """
    T = np.vstack([dec.T, np.full((1, DIM), Fraction(0), dtype=object)])  # pad row 5
    Theta = zeros(DIM, DIM, DIM)
    theta = dec.theta_matrix()
    for a in range(DIM):
        for b in range(DIM):
            Theta[a, b] = theta[a][b].vector()
    M = dec.M
    out = []
    for i in range(4):
        X = zeros(DIM, DIM)  # X[k, j], coefficient of w_k ^ w_j
        for j in range(DIM):
            for k in range(DIM):
                s_ijk = -sum((T[i, l] * Theta[l, j, k] + T[l, j] * Theta[l, i, k] for l in range(DIM)), Fraction(0))
                quad = sum((T[i, m] * T[l, k] * ETA[m, j, l] for m in range(DIM) for l in range(4)), Fraction(0))
                mixed = sum((T[i, l] * M[r, k] * EPS[r, l, j] - T[l, j] * M[r, k] * EPS[r, i, l]
                             for r in range(3) for l in range(DIM)), Fraction(0))
                X[k, j] = s_ijk - quad - mixed
        out.append(matrix_two_form(2 * X))
    return out


def ricci_from_t_n(dq: DQuantities) -> tuple[SymTensor, Fraction]:
    """Ricci tensor and scalar curvature from the N^r and T_ijk coefficients only."""
    N, Td = dq.N, dq.Tder
    five = DIM - 1
    ric = zeros(DIM, DIM)
    trace_T = sum((Td[k, k, five] for k in range(4)), Fraction(0))
    # the displayed formula is evaluated on i <= j and mirrored: for i = 5, j <= 4 the
    # eta term cancels the N contribution and T_5j5 has no meaning
    for i in range(DIM):
        for j in range(i, DIM):
            val = Fraction(0)
            for r in range(3):
                for k in range(DIM):
                    val += EPS[r, i, k] * N[r, j, k] + EPS[r, j, k] * N[r, i, k]
                    for l in range(4):
                        val -= ETA[i, j, l] * EPS[r, l, k] * N[r, k, five]
            if i == j == five:
                val += trace_T
            if i < 4:
                val += Td[i, j, five]
            ric[i, j] = ric[j, i] = val
    s = 2 * sum((EPS[r, i, k] * N[r, i, k] for r in range(3) for i in range(DIM) for k in range(DIM)), Fraction(0))
    s += 2 * trace_T
    return SymTensor(ric), s
