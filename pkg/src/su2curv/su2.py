"""The SU(2)-structure of the standard model and its operator algebra.

In an adapted coframe the structure forms are always

    alpha = w^5,  omega_1 = w^12 + w^34,  omega_2 = w^13 - w^24,  omega_3 = w^14 + w^23,

the induced metric is the identity and the Reeb field is e_5.  Everything
here is combinatorial in that coframe.  The index ``r`` of the three
2-forms is 1-based (r = 1, 2, 3) as in the notation; tensor indices are
0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

import numpy as np

from .exterior import (
    ALPHA,
    DIM,
    REEB,
    Form,
    TangentVector,
    hodge_star,
    is_transverse,
    one_form_to_vector,
    sort_sign,
    transverse_part,
    vector_to_one_form,
    wedge,
)

TRANSVERSE = range(4)


def _zeros(*shape) -> np.ndarray:
    return np.full(shape, Fraction(0), dtype=object)


def _epsilon() -> np.ndarray:
    eps = _zeros(3, DIM, DIM)
    for r, (i, j, sign) in [
        (0, (0, 1, 1)), (0, (2, 3, 1)),
        (1, (0, 2, 1)), (1, (1, 3, -1)),
        (2, (0, 3, 1)), (2, (1, 2, 1)),
    ]:
        eps[r, i, j] = Fraction(sign)
        eps[r, j, i] = Fraction(-sign)
    return eps


def _eta() -> np.ndarray:
    eta = _zeros(DIM, DIM, DIM)
    five = DIM - 1
    for i in range(DIM):
        for j in range(DIM):
            for k in TRANSVERSE:
                eta[i, j, k] = Fraction((i == k) * (j == five) - (j == k) * (i == five))
    return eta


#: EPS[r-1, i, j] is epsilon^r_ij, padded with zeros in the fifth row/column.
EPS = _epsilon()
#: ETA[i, j, k] = delta_ik delta_j5 - delta_jk delta_i5 (zero for k = 5).
ETA = _eta()


def eps(r: int) -> np.ndarray:
    return EPS[r - 1]


def omega(r: int) -> Form:
    """omega_r = 1/2 eps^r_ij w^i ^ w^j."""
    E = eps(r)
    return Form(2, {(i, j): E[i, j] for i in range(DIM) for j in range(i + 1, DIM)})


ALPHA_FORM = ALPHA
OMEGA = (omega(1), omega(2), omega(3))
VOL4 = Form(4, {(0, 1, 2, 3): 1})


@dataclass(frozen=True)
class StandardStructure:
    alpha: Form
    omega1: Form
    omega2: Form
    omega3: Form
    reeb: TangentVector = REEB

    def forms(self) -> tuple[Form, Form, Form, Form]:
        return (self.alpha, self.omega1, self.omega2, self.omega3)


STANDARD = StandardStructure(ALPHA, *OMEGA)


def validate_adapted(forms: Iterable[Form]) -> tuple[bool, list[str]]:
    """Check that (alpha, omega_1, omega_2, omega_3) is literally the standard model.

    The returned diagnostics also report which compatibility condition fails,
    when one does.
    """
    forms = tuple(forms)
    problems = []
    if len(forms) != 4:
        return False, [f"4 structure forms expected, got {len(forms)}"]
    a, *oms = forms
    if any(f.degree != 2 for f in oms) or a.degree != 1:
        return False, ["degrees must be (1, 2, 2, 2)"]
    v = wedge(OMEGA[0], OMEGA[0])
    for i in range(3):
        for j in range(i, 3):
            got = wedge(oms[i], oms[j])
            want = v if i == j else Form.zero(4)
            if got != want:
                problems.append(f"omega_{i + 1} ^ omega_{j + 1} = {got!r}, expected {want!r}")
    if wedge(wedge(oms[0], oms[0]), a).is_zero():
        problems.append("omega_1^2 ^ alpha vanishes")
    for name, got, want in zip(("alpha", "omega_1", "omega_2", "omega_3"), forms, STANDARD.forms()):
        if got != want:
            problems.append(f"{name} = {got!r} differs from the standard model {want!r}")
    return not problems, problems


def _require_transverse(a: Form, what: str) -> None:
    if not is_transverse(a):
        raise ValueError(f"{what} needs a transverse form, got {a!r}")


@lru_cache(maxsize=None)
def _omega_pairing(r: int, I: tuple[int, ...], J: tuple[int, ...]) -> Fraction:
    """omega_r extended to k-vectors: det(omega_r(e_I[a], e_J[b]))."""
    E = eps(r)
    k = len(I)
    if k == 0:
        return Fraction(1)
    m = [[E[i, j] for j in J] for i in I]
    # small determinants by Laplace expansion along the first row
    if k == 1:
        return m[0][0]
    total = Fraction(0)
    for col in range(k):
        minor_I = I[1:]
        minor_J = J[:col] + J[col + 1:]
        total += (-1) ** col * m[0][col] * _omega_pairing(r, minor_I, minor_J)
    return total


def star_r(r: int, a: Form) -> Form:
    """The operator defined by gamma ^ star_r(beta) = omega_r(gamma, beta) omega_r^2 / 2."""
    _require_transverse(a, "star_r")
    k = a.degree
    if k > 4:
        raise ValueError("star_r acts on transverse forms of degree <= 4")
    out: dict[tuple[int, ...], Fraction] = {}
    for I in combinations(TRANSVERSE, k):
        value = sum((c * _omega_pairing(r, I, J) for J, c in a.items()), Fraction(0))
        if value:
            rest = tuple(i for i in TRANSVERSE if i not in I)
            sign, _ = sort_sign(I + rest)
            out[rest] = sign * value
    return Form(4 - k, out)


_J_CHAIN = {1: (3, 2), 2: (1, 3), 3: (2, 1)}


def j_form(r: int, phi: Form) -> Form:
    """J_r on 1-forms: J_1(phi) = star_1(omega_3 ^ star_1(omega_2 ^ phi)), cyclically; J_r(alpha) = 0."""
    if phi.degree != 1:
        raise ValueError("J_r acts on 1-forms")
    outer, inner_ = _J_CHAIN[r]
    phi = transverse_part(phi)
    return star_r(r, wedge(OMEGA[outer - 1], star_r(r, wedge(OMEGA[inner_ - 1], phi))))


def j_vector(r: int, v: TangentVector) -> TangentVector:
    """J_r on vectors, the transpose of J_r on 1-forms: (J_r phi)(X) = phi(J_r X).

    This reproduces J_1 e_1 = e_2, J_2 e_4 = e_2, ... and g^T(X, Y) = omega_r(X, J_r Y).
    J_r is skew in the orthonormal frame, so the transpose is minus the metric dual.
    """
    return -one_form_to_vector(j_form(r, vector_to_one_form(v)))


def j_r(r: int, x: Union[Form, TangentVector]):
    if isinstance(x, TangentVector):
        return j_vector(r, x)
    return j_form(r, x)


def j_matrix(r: int) -> np.ndarray:
    """Matrix M with (J_r v)_i = M[i, k] v_k on vectors."""
    return _j_matrix(r).copy()


@lru_cache(maxsize=None)
def _j_matrix(r: int) -> np.ndarray:
    M = _zeros(DIM, DIM)
    for k in range(DIM):
        col = j_vector(r, TangentVector.basis(k))
        for i in range(DIM):
            M[i, k] = col[i]
    return M


def j_two_form(r: int, s: Form) -> Form:
    """J_r acting on a 2-form by s(J_r ., J_r .)."""
    M = _j_matrix(r)
    B = M.T.dot(two_form_matrix(s)).dot(M)
    return matrix_two_form(B)


def two_form_matrix(s: Form) -> np.ndarray:
    """Antisymmetric A with s = 1/2 A_ij w^i ^ w^j."""
    A = _zeros(DIM, DIM)
    for (i, j), c in s.items():
        A[i, j] = c
        A[j, i] = -c
    return A


def matrix_two_form(A: np.ndarray) -> Form:
    """1/2 A_ij w^i ^ w^j for an arbitrary (not necessarily antisymmetric) A."""
    return Form(2, {(i, j): (A[i, j] - A[j, i]) / 2 for i in range(DIM) for j in range(i + 1, DIM)})


def transverse_hodge(a: Form) -> Form:
    """*^T a = *(alpha ^ a) on transverse forms."""
    _require_transverse(a, "transverse_hodge")
    return hodge_star(wedge(ALPHA, a))


def project_E(phi: Form) -> Form:
    """Projection of a 2-form onto Lambda^2_3."""
    if phi.degree != 2:
        raise ValueError("E acts on 2-forms")
    pt = transverse_part(phi)
    out = pt
    for om in OMEGA:
        coeff = hodge_star(wedge(wedge(pt, om), ALPHA)).value()
        out = out - om * (coeff / 2)
    return out


def in_lambda23(s: Form) -> bool:
    return s.degree == 2 and is_transverse(s) and all(wedge(s, om).is_zero() for om in OMEGA)


class SymTensor:
    """Symmetric 2-tensor h_ij e^i (x) e^j on the 5-dimensional space."""

    __slots__ = ("m",)

    def __init__(self, matrix):
        m = np.array([[Fraction(x) for x in row] for row in matrix], dtype=object)
        if m.shape != (DIM, DIM):
            raise ValueError(f"{DIM}x{DIM} matrix expected")
        if not np.all(m == m.T):
            raise ValueError("matrix is not symmetric")
        self.m = m

    @classmethod
    def zero(cls) -> "SymTensor":
        return cls(_zeros(DIM, DIM))

    @classmethod
    def from_entries(cls, entries: dict[tuple[int, int], Fraction | int]) -> "SymTensor":
        """Build from 1-based ``{(i, j): value}``; the mirrored entry is filled in."""
        m = _zeros(DIM, DIM)
        for (i, j), v in entries.items():
            m[i - 1, j - 1] = Fraction(v)
            m[j - 1, i - 1] = Fraction(v)
        return cls(m)

    def __getitem__(self, ij) -> Fraction:
        return self.m[ij]

    def __add__(self, other: "SymTensor") -> "SymTensor":
        return SymTensor(self.m + other.m)

    def __sub__(self, other: "SymTensor") -> "SymTensor":
        return SymTensor(self.m - other.m)

    def __neg__(self) -> "SymTensor":
        return SymTensor(-self.m)

    def __mul__(self, c) -> "SymTensor":
        return SymTensor(self.m * Fraction(c))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymTensor):
            return NotImplemented
        return bool(np.all(self.m == other.m))

    def __hash__(self):
        return hash(tuple(self.m.flat))

    def is_zero(self) -> bool:
        return bool(np.all(self.m == 0))

    def trace(self) -> Fraction:
        return sum((self.m[i, i] for i in range(DIM)), Fraction(0))

    def transverse_trace(self) -> Fraction:
        return sum((self.m[i, i] for i in TRANSVERSE), Fraction(0))

    def is_transverse(self) -> bool:
        return all(self.m[i, DIM - 1] == 0 for i in range(DIM))

    def dot(self, other: "SymTensor") -> Fraction:
        """Trace inner product sum_ij h_ij k_ij."""
        return sum((a * b for a, b in zip(self.m.flat, other.m.flat)), Fraction(0))

    def apply_j(self, r: int) -> "SymTensor":
        """(J_r h)(X, Y) = h(J_r X, J_r Y)."""
        M = _j_matrix(r)
        return SymTensor(M.T.dot(self.m).dot(M))

    def rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self.m]

    def __repr__(self) -> str:
        return "SymTensor(" + str([[str(x) for x in row] for row in self.m]) + ")"


G_T = SymTensor([[1 if (i == j and i < 4) else 0 for j in range(DIM)] for i in range(DIM)])
ALPHA_ALPHA = SymTensor([[1 if (i == j == DIM - 1) else 0 for j in range(DIM)] for i in range(DIM)])


def sym_product(a: Form, b: Form) -> SymTensor:
    """a (.) b = a (x) b + b (x) a for 1-forms."""
    u, v = a.vector(), b.vector()
    return SymTensor([[u[i] * v[j] + v[i] * u[j] for j in range(DIM)] for i in range(DIM)])


def in_sigma(r: int, h: SymTensor) -> bool:
    """Membership in Sigma_r: transverse, J_r h = h, J_s h = -h for s != r."""
    if not h.is_transverse():
        return False
    return all(h.apply_j(s) == (h if s == r else -h) for s in (1, 2, 3))


def iota_r(r: int, h: SymTensor) -> Form:
    """iota_r(h) = 1/2 eps^r_ik h_kj w^i ^ w^j, defined on Sigma_r."""
    if not in_sigma(r, h):
        raise ValueError(f"tensor is not in Sigma_{r}: {h!r}")
    return matrix_two_form(eps(r).dot(h.m))


def iota_r_inverse(r: int, s: Form) -> SymTensor:
    if not in_lambda23(s):
        raise ValueError(f"2-form is not in Lambda^2_3: {s!r}")
    # eps^r restricted to the transverse block squares to -1
    h = SymTensor(-eps(r).dot(two_form_matrix(s)))
    assert in_sigma(r, h), "iota_r inverse left Sigma_r"
    return h


@dataclass(frozen=True)
class SymDecomposition:
    c_T: Fraction
    c_alpha: Fraction
    h1: SymTensor
    h2: SymTensor
    h3: SymTensor
    beta: Form

    @property
    def sigma_parts(self) -> tuple[SymTensor, SymTensor, SymTensor]:
        return (self.h1, self.h2, self.h3)

    def reassemble(self) -> SymTensor:
        return (G_T * self.c_T + ALPHA_ALPHA * self.c_alpha + self.h1 + self.h2 + self.h3
                + sym_product(ALPHA, self.beta))


def sym_decompose(h: SymTensor) -> SymDecomposition:
    """Split into <g^T> + <alpha (x) alpha> + Sigma_1 + Sigma_2 + Sigma_3 + alpha (.) Lambda^1_0."""
    five = DIM - 1
    c_T = h.transverse_trace() / 4
    c_alpha = h[five, five]
    beta = Form.from_vector([h[i, five] for i in TRANSVERSE] + [0])
    m = _zeros(DIM, DIM)
    for i in TRANSVERSE:
        for j in TRANSVERSE:
            m[i, j] = h[i, j] - (c_T if i == j else 0)
    traceless = SymTensor(m)
    # on the traceless transverse part J_r has eigenvalue +1 exactly on Sigma_r
    parts = [SymTensor((traceless.m + traceless.apply_j(r).m) / 2) for r in (1, 2, 3)]
    return SymDecomposition(c_T, c_alpha, *parts, beta)
