"""Curvature of the metric induced by an adapted SU(2)-structure, from torsion.

Every quantity here is evaluated twice: once from the torsion forms and once
from the Levi-Civita oracle of :mod:`su2curv.connection`.  The torsion-side
expressions carry a handful of convention choices; they are collected in
:class:`Conventions`, whose default is the calibrated setting.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable

import numpy as np

from .connection import CurvatureOracle, connection_for, curvature_oracle, first_bianchi_holds, riemann_from_forms
from .connection import curvature_forms, structure_equation_residues
from .exterior import ALPHA, DIM, REEB, Form, hodge_star, inner, interior_product, norm2, transverse_part, wedge
from .frames import (
    ConnectionDecomposition,
    bracket_identities,
    curvature_reassembly,
    d_quantities,
    eps_contract,
    psi_decompose,
    ricci_from_t_n,
    tau_derivative_expansion,
)
from .lie import Coframe5, require_jacobi, structure_constants
from .su2 import (
    ALPHA_ALPHA,
    EPS,
    G_T,
    SymTensor,
    in_lambda23,
    in_sigma,
    iota_r,
    iota_r_inverse,
    j_form,
    project_E,
    sym_decompose,
    sym_product,
)
from .torsion import ClassificationReport, TorsionForms, classify, extract_torsion

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
R4 = range(4)


# ---------------------------------------------------------------- conventions

@dataclass(frozen=True)
class Conventions:
    """Switches for the choices the torsion formulas leave open.

    codifferential
        ``"alternating"``: d* = (-1)^k * d * on k-forms; ``"plain"``: d* = * d *.
    sym_product
        ``"full"``: a (.) b = a (x) b + b (x) a; ``"half"``: the average of the two.
    phi4_sign
        sign with which ``Phi_4 (.) alpha`` enters Ric_0.
    phi1_duplicate
        the repeated ``-1/2 nu_2 ^ J_1 nu_3`` in Phi_1: ``"d_j1_nu4"`` reads the second
        copy as ``-1/2 d J_1 nu_4``; ``"literal"`` keeps both copies.
    phi1_sigma1
        ``"star"``: +1/2 * d sigma_1; ``"literal"``: +1/2 i_R d sigma_1.
    phi2_f12
        ``"sigma1"``: -1/2 f_12 sigma_1; ``"literal"``: -1/2 f_12 sigma_2.
    """

    codifferential: str = "alternating"
    sym_product: str = "full"
    phi4_sign: int = -1
    phi1_duplicate: str = "d_j1_nu4"
    phi1_sigma1: str = "star"
    phi2_f12: str = "sigma1"

    def __post_init__(self):
        allowed = {
            "codifferential": ("alternating", "plain"),
            "sym_product": ("full", "half"),
            "phi4_sign": (1, -1),
            "phi1_duplicate": ("d_j1_nu4", "literal"),
            "phi1_sigma1": ("star", "literal"),
            "phi2_f12": ("sigma1", "literal"),
        }
        for name, values in allowed.items():
            if getattr(self, name) not in values:
                raise ValueError(f"{name} must be one of {values}")

    def flipped(self, name: str) -> "Conventions":
        """The same conventions with switch ``name`` set to its other value."""
        alternatives = {
            "codifferential": {"alternating": "plain", "plain": "alternating"},
            "sym_product": {"full": "half", "half": "full"},
            "phi4_sign": {1: -1, -1: 1},
            "phi1_duplicate": {"d_j1_nu4": "literal", "literal": "d_j1_nu4"},
            "phi1_sigma1": {"star": "literal", "literal": "star"},
            "phi2_f12": {"sigma1": "literal", "literal": "sigma1"},
        }
        return replace(self, **{name: alternatives[name][getattr(self, name)]})


#: Frozen calibrated setting.
CALIBRATED = Conventions()

#: Every switch at its uncorrected, term-by-term reading.
LITERAL = Conventions(phi4_sign=1, phi1_duplicate="literal", phi1_sigma1="literal", phi2_f12="literal")

#: Catalog instance whose oracle agreement decides each switch.
CALIBRATION_INSTANCES = {
    "codifferential": "calib-solvable",
    "sym_product": "calib-solvable",
    "phi4_sign": "calib-solvable",
    "phi1_duplicate": "calib-solvable",
    "phi1_sigma1": "calib-solvable",
    "phi2_f12": "calib-nilpotent",
}

SWITCHES = tuple(CALIBRATION_INSTANCES)


def codifferential(a: Form, cf: Coframe5, conv: Conventions = CALIBRATED) -> Form:
    """d* of a constant-coefficient form."""
    if a.degree == 0:
        return Form.zero(0)
    out = hodge_star(cf.d(hodge_star(a)))
    if conv.codifferential == "alternating" and a.degree % 2:
        out = -out
    return out


def _scalar(a: Form) -> Fraction:
    return a.value()


def _df_zero(degree: int = 1) -> Form:
    # the torsion functions are constant on a Lie group, so every df_ij vanishes
    return Form.zero(degree)


# ---------------------------------------------------------------- pullback formulas

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    frame_side: object
    torsion_side: object


def _frame_two_form(coeff: Callable[[int, int], Fraction]) -> Form:
    """sum over transverse i, j of coeff(i, j) w_i ^ w_j."""
    out = Form.zero(2)
    for i in R4:
        for j in R4:
            if i != j:
                c = coeff(i, j)
                if c:
                    out = out + Form.monomial([i, j], c)
    return out


def _eps(r: int, i: int, j: int) -> Fraction:
    return EPS[r - 1, i, j]


def _eps_trace(r: int, T: np.ndarray) -> Fraction:
    return sum((_eps(r, i, j) * T[i, j] for i in R4 for j in R4), Fraction(0))


def pullback_values(dec: ConnectionDecomposition) -> dict[str, object]:
    """Torsion components written through the connection coefficients T_ij, M^r_i.

    Keys follow the torsion names; ``sigma4`` is the corrected expression and
    ``sigma4_uncorrected`` the uncorrected one (see :func:`pullback_torsion_check`).
    """
    T, M = dec.T, dec.M
    vals: dict[str, object] = {
        "f11": sum((T[i, i] for i in R4), Fraction(0)) / 2,
        "f12": _eps_trace(3, T) / 2 - 2 * M[2, 4],
        "f13": -_eps_trace(2, T) / 2 + 2 * M[1, 4],
        "f23": _eps_trace(1, T) / 2 - 2 * M[0, 4],
    }
    for r in (1, 2, 3):
        vals[f"phi{r}"] = -_eps_trace(r, T) / 2
    pairs = {1: (2, 3), 2: (1, 3), 3: (1, 2)}
    for a, (s, t) in pairs.items():
        comps = [sum((2 * _eps(s, i, j) * M[s - 1, i] + 2 * _eps(t, i, j) * M[t - 1, i] for i in R4), Fraction(0))
                 for j in R4]
        vals[f"nu{a}"] = Form.from_vector(comps + [0])
    vals["nu4"] = Form.from_vector([T[i, 4] for i in R4] + [0])

    def sym(p, q):
        return T[p, q] + T[q, p]

    def sigma(r, s, t, sign):
        return _frame_two_form(lambda i, j: QUARTER * sum(
            (_eps(r, i, p) * sym(p, j) + sign * sum((_eps(s, i, p) * _eps(t, q, j) * sym(p, q) for q in R4), Fraction(0))
             for p in R4), Fraction(0)))

    vals["sigma1"] = sigma(1, 2, 3, 1)
    vals["sigma2"] = sigma(2, 1, 3, -1)
    vals["sigma3"] = sigma(3, 1, 2, 1)

    def sigma4(c):
        return _frame_two_form(lambda i, j: T[j, i] + c * sum(
            (_eps(r, p, q) * _eps(r, i, j) * T[p, q] for r in (1, 2, 3) for p in R4 for q in R4), Fraction(0)))

    vals["sigma4"] = sigma4(QUARTER)
    uncorrected = sigma4(HALF)
    for i in R4:
        uncorrected = uncorrected + Form.monomial([i, 4], T[i, 4])
    vals["sigma4_uncorrected"] = uncorrected
    return vals


def torsion_values(t: TorsionForms) -> dict[str, object]:
    vals: dict[str, object] = {"f11": t.fv(1, 1), "f12": t.fv(1, 2), "f13": t.fv(1, 3), "f23": t.fv(2, 3)}
    for r in (1, 2, 3):
        vals[f"phi{r}"] = t.phi[r - 1]
    for i in range(4):
        vals[f"nu{i + 1}"] = t.nu[i]
        vals[f"sigma{i + 1}"] = t.sigma[i]
    vals["sigma4_uncorrected"] = t.sigma[3]
    return vals


#: The identities that hold without correction.
PULLBACK_EXACT = ("f11", "f12", "f13", "f23", "phi1", "phi2", "phi3",
                       "nu1", "nu2", "nu3", "nu4", "sigma1", "sigma2", "sigma3")


def pullback_identities(dec: ConnectionDecomposition, t: TorsionForms) -> list[IdentityCheck]:
    """All pullback identities: the 14 exact ones, corrected sigma_4, uncorrected sigma_4."""
    frame, tors = pullback_values(dec), torsion_values(t)
    names = PULLBACK_EXACT + ("sigma4", "sigma4_uncorrected")
    return [IdentityCheck(n, frame[n] == tors[n], frame[n], tors[n]) for n in names]


def pullback_torsion_check(dec: ConnectionDecomposition, t: TorsionForms) -> tuple[bool, IdentityCheck | None]:
    """True when the 14 exact identities and the corrected sigma_4 identity hold.

    The sigma_4 expression is used with coefficient 1/4 on the epsilon-epsilon term
    and without the ``T_i5 w_i ^ w_5`` term: the alpha-part of d alpha is nu_4, not
    sigma_4, and phi_r omega_r contributes -1/4 eps^r_pq T_pq eps^r_ij w_i ^ w_j.
    """
    for check in pullback_identities(dec, t):
        if check.name != "sigma4_uncorrected" and not check.holds:
            return False, check
    return True, None


# ---------------------------------------------------------------- scalar curvature

def _nu_pairings(t: TorsionForms) -> Fraction:
    n = t.nu

    def ip(a, b):
        return inner(n[a - 1], n[b - 1])

    return ip(1, 2) + ip(1, 3) - ip(1, 4) + ip(2, 3) - ip(2, 4) - ip(3, 4)


def _f11_term() -> Fraction:
    # *(df_11 ^ omega_1^2), with df_11 = 0
    from .su2 import OMEGA
    return _scalar(hodge_star(wedge(_df_zero(), wedge(OMEGA[0], OMEGA[0]))))


def scalar_via_torsion(t: TorsionForms, cf: Coframe5, conv: Conventions = CALIBRATED) -> Fraction:
    """Scalar curvature from the torsion forms and their derivatives."""
    f, ph, nu = t.fv, t.phi, t.nu
    s = -5 * f(1, 1) ** 2 - sum(p * p for p in ph)
    s += -4 * ph[0] * f(2, 3) + 4 * ph[1] * f(1, 3) - 4 * ph[2] * f(1, 2)
    s += sum((_scalar(codifferential(nu[i], cf, conv)) for i in range(3)), Fraction(0))
    s -= 2 * _scalar(codifferential(nu[3], cf, conv))
    s -= sum((norm2(nu[i]) for i in range(3)), Fraction(0)) / 2
    s += _nu_pairings(t)
    s -= 2 * _f11_term()
    s -= sum((norm2(x) for x in t.sigma), Fraction(0)) / 2
    return s


def scalar_by_class(t: TorsionForms, flags: ClassificationReport) -> dict[str, Fraction]:
    """Specialised scalar-curvature formulas for the classes the structure belongs to.

    ``double_hypo`` is evaluated with |sigma_3|^2, the free component of that class;
    ``double_hypo_sigma2`` uses |sigma_2|^2 in its place.
    """
    s = t.sigma
    out: dict[str, Fraction] = {}
    if flags.hypo:
        out["hypo"] = (-t.phi[0] ** 2 - 4 * t.phi[0] * t.fv(2, 3) - 2 * norm2(t.nu[3])
                       - sum((norm2(x) for x in s[1:]), Fraction(0)) / 2)
    if flags.contact_hypo:
        out["contact_hypo"] = -4 + 8 * t.fv(2, 3) - norm2(s[1]) / 2 - norm2(s[2]) / 2
    if flags.double_hypo:
        out["double_hypo"] = 20 - norm2(s[2]) / 2 - norm2(s[3]) / 2
        out["double_hypo_sigma2"] = 20 - norm2(s[1]) / 2 - norm2(s[3]) / 2
    if flags.sasaki_einstein_structure:
        out["sasaki_einstein"] = Fraction(20)
    return out


def lambda_mu(t: TorsionForms, cf: Coframe5, conv: Conventions = CALIBRATED) -> tuple[Fraction, Fraction]:
    """(lambda, mu) of Ric = lambda/4 g^T + mu alpha (x) alpha + Ric_0."""
    f, ph, nu, sg = t.fv, t.phi, t.nu, t.sigma
    dnu4 = _scalar(codifferential(nu[3], cf, conv))
    lam = -4 * f(1, 1) ** 2 - 2 * sum(p * p for p in ph)
    lam += -4 * ph[0] * f(2, 3) + 4 * ph[1] * f(1, 3) - 4 * ph[2] * f(1, 2)
    lam += sum((_scalar(codifferential(nu[i], cf, conv)) for i in range(3)), Fraction(0)) - dnu4
    lam -= sum((norm2(nu[i]) for i in range(3)), Fraction(0)) / 2
    lam += _nu_pairings(t) - norm2(sg[3]) - _f11_term()
    mu = -f(1, 1) ** 2 + sum(p * p for p in ph) - dnu4
    mu += -sum((norm2(sg[i]) for i in range(3)), Fraction(0)) / 2 + norm2(sg[3]) / 2 - _f11_term()
    return lam, mu


# ---------------------------------------------------------------- Ricci tensor

@dataclass(frozen=True)
class Term:
    coeff: Fraction
    label: str
    form: Form

    @property
    def value(self) -> Form:
        return self.form * self.coeff


def _combine(terms: list[Term], degree: int) -> Form:
    return sum((term.value for term in terms), Form.zero(degree))


def phi_terms(t: TorsionForms, cf: Coframe5, conv: Conventions = CALIBRATED) -> tuple[list[Term], ...]:
    """The summands of Phi_1..Phi_4, each with its coefficient and a readable label."""
    f, ph = t.fv, t.phi
    nu = (None,) + tuple(t.nu)
    sg = (None,) + tuple(t.sigma)
    d = cf.d

    def iR(a):
        return interior_product(REEB, a)

    def nJn(r, a, b):
        return wedge(nu[a], j_form(r, nu[b]))

    def dJ(r, a):
        return d(j_form(r, nu[a]))

    def dstar_T(a):
        return transverse_part(codifferential(a, cf, conv))

    h, q = HALF, QUARTER
    F = Fraction
    phi1 = [
        Term(-h, "f11 sigma1", sg[1] * f(1, 1)), Term(h, "f12 sigma2", sg[2] * f(1, 2)),
        Term(h, "f13 sigma3", sg[3] * f(1, 3)), Term(F(-1), "f23 sigma4", sg[4] * f(2, 3)),
        Term(F(1), "phi3 sigma2", sg[2] * ph[2]), Term(F(-1), "phi2 sigma3", sg[3] * ph[1]),
        Term(F(-1), "phi1 sigma4", sg[4] * ph[0]),
        Term(-q, "nu1^J1nu1", nJn(1, 1, 1)), Term(h, "nu1^J1nu4", nJn(1, 1, 4)),
        Term(q, "nu2^J1nu2", nJn(1, 2, 2)), Term(-h, "nu2^J1nu3", nJn(1, 2, 3)),
        Term(q, "nu3^J1nu3", nJn(1, 3, 3)),
    ]
    if conv.phi1_duplicate == "literal":
        phi1.append(Term(-h, "nu2^J1nu3 (repeated)", nJn(1, 2, 3)))
    else:
        phi1.append(Term(-h, "dJ1nu4", dJ(1, 4)))
    phi1.append(Term(h, "nu4^J1nu4", nJn(1, 4, 4)))
    if conv.phi1_sigma1 == "literal":
        phi1.append(Term(h, "iR dsigma1", iR(d(sg[1]))))
    else:
        phi1.append(Term(h, "*dsigma1", hodge_star(d(sg[1]))))
    phi1 += [Term(-h, "dJ1nu1", dJ(1, 1)), Term(h, "dJ1nu2", dJ(1, 2)), Term(h, "dJ1nu3", dJ(1, 3))]

    f12_target = sg[2] if conv.phi2_f12 == "literal" else sg[1]
    phi2 = [
        Term(-h, "f12 sigma2" if conv.phi2_f12 == "literal" else "f12 sigma1", f12_target * f(1, 2)),
        Term(-h, "f11 sigma2", sg[2] * f(1, 1)), Term(h, "f23 sigma3", sg[3] * f(2, 3)),
        Term(F(1), "f13 sigma4", sg[4] * f(1, 3)), Term(F(-1), "phi3 sigma1", sg[1] * ph[2]),
        Term(F(1), "phi1 sigma3", sg[3] * ph[0]), Term(F(-1), "phi2 sigma4", sg[4] * ph[1]),
        Term(h, "*dsigma2", hodge_star(d(sg[2]))),
        Term(h, "dJ2nu1", dJ(2, 1)), Term(-h, "dJ2nu2", dJ(2, 2)), Term(-h, "dJ2nu4", dJ(2, 4)),
        Term(h, "dJ2nu3", dJ(2, 3)),
        Term(q, "nu1^J2nu1", nJn(2, 1, 1)), Term(-h, "nu1^J2nu3", nJn(2, 1, 3)),
        Term(-q, "nu2^J2nu2", nJn(2, 2, 2)), Term(h, "nu2^J2nu4", nJn(2, 2, 4)),
        Term(h, "nu4^J2nu4", nJn(2, 4, 4)), Term(q, "nu3^J2nu3", nJn(2, 3, 3)),
    ]

    phi3 = [
        Term(-h, "f13 sigma1", sg[1] * f(1, 3)), Term(-h, "f23 sigma2", sg[2] * f(2, 3)),
        Term(-h, "f11 sigma3", sg[3] * f(1, 1)), Term(F(1), "phi2 sigma1", sg[1] * ph[1]),
        Term(F(-1), "phi1 sigma2", sg[2] * ph[0]), Term(F(-1), "phi3 sigma4", sg[4] * ph[2]),
        Term(h, "*dsigma3", hodge_star(d(sg[3]))), Term(F(-1), "f12 sigma4", sg[4] * f(1, 2)),
        Term(q, "nu1^J3nu1", nJn(3, 1, 1)), Term(q, "nu2^J3nu2", nJn(3, 2, 2)),
        Term(-q, "nu3^J3nu3", nJn(3, 3, 3)), Term(-h, "nu1^J3nu2", nJn(3, 1, 2)),
        Term(h, "nu3^J3nu4", nJn(3, 3, 4)), Term(h, "nu4^J3nu4", nJn(3, 4, 4)),
        Term(h, "dJ3nu1", dJ(3, 1)), Term(h, "dJ3nu2", dJ(3, 2)), Term(-h, "dJ3nu3", dJ(3, 3)),
        Term(-h, "dJ3nu4", dJ(3, 4)),
    ]

    from .su2 import OMEGA
    o1, o2, o3 = OMEGA
    df = _df_zero()
    phi4 = [
        Term(F(3), "(df11)^T", transverse_part(df)),
        Term(-F(3, 2), "f11 nu4", nu[4] * f(1, 1)),
        Term(-h, "(d*sigma4)^T", dstar_T(sg[4])),
        Term(-h, "J2(d*sigma2)^T", j_form(2, dstar_T(sg[2]))),
        Term(-h, "f23 J1nu4", j_form(1, nu[4]) * f(2, 3)),
        Term(-h, "f12 J3nu4", j_form(3, nu[4]) * f(1, 2)),
        Term(F(3, 2), "phi1 J1nu4", j_form(1, nu[4]) * ph[0]),
        Term(F(3, 2), "phi2 J2nu4", j_form(2, nu[4]) * ph[1]),
        Term(F(3, 2), "phi3 J3nu4", j_form(3, nu[4]) * ph[2]),
        Term(-h, "iR dnu1", iR(d(nu[1]))), Term(-h, "iR dnu2", iR(d(nu[2]))), Term(-h, "iR dnu3", iR(d(nu[3]))),
        Term(F(1), "iR dnu4", iR(d(nu[4]))),
        Term(F(1), "iR *(df12^omega3)", iR(hodge_star(wedge(df, o3)))),
        Term(F(-1), "iR *(df13^omega2)", iR(hodge_star(wedge(df, o2)))),
        Term(F(1), "iR *(df23^omega1)", iR(hodge_star(wedge(df, o1)))),
        Term(h, "iR *dsigma4", iR(hodge_star(d(sg[4])))),
        Term(F(-1), "J1 iR *dsigma1", j_form(1, iR(hodge_star(d(sg[1]))))),
        Term(-F(3, 2), "J2 iR *dsigma2", j_form(2, iR(hodge_star(d(sg[2]))))),
        Term(F(-1), "J3 iR *dsigma3", j_form(3, iR(hodge_star(d(sg[3]))))),
        Term(h, "J1 iR dJ1nu4", j_form(1, iR(dJ(1, 4)))),
        Term(h, "J3 iR dJ3nu4", j_form(3, iR(dJ(3, 4)))),
    ]
    return phi1, phi2, phi3, phi4


def phi_forms(t: TorsionForms, cf: Coframe5, conv: Conventions = CALIBRATED) -> tuple[Form, Form, Form, Form]:
    terms = phi_terms(t, cf, conv)
    return tuple(_combine(ts, 2 if r < 3 else 1) for r, ts in enumerate(terms))


def alpha_product(beta: Form, conv: Conventions = CALIBRATED) -> SymTensor:
    """beta (.) alpha under the chosen normalisation."""
    h = sym_product(beta, ALPHA)
    return h * HALF if conv.sym_product == "half" else h


@dataclass(frozen=True)
class RicciReport:
    ric_oracle: SymTensor
    s_oracle: Fraction
    ric_tn: SymTensor
    s_tn: Fraction
    s_torsion: Fraction
    lam: Fraction
    mu: Fraction
    phi: tuple[Form, Form, Form, Form]
    e_phi: tuple[Form, Form, Form]
    ric0: SymTensor
    ric_assembled: SymTensor

    @property
    def alpha_einstein(self) -> bool:
        return self.ric0.is_zero()


def ricci_zero_part(t: TorsionForms, cf: Coframe5, conv: Conventions = CALIBRATED) -> tuple[SymTensor, tuple, tuple]:
    """Ric_0 assembled from Phi_1..Phi_4; also returns (Phi, E(Phi_r))."""
    phis = phi_forms(t, cf, conv)
    e_phis = tuple(project_E(p) for p in phis[:3])
    ric0 = SymTensor.zero()
    for r, e in enumerate(e_phis, start=1):
        if not in_lambda23(e):
            raise ArithmeticError(f"E(Phi_{r}) = {e!r} is not in Lambda^2_3")
        ric0 = ric0 + iota_r_inverse(r, e)
    ric0 = ric0 + alpha_product(phis[3], conv) * conv.phi4_sign
    return ric0, phis, e_phis


def ricci_via_torsion(t: TorsionForms, cf: Coframe5, conv: Conventions = CALIBRATED,
                      oracle: CurvatureOracle | None = None) -> RicciReport:
    """Ricci tensor from torsion, reported alongside the oracle and the (T, N) formula."""
    if oracle is None:
        oracle = curvature_oracle(*_connection_and_constants(cf))
    conn, sc = _connection_and_constants(cf)
    dq = d_quantities(psi_decompose(conn), cf)
    ric_n, s_n = ricci_from_t_n(dq)
    lam, mu = lambda_mu(t, cf, conv)
    ric0, phis, e_phis = ricci_zero_part(t, cf, conv)
    assembled = G_T * (lam / 4) + ALPHA_ALPHA * mu + ric0
    return RicciReport(SymTensor(oracle.ric), oracle.scalar, ric_n, s_n, scalar_via_torsion(t, cf, conv),
                       lam, mu, phis, e_phis, ric0, assembled)


def _connection_and_constants(cf: Coframe5):
    return connection_for(cf), structure_constants(cf)


def contact_hypo_phis(t: TorsionForms, cf: Coframe5) -> tuple[Form, Form, Form, Form]:
    """Phi_1..Phi_4 reduced under the contact-Hypo conditions."""
    if not classify(t).contact_hypo:
        raise ValueError("structure is not contact-Hypo")
    d = cf.d
    s2, s3 = t.sigma[1], t.sigma[2]
    f23 = t.fv(2, 3)
    phi2 = s3 * (f23 / 2 - 2) + hodge_star(d(s2)) / 2
    phi3 = s2 * (2 - f23 / 2) + hodge_star(d(s3)) / 2
    phi4 = j_form(1, transverse_part(_df_zero())) * 3
    return Form.zero(2), phi2, phi3, phi4


def contact_hypo_ricci(t: TorsionForms, cf: Coframe5, conv: Conventions = CALIBRATED) -> SymTensor:
    """Ric_0 of a contact-Hypo structure, through the explicit E(Phi_2), E(Phi_3)."""
    from .su2 import OMEGA, transverse_hodge
    if not classify(t).contact_hypo:
        raise ValueError("structure is not contact-Hypo")
    f23 = t.fv(2, 3)

    def e_part(coeff, other, s):
        c = interior_product(REEB, cf.d(s))
        out = other * coeff + transverse_hodge(c) / 2
        for om in OMEGA:
            out = out - om * (hodge_star(wedge(wedge(c, om), ALPHA)).value() / 4)
        return out

    e2 = e_part(f23 / 2 - 2, t.sigma[2], t.sigma[1])
    e3 = e_part(2 - f23 / 2, t.sigma[1], t.sigma[2])
    phi4 = contact_hypo_phis(t, cf)[3]
    return iota_r_inverse(2, e2) + iota_r_inverse(3, e3) + alpha_product(phi4, conv) * conv.phi4_sign


# ---------------------------------------------------------------- verification harness

@dataclass(frozen=True)
class CheckResult:
    check: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"check": self.check, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    name: str
    results: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures


def _ric_mismatch(a: SymTensor, b: SymTensor) -> str:
    for i in range(DIM):
        for j in range(i, DIM):
            if a[i, j] != b[i, j]:
                return f"entry ({i + 1},{j + 1}): {a[i, j]} vs {b[i, j]}"
    return ""


def verify_all(cf: Coframe5, conv: Conventions = CALIBRATED) -> VerificationReport:
    """Run every identity on one instance and collect the outcomes."""
    require_jacobi(cf)
    results: list[CheckResult] = []

    def add(check, passed, detail=""):
        results.append(CheckResult(check, bool(passed), detail if not passed else ""))

    sc = structure_constants(cf)
    conn = connection_for(cf)
    residues = structure_equation_residues(conn, cf)
    add("structure equation dw = -psi ^ w", all(r.is_zero() for r in residues))
    oracle = curvature_oracle(conn, sc)
    add("first Bianchi identity", first_bianchi_holds(oracle.riemann))
    add("oracle Ricci symmetric", bool(np.all(oracle.ric == oracle.ric.T)))

    dec = psi_decompose(conn)
    add("psi reassembly", dec.reassemble() == conn.psi_matrix())
    failures = bracket_identities(dec)
    add("bracket identities", not failures, ", ".join(failures))

    dq = d_quantities(dec, cf)
    psi_curv = curvature_forms(conn, cf)
    add("Psi reassembly", curvature_reassembly(dq) == psi_curv)
    add("Riemann from D-quantities", bool(np.all(dq.riemann() == oracle.frame_components())))
    add("Riemann from Psi", bool(np.all(riemann_from_forms(psi_curv) == oracle.frame_components())))
    dtheta = [list(row) for row in dq.d_theta]
    su2_ok = all(eps_contract(r, dtheta).is_zero() for r in (1, 2, 3)) and all(
        dtheta[i][4].is_zero() and dtheta[4][i].is_zero() for i in range(DIM))
    add("D theta in su(2)", su2_ok)
    expansion = tau_derivative_expansion(dec)
    add("D tau expansion", list(dq.d_tau) == expansion)

    ric_n, s_n = ricci_from_t_n(dq)
    oracle_ric = SymTensor(oracle.ric)
    add("Ricci from (T, N) = oracle", ric_n == oracle_ric, _ric_mismatch(ric_n, oracle_ric))
    add("scalar from (T, N) = oracle", s_n == oracle.scalar, f"{s_n} vs {oracle.scalar}")

    t = extract_torsion(cf)
    ok, bad = pullback_torsion_check(dec, t)
    add("pullback formulas", ok, f"{bad.name}: {bad.frame_side!r} vs {bad.torsion_side!r}" if bad else "")

    s_t = scalar_via_torsion(t, cf, conv)
    add("scalar from torsion = oracle", s_t == oracle.scalar, f"{s_t} vs {oracle.scalar}")
    lam, mu = lambda_mu(t, cf, conv)
    add("lambda + mu = s", lam + mu == oracle.scalar, f"{lam} + {mu} vs {oracle.scalar}")
    add("mu = Ric(R, R)", mu == oracle.ric[4, 4], f"{mu} vs {oracle.ric[4, 4]}")

    try:
        ric0, _, e_phis = ricci_zero_part(t, cf, conv)
    except ArithmeticError as exc:
        add("E(Phi_r) in Lambda^2_3", False, str(exc))
    else:
        add("E(Phi_r) in Lambda^2_3", True)
        add("Ric_0 transverse-trace-free", ric0.transverse_trace() == 0 and ric0[4, 4] == 0)
        dec0 = sym_decompose(ric0)
        add("Ric_0 Sigma parts", all(in_sigma(r, p) for r, p in enumerate(dec0.sigma_parts, start=1)))
        assembled = G_T * (lam / 4) + ALPHA_ALPHA * mu + ric0
        add("Ricci from torsion = oracle", assembled == oracle_ric, _ric_mismatch(assembled, oracle_ric))

    flags = classify(t)
    for name, value in scalar_by_class(t, flags).items():
        if name == "double_hypo_sigma2":
            continue
        add(f"scalar table ({name})", value == oracle.scalar, f"{value} vs {oracle.scalar}")
    if flags.contact_hypo:
        ch = contact_hypo_ricci(t, cf, conv)
        full0 = oracle_ric - G_T * (lam / 4) - ALPHA_ALPHA * mu
        add("contact-Hypo Ricci", ch == full0, _ric_mismatch(ch, full0))
        add("contact-Hypo mu", mu == 4 - norm2(t.sigma[1]) / 2 - norm2(t.sigma[2]) / 2)
        try:
            general = phi_forms(t, cf, conv)
        except ArithmeticError as exc:
            add("contact-Hypo Phi reductions", False, str(exc))
        else:
            reduced = contact_hypo_phis(t, cf)
            bad = [f"Phi_{r + 1}" for r in range(4) if general[r] != reduced[r]]
            add("contact-Hypo Phi reductions", not bad, ", ".join(bad))
    if flags.double_hypo:
        s = oracle.scalar
        add("double-Hypo bound s <= 20", s <= 20, f"s = {s}")
        add("double-Hypo s = 20 iff Sasaki-Einstein", (s == 20) == flags.sasaki_einstein_structure, f"s = {s}")
        alpha_einstein = (oracle_ric - G_T * (lam / 4) - ALPHA_ALPHA * mu).is_zero()
        add("double-Hypo alpha-Einstein iff Sasaki-Einstein", alpha_einstein == flags.sasaki_einstein_structure)
    if flags.half_flat_cone:
        alpha_einstein = (oracle_ric - G_T * (lam / 4) - ALPHA_ALPHA * mu).is_zero()
        add("half-flat cone and alpha-Einstein implies Sasaki-Einstein",
            not alpha_einstein or flags.sasaki_einstein_structure)
    if flags.contact_hypo:
        add("Ric(R, R) = 4 implies Sasaki alpha-Einstein",
            mu != 4 or (flags.kahler_cone and (oracle_ric - G_T * (lam / 4) - ALPHA_ALPHA * mu).is_zero()))
    return VerificationReport(cf.name, tuple(results))
