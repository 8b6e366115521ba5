"""Torsion forms of an adapted SU(2)-structure and the special classes they define.

The derivatives of the structure forms split as

    d omega_r = nu_r ^ omega_r + sum_j f_rj alpha ^ omega_j + alpha ^ sigma_r
    d alpha   = alpha ^ nu_4 + sum_i phi_i omega_i + sigma_4

with nu_i transverse 1-forms, sigma_i in Lambda^2_3 and phi_i, f_ij constants
(for a Lie algebra every torsion function is constant).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exterior import ALPHA, REEB, Form, inner, interior_product, is_transverse, transverse_part, wedge
from .lie import Coframe5, change_coframe, require_jacobi
from .linalg import solve
from .su2 import OMEGA, in_lambda23, project_E


class TorsionError(RuntimeError):
    """Extraction produced components that do not reassemble (internal error)."""


@dataclass(frozen=True)
class TorsionForms:
    """Intrinsic torsion; sequences are ordered nu_1..nu_4, sigma_1..sigma_4, phi_1..phi_3.

    ``f[r-1][j-1]`` is f_rj.
    """

    nu: tuple[Form, Form, Form, Form]
    sigma: tuple[Form, Form, Form, Form]
    phi: tuple[Fraction, Fraction, Fraction]
    f: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def build(cls, nu=None, sigma=None, phi=None, f=None) -> "TorsionForms":
        """Convenience constructor: missing pieces are zero, ``f`` may be a partial dict."""
        nu = tuple(nu) if nu is not None else (Form.zero(1),) * 4
        sigma = tuple(sigma) if sigma is not None else (Form.zero(2),) * 4
        phi = tuple(Fraction(x) for x in phi) if phi is not None else (Fraction(0),) * 3
        if isinstance(f, dict):
            mat = [[Fraction(0)] * 3 for _ in range(3)]
            for (r, j), v in f.items():
                mat[r - 1][j - 1] = Fraction(v)
            f = mat
        f = tuple(tuple(Fraction(x) for x in row) for row in f) if f is not None else ((Fraction(0),) * 3,) * 3
        return cls(nu, sigma, phi, f)

    def fv(self, r: int, j: int) -> Fraction:
        """f_rj with 1-based indices."""
        return self.f[r - 1][j - 1]

    def d_alpha(self) -> Form:
        out = wedge(ALPHA, self.nu[3]) + self.sigma[3]
        for p, om in zip(self.phi, OMEGA):
            out = out + om * p
        return out

    def d_omega(self, r: int) -> Form:
        out = wedge(self.nu[r - 1], OMEGA[r - 1]) + wedge(ALPHA, self.sigma[r - 1])
        for j in range(3):
            out = out + wedge(ALPHA, OMEGA[j]) * self.f[r - 1][j]
        return out

    def is_zero(self) -> bool:
        return (all(n.is_zero() for n in self.nu) and all(s.is_zero() for s in self.sigma)
                and not any(self.phi) and not any(x for row in self.f for x in row))


def _nu_from_transverse_three_form(r: int, target: Form) -> Form:
    """Solve nu ^ omega_r = target for a transverse 1-form nu (4x4 exact system)."""
    images = [wedge(Form.monomial([k]), OMEGA[r - 1]) for k in range(4)]
    keys = sorted({key for img in images for key, _ in img.items()} | {k for k, _ in target.items()})
    if len(keys) != 4:
        raise TorsionError(f"unexpected 3-form components {keys}")
    # nu -> nu ^ omega_r is a bijection Lambda^1_0 -> Lambda^3_0
    matrix = [[img[key] for img in images] for key in keys]
    coeffs = solve(matrix, [target[key] for key in keys])
    return Form.from_vector(coeffs + [0])


def extract_torsion(cf: Coframe5) -> TorsionForms:
    """Torsion forms of the standard structure in the coframe ``cf``."""
    require_jacobi(cf)
    d_alpha = cf.d(ALPHA)
    nu4 = interior_product(REEB, d_alpha)
    dat = transverse_part(d_alpha)
    phi = tuple(inner(dat, om) / 2 for om in OMEGA)
    sigma4 = project_E(d_alpha)

    nus, sigmas, f = [], [], []
    for r in (1, 2, 3):
        d_om = cf.d(OMEGA[r - 1])
        contracted = interior_product(REEB, d_om)
        f.append(tuple(inner(contracted, om) / 2 for om in OMEGA))
        sigmas.append(project_E(contracted))
        nus.append(_nu_from_transverse_three_form(r, transverse_part(d_om)))

    t = TorsionForms(tuple(nus) + (nu4,), tuple(sigmas) + (sigma4,), phi, tuple(f))
    _check_reassembly(t, cf)
    return t


def _check_reassembly(t: TorsionForms, cf: Coframe5) -> None:
    for n in t.nu:
        if not is_transverse(n):
            raise TorsionError(f"nu component {n!r} is not transverse")
    for s in t.sigma:
        if not in_lambda23(s):
            raise TorsionError(f"sigma component {s!r} is not in Lambda^2_3")
    if t.d_alpha() != cf.d(ALPHA):
        raise TorsionError("d alpha does not reassemble from the torsion forms")
    for r in (1, 2, 3):
        if t.d_omega(r) != cf.d(OMEGA[r - 1]):
            raise TorsionError(f"d omega_{r} does not reassemble from the torsion forms")


def verify_d2_constraints(t: TorsionForms) -> bool:
    """f_11 = f_22 = f_33 and f_ij = -f_ji for i != j."""
    f = t.f
    if not f[0][0] == f[1][1] == f[2][2]:
        return False
    return all(f[i][j] == -f[j][i] for i in range(3) for j in range(3) if i != j)


@dataclass(frozen=True)
class ClassificationReport:
    hypo: bool
    contact_hypo: bool
    nearly_hypo: bool
    double_hypo: bool
    sasaki_einstein_structure: bool
    half_flat_cone: bool
    kahler_cone: bool

    def as_dict(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}


SASAKI_EINSTEIN_F = ((0, 0, 0), (0, 0, 3), (0, -3, 0))


def _zero(*forms: Form) -> bool:
    return all(x.is_zero() for x in forms)


def classify(t: TorsionForms) -> ClassificationReport:
    if not verify_d2_constraints(t):
        raise ValueError("torsion violates the d^2 = 0 constraints on f_ij")
    nu1, nu2, nu3, nu4 = t.nu
    s1, s2, s3, s4 = t.sigma
    p1, p2, p3 = t.phi
    fv = t.fv

    hypo = (_zero(nu1, s1) and fv(1, 1) == fv(1, 2) == fv(1, 3) == 0
            and nu2 == nu3 == nu4 and p2 == p3 == 0)
    contact_hypo = (_zero(nu1, nu2, nu3, nu4, s1, s4) and fv(1, 1) == fv(1, 2) == fv(1, 3) == 0
                    and (p1, p2, p3) == (-2, 0, 0))
    nearly_hypo = (p1 == -2 and p3 == 0 and _zero(s2, nu2) and nu4 == nu3 == nu1
                   and fv(2, 3) == 3 and fv(1, 2) == 0 and fv(1, 1) == 0)
    double_hypo = hypo and nearly_hypo
    sasaki_einstein = (_zero(*t.nu, *t.sigma) and (p1, p2, p3) == (-2, 0, 0)
                       and t.f == SASAKI_EINSTEIN_F)
    half_flat = contact_hypo and fv(2, 3) == 3 and s3.is_zero()
    # cone Kaehler: d alpha = -2 omega_1, (d(omega_2 + i omega_3))^T of type (2,1), i_R d(omega_2 + i omega_3) in <omega_2 + i omega_3>
    contact = _zero(nu4, s4) and (p1, p2, p3) == (-2, 0, 0)
    kahler = contact and nu2 == nu3 and _zero(s2, s3)
    return ClassificationReport(hypo, contact_hypo, nearly_hypo, double_hypo, sasaki_einstein, half_flat, kahler)


def classify_by_forms(cf: Coframe5) -> dict[str, bool]:
    """The defining equations on the structure forms themselves, for cross-checking :func:`classify`."""
    d = cf.d
    a, (o1, o2, o3) = ALPHA, OMEGA
    return {
        "hypo": d(o1).is_zero() and d(wedge(a, o2)).is_zero() and d(wedge(a, o3)).is_zero(),
        "contact_hypo": d(a) == -2 * o1 and d(wedge(a, o2)).is_zero() and d(wedge(a, o3)).is_zero(),
        "nearly_hypo": d(o2) == 3 * wedge(a, o3) and d(wedge(a, o1)) == -2 * wedge(o1, o1),
        "double_hypo": (d(o1).is_zero() and d(wedge(a, o2)).is_zero() and d(wedge(a, o1)) == -2 * wedge(o1, o1)
                        and d(o2) == 3 * wedge(a, o3)),
        "sasaki_einstein_structure": d(a) == -2 * o1 and d(o2) == 3 * wedge(a, o3) and d(o3) == -3 * wedge(a, o2),
    }


def double_hypo_transform(forms):
    """(alpha, omega_1, omega_2, omega_3) -> (alpha, omega_1, -omega_3, omega_2); same metric."""
    a, o1, o2, o3 = forms
    return (a, o1, -o3, o2)


#: w'^1 = -w^2, w'^2 = w^1: the coframe in which the transformed forms are the standard model.
TRANSFORM_COFRAME = (
    (0, -1, 0, 0, 0),
    (1, 0, 0, 0, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
)


def transformed_coframe(cf: Coframe5) -> Coframe5:
    """Structure equations of ``cf`` rewritten in the coframe adapted to the transformed structure.

    The change is orthogonal, so the induced metric is unchanged.
    """
    return change_coframe(cf, TRANSFORM_COFRAME, name=(cf.name + "~") if cf.name else "")
