from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_rationals
from su2curv.exterior import ALPHA, DIM, REEB, Form, TangentVector, e, hodge_star, interior_product, w, wedge
from su2curv.su2 import (
    ALPHA_ALPHA,
    EPS,
    ETA,
    G_T,
    OMEGA,
    STANDARD,
    SymTensor,
    in_lambda23,
    in_sigma,
    iota_r,
    iota_r_inverse,
    j_form,
    j_r,
    j_two_form,
    j_vector,
    project_E,
    star_r,
    sym_decompose,
    sym_product,
    transverse_hodge,
    validate_adapted,
)

o1, o2, o3 = OMEGA
LAMBDA23_BASIS = (w(1, 2) - w(3, 4), w(1, 3) + w(2, 4), w(1, 4) - w(2, 3))
TRANSVERSE_1 = [w(i) for i in range(1, 5)]
TRANSVERSE_3 = [Form.monomial(c) for c in combinations(range(4), 3)]
VECTORS = [TangentVector.basis(i) for i in range(DIM)]
ONE_FORMS = [w(i) for i in range(1, DIM + 1)]


class TestTables:
    def test_epsilon_entries(self):
        expected = {(1, 1, 2): 1, (1, 3, 4): 1, (2, 1, 3): 1, (2, 2, 4): -1, (3, 1, 4): 1, (3, 2, 3): 1}
        for r in range(3):
            for i in range(4):
                for j in range(4):
                    want = expected.get((r + 1, i + 1, j + 1)) or -expected.get((r + 1, j + 1, i + 1), 0)
                    assert EPS[r, i, j] == want

    def test_epsilon_orthogonality(self):
        for r in range(3):
            for s in range(3):
                total = sum(EPS[r, i, j] * EPS[s, i, j] for i in range(4) for j in range(4))
                assert total == (4 if r == s else 0)

    def test_omega_from_epsilon(self):
        for r in range(3):
            built = Form(2, {(i, j): EPS[r, i, j] for i in range(4) for j in range(i + 1, 4)})
            assert built == OMEGA[r]

    def test_eta_embedding(self):
        v = [Fraction(k + 1) for k in range(4)]
        for i in range(DIM):
            for j in range(DIM):
                entry = sum(ETA[i, j, k] * v[k] for k in range(4))
                want = v[i] if j == 4 and i < 4 else (-v[j] if i == 4 and j < 4 else 0)
                assert entry == want

    def test_standard_model(self):
        assert o1 == w(1, 2) + w(3, 4) and o2 == w(1, 3) - w(2, 4) and o3 == w(1, 4) + w(2, 3)
        for i in range(3):
            for j in range(3):
                assert wedge(OMEGA[i], OMEGA[j]) == (2 * w(1, 2, 3, 4) if i == j else Form.zero(4))
        assert not wedge(wedge(o1, o1), ALPHA).is_zero()
        assert ALPHA.vector()[4] == 1 and all(interior_product(REEB, om).is_zero() for om in OMEGA)


class TestValidateAdapted:
    def test_standard(self):
        assert validate_adapted(STANDARD.forms()) == (True, [])

    def test_swapped_omegas(self):
        ok, problems = validate_adapted((ALPHA, o1, o3, o2))
        assert not ok and any("omega_2" in p for p in problems)

    def test_scaled_omega1(self):
        ok, problems = validate_adapted((ALPHA, 2 * o1, o2, o3))
        assert not ok and any("omega_1 ^ omega_1" in p for p in problems)

    def test_wrong_count(self):
        assert not validate_adapted((ALPHA, o1))[0]


class TestStarR:
    def test_star1_w1(self):
        assert star_r(1, w(1)) == w(1, 3, 4)

    def test_star2_w2(self):
        assert star_r(2, w(2)) == -w(1, 2, 3)

    def test_involution_on_w1(self):
        assert star_r(1, star_r(1, w(1))) == w(1)

    def test_star_is_wedge_with_omega_exhaustive(self):
        for r in (1, 2, 3):
            for phi in TRANSVERSE_1:
                assert star_r(r, phi) == wedge(phi, OMEGA[r - 1])

    def test_involution_on_1_and_3_forms(self):
        for r in (1, 2, 3):
            for a in TRANSVERSE_1 + TRANSVERSE_3:
                assert star_r(r, star_r(r, a)) == a

    def test_rejects_non_transverse(self):
        with pytest.raises(ValueError):
            star_r(1, w(5))


class TestJ:
    def test_j1_e1(self):
        assert j_vector(1, e(1)) == e(2)

    def test_j2_e4(self):
        assert j_vector(2, e(4)) == e(2)

    def test_j3_squared_e2(self):
        assert j_vector(3, j_vector(3, e(2))) == -e(2)

    def test_dispatch(self):
        assert j_r(1, e(1)) == e(2)
        assert j_r(1, w(1)) == j_form(1, w(1))

    def test_kills_reeb_and_alpha(self):
        for r in (1, 2, 3):
            assert j_vector(r, REEB) == TangentVector([0] * DIM)
            assert j_form(r, ALPHA).is_zero()

    def test_square_on_vectors(self):
        for r in (1, 2, 3):
            for v in VECTORS:
                want = -v + REEB * ALPHA.vector()[list(v.components).index(1)]
                assert j_vector(r, j_vector(r, v)) == want

    def test_square_on_forms(self):
        for r in (1, 2, 3):
            for phi in ONE_FORMS:
                want = -phi + ALPHA * phi.vector()[4]
                assert j_form(r, j_form(r, phi)) == want

    def test_quaternion_relations(self):
        for v in VECTORS:
            assert j_vector(1, j_vector(2, v)) == j_vector(3, v)
        for phi in ONE_FORMS:
            assert j_form(1, j_form(2, phi)) == -j_form(3, phi)

    def test_anticommute(self):
        for r, s in ((1, 2), (2, 3), (1, 3)):
            for v in VECTORS:
                assert j_vector(r, j_vector(s, v)) == -j_vector(s, j_vector(r, v))

    def test_compatible_with_metric(self):
        for r in (1, 2, 3):
            for a in VECTORS:
                for b in VECTORS:
                    ja, jb = j_vector(r, a), j_vector(r, b)
                    g = sum(x * y for x, y in zip(a.components, b.components))
                    gj = sum(x * y for x, y in zip(ja.components, jb.components))
                    assert gj == g - a[4] * b[4]


class TestTransverseHodge:
    def test_omega2(self):
        assert transverse_hodge(o2) == o2

    def test_all_omegas_self_dual(self):
        assert all(transverse_hodge(om) == om for om in OMEGA)

    def test_w1(self):
        assert transverse_hodge(w(1)) == w(2, 3, 4)

    def test_anti_self_dual(self):
        assert transverse_hodge(w(1, 2) - w(3, 4)) == -(w(1, 2) - w(3, 4))

    def test_rejects_non_transverse(self):
        with pytest.raises(ValueError):
            transverse_hodge(w(1, 5))


class TestProjectE:
    def test_kills_omega1(self):
        assert project_E(o1).is_zero()

    def test_fixes_lambda23(self):
        assert project_E(w(1, 2) - w(3, 4)) == w(1, 2) - w(3, 4)

    def test_mixed_input(self):
        assert project_E(wedge(w(5), w(1)) + w(1, 2)) == (w(1, 2) - w(3, 4)) / 2

    def test_idempotent_on_two_form_basis(self):
        basis = [Form.monomial(c) for c in combinations(range(DIM), 2)]
        assert len(basis) == 10
        for b in basis:
            p = project_E(b)
            assert project_E(p) == p and in_lambda23(p)

    def test_lambda23_properties(self):
        for s in LAMBDA23_BASIS:
            assert in_lambda23(s)
            assert all(wedge(s, om).is_zero() for om in OMEGA)
            assert hodge_star(s) == -wedge(s, ALPHA)
            assert all(j_two_form(r, s) == s for r in (1, 2, 3))

    def test_commutes_with_star_on_three_forms(self):
        for c in combinations(range(DIM), 3):
            psi = Form.monomial(c)
            assert project_E(hodge_star(psi)) == transverse_hodge(project_E(interior_product(REEB, psi)))


def _h13_24():
    return SymTensor.from_entries({(1, 3): 1, (2, 4): 1})


class TestIota:
    def test_iota1_example(self):
        assert iota_r(1, _h13_24()) == w(1, 4) - w(2, 3)

    def test_iota1_inverse_example(self):
        assert iota_r_inverse(1, w(1, 4) - w(2, 3)) == _h13_24()

    def test_iota2_zero(self):
        assert iota_r(2, SymTensor.zero()).is_zero()

    def test_round_trips_on_sigma_bases(self):
        for r in (1, 2, 3):
            basis = [iota_r_inverse(r, s) for s in LAMBDA23_BASIS]
            assert len(set(map(lambda h: tuple(map(tuple, h.rows())), basis))) == 3
            for h, s in zip(basis, LAMBDA23_BASIS):
                assert in_sigma(r, h)
                assert iota_r(r, h) == s
                assert iota_r_inverse(r, iota_r(r, h)) == h

    def test_rejects_outside_subspace(self):
        with pytest.raises(ValueError):
            iota_r(1, G_T)
        with pytest.raises(ValueError):
            iota_r_inverse(1, o1)

    def test_sigma_eigenvalues(self):
        h = _h13_24()
        assert h.apply_j(1) == h and h.apply_j(2) == -h and h.apply_j(3) == -h


class TestSymDecompose:
    def test_transverse_metric(self):
        d = sym_decompose(G_T)
        assert d.c_T == 1 and d.c_alpha == 0 and d.beta.is_zero()
        assert all(p.is_zero() for p in d.sigma_parts)

    def test_alpha_alpha(self):
        d = sym_decompose(ALPHA_ALPHA)
        assert d.c_alpha == 1 and d.c_T == 0 and all(p.is_zero() for p in d.sigma_parts)

    def test_sigma1_element(self):
        d = sym_decompose(_h13_24())
        assert d.h1 == _h13_24() and d.h2.is_zero() and d.h3.is_zero() and d.c_T == 0

    def test_sym_product_is_full(self):
        assert sym_product(w(1), w(5)) == SymTensor.from_entries({(1, 5): 1})
        assert sym_product(w(1), w(1)) == SymTensor.from_entries({(1, 1): 2})

    @given(st.lists(small_rationals, min_size=15, max_size=15))
    @settings(max_examples=80, deadline=None)
    def test_reassembles_with_orthogonal_parts(self, entries):
        it = iter(entries)
        h = SymTensor.from_entries({(i, j): next(it) for i in range(1, DIM + 1) for j in range(i, DIM + 1)})
        d = sym_decompose(h)
        assert d.reassemble() == h
        for r, p in enumerate(d.sigma_parts, start=1):
            assert in_sigma(r, p)
        parts = [G_T * d.c_T, ALPHA_ALPHA * d.c_alpha, *d.sigma_parts, sym_product(ALPHA, d.beta)]
        for a in range(len(parts)):
            for b in range(a + 1, len(parts)):
                assert parts[a].dot(parts[b]) == 0
