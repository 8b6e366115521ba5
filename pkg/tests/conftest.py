from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from su2curv import catalog  # noqa: E402
from su2curv.exterior import DIM, Form  # noqa: E402
from su2curv.lie import change_coframe  # noqa: E402
from su2curv.linalg import inverse  # noqa: E402

ALL_NAMES = catalog.names()


@pytest.fixture(scope="session")
def instances():
    return {name: catalog.load(name) for name in ALL_NAMES}


@pytest.fixture(params=ALL_NAMES)
def instance(request):
    return catalog.load(request.param)


def cayley(skew_entries) -> list[list[Fraction]]:
    """Rational orthogonal matrix (I - A)(I + A)^-1 from the upper-triangle entries of a skew A."""
    A = [[Fraction(0)] * DIM for _ in range(DIM)]
    it = iter(skew_entries)
    for i in range(DIM):
        for j in range(i + 1, DIM):
            v = Fraction(next(it))
            A[i][j], A[j][i] = v, -v
    eye = [[Fraction(int(i == j)) for j in range(DIM)] for i in range(DIM)]
    plus = [[eye[i][j] + A[i][j] for j in range(DIM)] for i in range(DIM)]
    minus = [[eye[i][j] - A[i][j] for j in range(DIM)] for i in range(DIM)]
    inv = inverse(plus)
    return [[sum(minus[i][k] * inv[k][j] for k in range(DIM)) for j in range(DIM)] for i in range(DIM)]


small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)

forms = st.integers(0, DIM).flatmap(
    lambda k: st.dictionaries(
        st.lists(st.integers(0, DIM - 1), min_size=k, max_size=k, unique=True).map(lambda x: tuple(sorted(x))),
        small_rationals, max_size=4,
    ).map(lambda d, k=k: Form(k, d)))


def forms_of_degree(k: int):
    return st.dictionaries(
        st.lists(st.integers(0, DIM - 1), min_size=k, max_size=k, unique=True).map(lambda x: tuple(sorted(x))),
        small_rationals, max_size=6,
    ).map(lambda d: Form(k, d))


#: Adapted structures obtained by rotating the coframe of a catalog algebra by a rational orthogonal matrix.
rotated_instances = st.tuples(
    st.sampled_from(["heisenberg", "nil-12", "hyperbolic", "double-hypo-su2", "contact-hypo-sigma"]),
    st.lists(st.sampled_from([0, 0, 1, -1, Fraction(1, 2)]), min_size=10, max_size=10),
).map(lambda p: change_coframe(catalog.load(p[0]), cayley(p[1]), name=f"{p[0]}-rotated"))
