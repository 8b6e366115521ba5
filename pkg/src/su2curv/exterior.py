"""Exact exterior algebra over the fixed coframe w^1..w^5 of a 5-dimensional space.

Forms are sparse maps from strictly increasing index tuples to
:class:`fractions.Fraction`.  Indices are stored 0-based; every printed
representation (and the helper :func:`w`) uses the 1-based labels of the
usual notation, so ``w(1, 2)`` is the 2-form w^12.

The metric is the identity in this coframe and the orientation is
``vol = w^12345``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Union

DIM = 5

Scalar = Union[int, Fraction]


def as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def sort_sign(indices: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``indices`` and the sorted tuple.

    Returns sign 0 if an index repeats.
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


class Form:
    """A constant-coefficient exterior form of fixed degree."""

    __slots__ = ("_degree", "_coeffs", "_hash")

    def __init__(self, degree: int, coeffs: Mapping[tuple[int, ...], Scalar] | None = None):
        if not 0 <= degree <= DIM:
            raise ValueError(f"degree must lie in 0..{DIM}, got {degree}")
        clean: dict[tuple[int, ...], Fraction] = {}
        for key, value in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"index tuple {key} does not match degree {degree}")
            if any(not 0 <= i < DIM for i in key):
                raise ValueError(f"index out of range in {key}")
            if any(key[n] >= key[n + 1] for n in range(len(key) - 1)):
                raise ValueError(f"index tuple {key} is not strictly increasing")
            value = as_fraction(value)
            if value:
                clean[key] = value
        self._degree = degree
        self._coeffs = clean
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, degree: int) -> "Form":
        return cls(degree)

    @classmethod
    def scalar(cls, value: Scalar) -> "Form":
        return cls(0, {(): value})

    @classmethod
    def monomial(cls, indices: Iterable[int], coeff: Scalar = 1) -> "Form":
        """Form ``coeff * w^{i1} ^ ... ^ w^{ik}`` for 0-based, possibly unsorted indices."""
        idx = tuple(indices)
        sign, key = sort_sign(idx)
        if sign == 0:
            return cls(len(idx))
        return cls(len(idx), {key: sign * as_fraction(coeff)})

    @classmethod
    def from_vector(cls, components: Iterable[Scalar]) -> "Form":
        """1-form sum_i c_i w^i."""
        return cls(1, {(i,): c for i, c in enumerate(components)})

    # accessors

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coeffs(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._coeffs)

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(sorted(self._coeffs.items()))

    def __getitem__(self, indices: Iterable[int]) -> Fraction:
        """Coefficient of w^{indices} (0-based, any order; antisymmetric)."""
        sign, key = sort_sign(indices)
        if sign == 0:
            return Fraction(0)
        return sign * self._coeffs.get(key, Fraction(0))

    def vector(self) -> list[Fraction]:
        """Components of a 1-form."""
        if self._degree != 1:
            raise ValueError("vector() needs a 1-form")
        return [self._coeffs.get((i,), Fraction(0)) for i in range(DIM)]

    def value(self) -> Fraction:
        """Value of a 0-form."""
        if self._degree != 0:
            raise ValueError("value() needs a 0-form")
        return self._coeffs.get((), Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    # vector-space structure

    def _check(self, other: "Form") -> None:
        if not isinstance(other, Form):
            raise TypeError("Form expected")
        if other._degree != self._degree:
            raise ValueError(f"degree mismatch: {self._degree} vs {other._degree}")

    def __add__(self, other: "Form") -> "Form":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return Form(self._degree, out)

    __radd__ = __add__

    def __neg__(self) -> "Form":
        return Form(self._degree, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __mul__(self, c: Scalar) -> "Form":
        if isinstance(c, Form):
            return wedge(self, c)
        c = as_fraction(c)
        return Form(self._degree, {k: c * v for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "Form":
        return self * (1 / as_fraction(c))

    def __xor__(self, other: "Form") -> "Form":
        return wedge(self, other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Form):
            return NotImplemented
        return self._degree == other._degree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._degree, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Form({format_form(self)})"


def format_form(a: Form) -> str:
    """Compact text, e.g. ``-2*12 - 2*34``; ``0`` for the zero form."""
    if a.is_zero():
        return "0"
    parts = []
    for key, v in a.items():
        label = "".join(str(i + 1) for i in key) or "1"
        if key and v == 1:
            term = label
        elif key and v == -1:
            term = "-" + label
        elif key:
            term = f"{v}*{label}"
        else:
            term = str(v)
        parts.append(term)
    text = parts[0]
    for p in parts[1:]:
        text += " - " + p[1:] if p.startswith("-") else " + " + p
    return text


def w(*labels: int) -> Form:
    """Monomial w^{l1...lk} from 1-based labels, e.g. ``w(1, 2)`` is w^12."""
    return Form.monomial([lab - 1 for lab in labels])


def wedge(a: Form, b: Form) -> Form:
    deg = a.degree + b.degree
    if deg > DIM:
        return Form.zero(DIM)
    out: dict[tuple[int, ...], Fraction] = {}
    for ka, va in a._coeffs.items():
        for kb, vb in b._coeffs.items():
            sign, key = sort_sign(ka + kb)
            if sign:
                out[key] = out.get(key, 0) + sign * va * vb
    return Form(deg, out)


def wedge_all(*forms: Form) -> Form:
    out = Form.scalar(1)
    for f in forms:
        out = wedge(out, f)
    return out


class TangentVector:
    """Vector sum_i v_i e_i in the frame dual to the coframe."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Scalar]):
        comps = tuple(as_fraction(c) for c in components)
        if len(comps) != DIM:
            raise ValueError(f"{DIM} components expected")
        self.components = comps

    @classmethod
    def basis(cls, i: int) -> "TangentVector":
        """e_{i+1} for 0-based ``i``."""
        return cls(1 if k == i else 0 for k in range(DIM))

    def __getitem__(self, i: int) -> Fraction:
        return self.components[i]

    def __add__(self, other: "TangentVector") -> "TangentVector":
        return TangentVector(a + b for a, b in zip(self.components, other.components))

    def __neg__(self) -> "TangentVector":
        return TangentVector(-a for a in self.components)

    def __sub__(self, other: "TangentVector") -> "TangentVector":
        return self + (-other)

    def __mul__(self, c: Scalar) -> "TangentVector":
        return TangentVector(as_fraction(c) * a for a in self.components)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TangentVector):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"TangentVector({', '.join(str(c) for c in self.components)})"


def e(label: int) -> TangentVector:
    """Frame vector e_label, 1-based."""
    return TangentVector.basis(label - 1)


def interior_product(v: TangentVector, a: Form) -> Form:
    """Contraction into the first slot."""
    if a.degree == 0:
        return Form.zero(0)
    out: dict[tuple[int, ...], Fraction] = {}
    for key, val in a._coeffs.items():
        for pos, i in enumerate(key):
            if v[i]:
                rest = key[:pos] + key[pos + 1:]
                sign = -1 if pos % 2 else 1
                out[rest] = out.get(rest, 0) + sign * v[i] * val
    return Form(a.degree - 1, out)


def evaluate(a: Form, *vectors: TangentVector) -> Fraction:
    """a(v1, ..., vk) with the determinant convention w^{12}(e1, e2) = 1."""
    if len(vectors) != a.degree:
        raise ValueError("need exactly deg(a) vectors")
    out = a
    for v in vectors:
        out = interior_product(v, out)
    return out.value()


def _complement(key: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    rest = tuple(i for i in range(DIM) if i not in key)
    sign, _ = sort_sign(key + rest)
    return sign, rest


def hodge_star(a: Form) -> Form:
    out = {}
    for key, val in a._coeffs.items():
        sign, rest = _complement(key)
        out[rest] = sign * val
    return Form(DIM - a.degree, out)


def inner(a: Form, b: Form) -> Fraction:
    """Pointwise inner product; monomials are orthonormal."""
    if a.degree != b.degree:
        raise ValueError(f"inner product of forms of degree {a.degree} and {b.degree}")
    return sum((v * b._coeffs.get(k, 0) for k, v in a._coeffs.items()), Fraction(0))


def norm2(a: Form) -> Fraction:
    return inner(a, a)


VOLUME = Form(DIM, {tuple(range(DIM)): 1})
REEB = TangentVector.basis(DIM - 1)
ALPHA = Form.monomial([DIM - 1])


def transverse_part(a: Form) -> Form:
    """a - alpha ^ i_R a: strips every term containing w^5."""
    return Form(a.degree, {k: v for k, v in a._coeffs.items() if DIM - 1 not in k})


def is_transverse(a: Form) -> bool:
    return interior_product(REEB, a).is_zero()


def basis_forms(degree: int) -> list[Form]:
    return [Form(degree, {key: 1}) for key in combinations(range(DIM), degree)]


def all_monomials() -> list[Form]:
    """The 32 basis monomials of all degrees."""
    return [f for k in range(DIM + 1) for f in basis_forms(k)]


def one_form_to_vector(a: Form) -> TangentVector:
    """Metric dual (the metric is the identity in the coframe)."""
    return TangentVector(a.vector())


def vector_to_one_form(v: TangentVector) -> Form:
    return Form.from_vector(v.components)
