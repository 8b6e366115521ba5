"""Reference computations written without the package's own machinery.

Forms here are plain dicts {sorted 1-based index tuple: Fraction}; brackets
come straight from the structure-equation coefficients.  Nothing in this file
imports from ``su2curv`` except to translate inputs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

N = 5


def perm_parity(seq) -> int:
    """+1/-1 by counting inversions; 0 on a repeated entry."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


def wedge(a: dict, b: dict) -> dict:
    out: dict = {}
    for I, x in a.items():
        for J, y in b.items():
            s = perm_parity(I + J)
            if s:
                K = tuple(sorted(I + J))
                out[K] = out.get(K, 0) + s * x * y
    return {k: v for k, v in out.items() if v}


def hodge(a: dict) -> dict:
    out = {}
    for I, x in a.items():
        rest = tuple(i for i in range(1, N + 1) if i not in I)
        out[rest] = perm_parity(I + rest) * x
    return out


def as_dict(form) -> dict:
    """Translate a package Form (0-based keys) to the dict convention here."""
    return {tuple(i + 1 for i in k): Fraction(v) for k, v in form.items()}


def all_monomials() -> list[tuple[int, ...]]:
    return [I for k in range(N + 1) for I in combinations(range(1, N + 1), k)]


def brackets(cf) -> list[list[list[Fraction]]]:
    """c[k][i][j] with [e_i, e_j] = sum_k c[k][i][j] e_k and dw^k(e_i, e_j) = -c[k][i][j] (0-based)."""
    c = [[[Fraction(0)] * N for _ in range(N)] for _ in range(N)]
    for k, f in enumerate(cf.d_images):
        for (i, j), v in f.items():
            c[k][i][j] = -Fraction(v)
            c[k][j][i] = Fraction(v)
    return c


def jacobi_ok(c) -> bool:
    """Cyclic sum [[x, y], z] on all basis triples."""
    for x, y, z in permutations(range(N), 3):
        for m in range(N):
            total = Fraction(0)
            for a, b, d in ((x, y, z), (y, z, x), (z, x, y)):
                total += sum(c[k][a][b] * c[m][k][d] for k in range(N))
            if total:
                return False
    return True


def _bracket(c, u, v):
    return [sum(c[k][i][j] * u[i] * v[j] for i in range(N) for j in range(N)) for k in range(N)]


def _ric_quadratic(c, X) -> Fraction:
    """Ric(X, X) for a left-invariant metric with orthonormal e_i.

    Ric(X, X) = -1/2 sum |[X, e_i]|^2 - 1/2 B(X, X) + 1/4 sum <[e_i, e_j], X>^2 - <[H, X], X>,
    with B the Killing form and <H, Y> = tr ad_Y.
    """
    basis = [[Fraction(int(a == b)) for a in range(N)] for b in range(N)]
    term1 = sum(sum(x * x for x in _bracket(c, X, e)) for e in basis)
    ad = [[sum(c[k][i][j] * X[i] for i in range(N)) for j in range(N)] for k in range(N)]  # ad_X[k][j]
    killing = sum(ad[a][b] * ad[b][a] for a in range(N) for b in range(N))
    term3 = sum(sum(cij * x for cij, x in zip(_bracket(c, ei, ej), X)) ** 2 for ei in basis for ej in basis)
    H = [sum(c[k][j][k] for k in range(N)) for j in range(N)]  # tr ad_{e_j}
    term4 = sum(a * b for a, b in zip(_bracket(c, H, X), X))
    return -term1 / 2 - killing / 2 + term3 / 4 - term4


def ricci(cf) -> list[list[Fraction]]:
    """Ricci matrix by polarising the quadratic formula."""
    c = brackets(cf)
    e = [[Fraction(int(a == b)) for a in range(N)] for b in range(N)]
    diag = [_ric_quadratic(c, e[i]) for i in range(N)]
    ric = [[Fraction(0)] * N for _ in range(N)]
    for i in range(N):
        ric[i][i] = diag[i]
        for j in range(i + 1, N):
            s = [a + b for a, b in zip(e[i], e[j])]
            ric[i][j] = ric[j][i] = (_ric_quadratic(c, s) - diag[i] - diag[j]) / 2
    return ric


def koszul(cf):
    """Gamma[i][j][k] = <nabla_{e_i} e_j, e_k> from 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>."""
    c = brackets(cf)
    return [[[(c[k][i][j] - c[i][j][k] + c[j][k][i]) / 2 for k in range(N)] for j in range(N)] for i in range(N)]


def sectional(cf, a: int, b: int) -> Fraction:
    """K(e_a, e_b) = <R(e_a, e_b) e_b, e_a>, 0-based labels, R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]."""
    G = koszul(cf)
    c = brackets(cf)

    def nabla(i, v):
        return [sum(G[i][j][k] * v[j] for j in range(N)) for k in range(N)]

    def nabla_vec(u, v):
        out = [Fraction(0)] * N
        for i in range(N):
            if u[i]:
                out = [o + u[i] * x for o, x in zip(out, nabla(i, v))]
        return out

    eb = [Fraction(int(k == b)) for k in range(N)]
    t1 = nabla(a, nabla(b, eb))
    t2 = nabla(b, nabla(a, eb))
    br = [c[k][a][b] for k in range(N)]
    t3 = nabla_vec(br, eb)
    R = [x - y - z for x, y, z in zip(t1, t2, t3)]
    return R[a]
