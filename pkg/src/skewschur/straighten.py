"""Non-iterative straightening in the D-basis, basis conversion and the bilinear form.

For a fixed (shape, content) context with SSYT ``S_1 > ... > S_n`` let
``R[i][j] = R(S_i, S_j)``. The D-basis is defined recursively by
``D_i = S_i - sum_{j<i} R(S_i, S_j) D_j``, and every filling satisfies
``[F] = sum_j R(F, S_j) [D_j]``. Hence ``R`` expresses the SSYT basis in the
D-basis, and its inverse ``L`` (whose rows are the ``D_i`` in SSYT
coordinates) is the transition the other way. Both are lower unitriangular.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .expansion import BASIS_KINDS, D, SSYT, Expansion
from .garnir import iterative_straighten
from .rearrange import evaluation_vector, rearrangement_coefficient
from .shapes import Filling, TableauOrderedSet, context_of, has_column_duplicate, sort_filling

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _lower_unitriangular_inverse(m: Matrix) -> Matrix:
    """Inverse of a lower unitriangular integer matrix by forward substitution."""
    n = len(m)
    inv = _identity(n)
    for i in range(n):
        for j in range(i):
            inv[i][j] = -sum(m[i][k] * inv[k][j] for k in range(j, i))
    return inv


def _row_times(vec: list[int], m: Matrix) -> list[int]:
    n = len(m)
    return [sum(vec[i] * m[i][j] for i in range(n) if vec[i]) for j in range(n)]


class DBasis:
    """The D-basis of one context.

    Attributes:
        context: the ordered SSYT of the context.
        rcoeff: ``rcoeff[i][j] = R(S_i, S_j)``; row ``i`` is ``S_i`` in D coordinates.
        transition: row ``i`` is ``D_i`` in SSYT coordinates.
    """

    def __init__(self, context: TableauOrderedSet, engine: str = "backtrack"):
        self.context = context
        tabs = list(context)
        n = len(tabs)
        self.rcoeff: Matrix = [[rearrangement_coefficient(s, t, engine) for t in tabs] for s in tabs]
        # D_i = S_i - sum_{j<i} R(S_i, S_j) D_j, resolved row by row
        rows: Matrix = []
        for i in range(n):
            row = [int(k == i) for k in range(n)]
            for j in range(i):
                r = self.rcoeff[i][j]
                if r:
                    row = [x - r * y for x, y in zip(row, rows[j])]
            rows.append(row)
        self.transition: Matrix = rows

    def __len__(self) -> int:
        return len(self.context)

    @property
    def inverse_transition(self) -> Matrix:
        """``L^{-1}``, computed independently of ``rcoeff`` by forward substitution."""
        return _lower_unitriangular_inverse(self.transition)

    def d_element(self, i: int) -> Expansion:
        """``D_{i+1}`` as an SSYT-basis expansion."""
        return Expansion.from_vector(SSYT, self.context, self.transition[i])

    def is_unitriangular(self) -> bool:
        n = len(self)
        return all(
            self.transition[i][j] == int(i == j) for i in range(n) for j in range(i, n)
        ) and all(self.rcoeff[i][j] == int(i == j) for i in range(n) for j in range(i, n))


@lru_cache(maxsize=4096)
def build_dbasis(context: TableauOrderedSet, engine: str = "backtrack") -> DBasis:
    return DBasis(context, engine)


def straighten_noniterative(f: Filling, engine: str = "backtrack") -> Expansion:
    """``[F]`` in the D-basis: the coefficients are ``R(F, S_j)``, read off directly."""
    ctx = context_of(f)
    if has_column_duplicate(f):
        return Expansion(D, ctx, {})
    return Expansion.from_vector(D, ctx, evaluation_vector(f, ctx, engine))


def convert(e: Expansion, to: str) -> Expansion:
    """Re-express an expansion in the other basis of its context."""
    if to not in BASIS_KINDS:
        raise ValueError(f"unknown basis kind {to!r}")
    if e.basis == to:
        return e
    db = build_dbasis(e.context)
    vec = e.vector()
    if to == SSYT:
        return Expansion.from_vector(SSYT, e.context, _row_times(vec, db.transition))
    return Expansion.from_vector(D, e.context, _row_times(vec, db.rcoeff))


def straighten(f: Filling, method: str = "noniterative", basis: str = D, engine: str = "backtrack") -> Expansion:
    if method == "noniterative":
        e = straighten_noniterative(f, engine)
    elif method == "iterative":
        e = iterative_straighten(f)
    else:
        raise ValueError(f"unknown method {method!r}")
    return convert(e, basis)


def support_bound(f: Filling) -> int:
    """0-based position of ``sort(F)`` in its context; D-coefficients vanish beyond it."""
    if has_column_duplicate(f):
        raise ValueError("support bound is undefined for a filling with a repeated column entry")
    return context_of(f).index(sort_filling(f))


def inner(u: Expansion, v: Expansion) -> int:
    """The bilinear form, determined by ``<S_a, D_b> = R(S_a, S_b)``; zero across contexts."""
    if u.context != v.context:
        return 0
    db = build_dbasis(u.context)
    su = convert(u, SSYT).coeffs
    dv = convert(v, D).coeffs
    return sum(a * b * db.rcoeff[i][j] for i, a in su.items() for j, b in dv.items())


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x) for col in bt] for row in a]


def _ssyt_gram(db: DBasis) -> Matrix:
    """``<S_a, S_b>``: since ``S_b = sum_k R(S_b, S_k) D_k`` this is ``(R R^T)[a][b]``."""
    r = db.rcoeff
    return _matmul(r, [list(col) for col in zip(*r)])


def gram_matrix(db: DBasis) -> Matrix:
    """``G[i][j] = <D_i, D_j>``, each side expanded in the SSYT basis."""
    t = db.transition
    return _matmul(_matmul(t, _ssyt_gram(db)), [list(col) for col in zip(*t)])


def verify_gram_schmidt(db: DBasis) -> bool:
    """Gram-Schmidt on ``S_1..S_n`` under the form, over the rationals, must reproduce ``D``."""
    n = len(db)
    ss = [[Fraction(x) for x in row] for row in _ssyt_gram(db)]
    ortho: list[list[Fraction]] = []
    # q_form[k] is the row vector q_k^T ss, so <S_i, q_k> = q_form[k][i]
    q_form: list[list[Fraction]] = []
    q_norm: list[Fraction] = []
    for i in range(n):
        w = [Fraction(int(k == i)) for k in range(n)]
        for q, qf, nq in zip(ortho, q_form, q_norm):
            c = qf[i] / nq
            if c:
                w = [x - c * y for x, y in zip(w, q)]
        wf = [sum((w[a] * ss[a][b] for a in range(n) if w[a]), Fraction(0)) for b in range(n)]
        norm = sum((wf[b] * w[b] for b in range(n) if w[b]), Fraction(0))
        if norm <= 0:
            return False
        ortho.append(w)
        q_form.append(wf)
        q_norm.append(norm)
    return ortho == [[Fraction(x) for x in row] for row in db.transition]


def is_identity(m: Matrix) -> bool:
    return m == _identity(len(m))
