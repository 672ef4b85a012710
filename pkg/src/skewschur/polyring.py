"""Sparse integer polynomials in the variables ``Z[i, j]``.

A monomial is a tuple of ``((i, j), exponent)`` pairs sorted by variable.
Monomials are ordered lexicographically with ``Z[1,1]`` as the most
significant variable: at the first variable (in ascending index order) where
two exponents differ, the smaller exponent gives the smaller monomial. So
``Z[1,2]^3 < Z[1,1]``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

Variable = tuple[int, int]
Monomial = tuple[tuple[Variable, int], ...]

ONE: Monomial = ()


def monomial(exponents: Mapping[Variable, int] | Iterable[tuple[Variable, int]]) -> Monomial:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: dict[Variable, int] = {}
    for v, e in items:
        if e < 0:
            raise ValueError("negative exponent")
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def monomial_from_variables(variables: Iterable[Variable]) -> Monomial:
    acc: dict[Variable, int] = {}
    for v in variables:
        acc[v] = acc.get(v, 0) + 1
    return tuple(sorted(acc.items()))


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def monomial_key(m: Monomial) -> tuple:
    """Sort key realising the monomial order: ``key(m1) < key(m2)`` iff ``m1 < m2``."""
    # walking variables ascending, a present variable beats an absent one and a
    # larger exponent beats a smaller one; negating the indices turns "smaller
    # variable present first" into "tuple compares larger"
    return tuple((-i, -j, e) for (i, j), e in m)


def compare_monomials(m1: Monomial, m2: Monomial) -> int:
    k1, k2 = monomial_key(m1), monomial_key(m2)
    return (k1 > k2) - (k1 < k2)


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(f"Z[{i},{j}]" + (f"^{e}" if e > 1 else "") for (i, j), e in m)


PolyLike = Union["SparsePoly", int]


class SparsePoly:
    """An exact polynomial: a map from monomials to nonzero Python ints."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, i: int, j: int) -> "SparsePoly":
        return cls({(((i, j), 1),): 1})

    @classmethod
    def const(cls, c: int) -> "SparsePoly":
        return cls({ONE: c})

    @classmethod
    def from_monomial(cls, m: Monomial, c: int = 1) -> "SparsePoly":
        return cls({m: c})

    @staticmethod
    def _coerce(other: PolyLike) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, int):
            return SparsePoly.const(other)
        return NotImplemented

    def __add__(self, other: PolyLike) -> "SparsePoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "SparsePoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "SparsePoly":
        return (-self) + other

    def __mul__(self, other: PolyLike) -> "SparsePoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return SparsePoly(out)

    __rmul__ = __mul__

    def scale(self, k: int) -> "SparsePoly":
        if not k:
            return SparsePoly()
        return SparsePoly({m: c * k for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, int]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms, key=monomial_key)
        return m, self.terms[m]

    def evaluate(self, point: Mapping[Variable, int] | Callable[[Variable], int]) -> int | Fraction:
        get = point if callable(point) else point.__getitem__
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t *= get(v) ** e
            total += t
        return total

    def variables(self) -> set[Variable]:
        return {v for m in self.terms for v, _ in m}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            if not m:
                parts.append(f"{sign}{mag}")
            elif mag == 1:
                parts.append(f"{sign}{format_monomial(m)}")
            else:
                parts.append(f"{sign}{mag}*{format_monomial(m)}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePoly({self})"


def poly_add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p + q


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p * q


def poly_scale(p: SparsePoly, k: int) -> SparsePoly:
    return p.scale(k)


def leading_monomial(p: SparsePoly) -> tuple[Monomial, int]:
    return p.leading_term()


def coefficient_of(p: SparsePoly, m: Monomial) -> int:
    return p.coefficient(m)


class SymbolicMatrix:
    """A square matrix of :class:`SparsePoly` entries (ints are promoted)."""

    def __init__(self, rows: Sequence[Sequence[PolyLike]]):
        rows = [[e if isinstance(e, SparsePoly) else SparsePoly.const(e) for e in row] for row in rows]
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> SparsePoly:
        i, j = ij
        return self.rows[i][j]

    def evaluate(self, point) -> list[list[int]]:
        return [[e.evaluate(point) for e in row] for row in self.rows]

    def swap_columns(self, i: int, j: int) -> "SymbolicMatrix":
        rows = [list(r) for r in self.rows]
        for r in rows:
            r[i], r[j] = r[j], r[i]
        return SymbolicMatrix(rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolicMatrix) and self.rows == other.rows

    def __repr__(self) -> str:
        return "SymbolicMatrix([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "])"


def determinant(matrix: SymbolicMatrix | Sequence[Sequence[PolyLike]]) -> SparsePoly:
    """Exact determinant by Laplace expansion along rows, memoised on column subsets."""
    if not isinstance(matrix, SymbolicMatrix):
        matrix = SymbolicMatrix(matrix)
    rows = matrix.rows
    n = len(rows)
    memo: dict[int, SparsePoly] = {}

    # minor(mask) is the determinant of rows k.. against the columns in mask,
    # where k = n - popcount(mask)
    def minor(mask: int) -> SparsePoly:
        if mask == 0:
            return SparsePoly.const(1)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        k = n - bin(mask).count("1")
        total = SparsePoly()
        rank = 0
        for c in range(n):
            if not mask >> c & 1:
                continue
            entry = rows[k][c]
            if entry:
                sub = minor(mask & ~(1 << c))
                if sub:
                    term = entry * sub
                    total = total + (term if rank % 2 == 0 else -term)
            rank += 1
        memo[mask] = total
        return total

    return minor((1 << n) - 1)


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def rank_of(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of a rational matrix by Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank
