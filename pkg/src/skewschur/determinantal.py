"""Column matrices ``M_{F,c}``, the polynomial ``D_F`` and the Garnir block matrix.

``D_F`` is the product over columns of ``det M_{F,c}`` where
``M_{F,c}[i, j] = Z[rows_c[i], F[rows_c[j], c]]``. The map ``F -> D_F``
respects every straightening relation, so equal module elements give equal
polynomials.
"""
from __future__ import annotations

from functools import lru_cache

from .garnir import GarnirData, garnir_action, garnir_cells, shuffles
from .polyring import (
    Monomial,
    SparsePoly,
    SymbolicMatrix,
    determinant,
    monomial_from_variables,
    rank_of,
)
from .shapes import Filling, TableauOrderedSet, is_ssyt


def column_matrix(f: Filling, c: int) -> SymbolicMatrix:
    rows = f.shape.column_rows(c)
    letters = f.columns[c - 1]
    return SymbolicMatrix([[SparsePoly.var(r, v) for v in letters] for r in rows])


@lru_cache(maxsize=65536)
def _column_determinant(first_row: int, letters: tuple[int, ...]) -> SparsePoly:
    if len(set(letters)) != len(letters):
        return SparsePoly()
    rows = range(first_row, first_row + len(letters))
    return determinant([[SparsePoly.var(r, v) for v in letters] for r in rows])


def column_determinant(f: Filling, c: int) -> SparsePoly:
    rows = f.shape.column_rows(c)
    return _column_determinant(rows.start, f.columns[c - 1])


def d_poly(f: Filling) -> SparsePoly:
    """``D_F``, the image of the filling's class in the polynomial ring."""
    result = SparsePoly.const(1)
    for c in range(1, f.shape.num_cols + 1):
        det = column_determinant(f, c)
        if not det:
            return SparsePoly()
        result = result * det
    return result


def tableau_monomial(s: Filling) -> Monomial:
    """``M_S``: the product of ``Z[r, S[r, c]]`` over all cells."""
    return monomial_from_variables((r, v) for (r, _), v in zip(s.shape.cells, s.values))


def ssyt_leading_monomial(t: Filling) -> Monomial:
    """Leading monomial of ``D_T`` for an SSYT, the product of the column-matrix diagonals."""
    if not is_ssyt(t):
        raise ValueError("expected a semistandard tableau")
    return tableau_monomial(t)


def garnir_block_matrix(f: Filling, g: GarnirData) -> SymbolicMatrix:
    """The block matrix ``[[M_{c1}, Mbar^b_{c2}], [Mbar^a_{c1}, M_{c2}]]``.

    The off-diagonal blocks copy the variables of the opposite column but keep
    only the columns belonging to Garnir cells; all other entries are zero.
    """
    shape = f.shape
    g.check(shape)
    gar = set(garnir_cells(shape, g))
    rows1, rows2 = shape.column_rows(g.c1), shape.column_rows(g.c2)
    col1, col2 = f.columns[g.c1 - 1], f.columns[g.c2 - 1]
    zero = SparsePoly()

    def block(row_idx, cell_rows, letters, col, masked):
        return [
            [
                SparsePoly.var(r, v) if not masked or (rr, col) in gar else zero
                for rr, v in zip(cell_rows, letters)
            ]
            for r in row_idx
        ]

    top = [a + b for a, b in zip(block(rows1, rows1, col1, g.c1, False), block(rows1, rows2, col2, g.c2, True))]
    bottom = [a + b for a, b in zip(block(rows2, rows1, col1, g.c1, True), block(rows2, rows2, col2, g.c2, False))]
    return SymbolicMatrix(top + bottom)


def garnir_signed_sum(f: Filling, g: GarnirData) -> SparsePoly:
    """``sum over (a, b)-shuffles pi of sgn(pi) * D_{F_pi}``."""
    g.check(f.shape)
    total = SparsePoly()
    for pi in shuffles(g.a, g.b):
        term = d_poly(garnir_action(f, g, pi))
        total = total + (term if pi.sign > 0 else -term)
    return total


def verify_garnir_determinant_identity(f: Filling, g: GarnirData) -> bool:
    if not g.is_admissible(f.shape):
        raise ValueError(f"{g} is not admissible for {f.shape}")
    return garnir_signed_sum(f, g).is_zero()


def linear_independence_rank(ctx: TableauOrderedSet) -> int:
    """Rank of the coefficient matrix of ``D_S`` over the tableaux of a context."""
    polys = [d_poly(t) for t in ctx]
    monos = sorted({m for p in polys for m in p.terms})
    if not monos:
        return 0
    return rank_of([[p.coefficient(m) for m in monos] for p in polys])
