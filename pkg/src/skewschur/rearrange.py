"""Column permutations and rearrangement coefficients.

``R(F, S)`` is the signed number of column permutations carrying ``F`` to a
filling with the same row multisets as ``S``. Two engines compute it:
``"backtrack"`` searches the column permutations directly, pruning on row
multisets; ``"polynomial"`` reads off the coefficient of ``M_S`` in ``D_F``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .determinantal import d_poly, tableau_monomial
from .shapes import Filling, SkewShape, TableauOrderedSet, _permutation_sign

ENGINES = ("backtrack", "polynomial")


@dataclass(frozen=True)
class ColumnPermutation:
    """One permutation per column, in 1-based one-line notation (``perms[c - 1]``)."""

    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        perms = tuple(tuple(int(x) for x in p) for p in self.perms)
        for p in perms:
            if sorted(p) != list(range(1, len(p) + 1)):
                raise ValueError(f"{p} is not a permutation")
        object.__setattr__(self, "perms", perms)

    @classmethod
    def identity(cls, shape: SkewShape) -> "ColumnPermutation":
        return cls(tuple(tuple(range(1, h + 1)) for h in shape.col_heights))

    @property
    def sign(self) -> int:
        s = 1
        for p in self.perms:
            s *= _permutation_sign([x - 1 for x in p])
        return s

    def __mul__(self, other: "ColumnPermutation") -> "ColumnPermutation":
        # (pi sigma)(i) = pi(sigma(i)), componentwise
        if len(self.perms) != len(other.perms):
            raise ValueError("column permutations of different shapes")
        return ColumnPermutation(
            tuple(tuple(p[s - 1] for s in q) for p, q in zip(self.perms, other.perms))
        )

    def inverse(self) -> "ColumnPermutation":
        out = []
        for p in self.perms:
            inv = [0] * len(p)
            for i, x in enumerate(p, start=1):
                inv[x - 1] = i
            out.append(tuple(inv))
        return ColumnPermutation(tuple(out))

    def is_identity(self) -> bool:
        return all(p == tuple(range(1, len(p) + 1)) for p in self.perms)


def iter_column_permutations(shape: SkewShape) -> Iterator[ColumnPermutation]:
    """All of the column Young subgroup, lexicographic in the one-line notations."""
    per_column = [list(itertools.permutations(range(1, h + 1))) for h in shape.col_heights]
    for combo in itertools.product(*per_column):
        yield ColumnPermutation(combo)


def apply_column_permutation(f: Filling, p: ColumnPermutation) -> Filling:
    """Left action: the entry in position ``j`` of column ``c`` moves to position ``p_c(j)``."""
    positions = f.shape.column_positions
    if tuple(len(q) for q in p.perms) != f.shape.col_heights:
        raise ValueError("column permutation does not match the filling's shape")
    old = f.values
    new = list(old)
    for pos, perm in zip(positions, p.perms):
        for j, target in enumerate(perm):
            new[pos[target - 1]] = old[pos[j]]
    return f.with_values(new)


def row_contents(f: Filling) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(row)) for row in f.rows)


def same_row_content(a: Filling, b: Filling) -> bool:
    if a.shape != b.shape:
        raise ValueError("fillings have different shapes")
    return row_contents(a) == row_contents(b)


def _backtrack_coefficient(f: Filling, s: Filling) -> int:
    shape = f.shape
    # residual[r][v]: copies of letter v still owed to row r of s
    residual = [Counter(row) for row in s.rows]
    columns = [
        (list(shape.column_rows(c)), list(col))
        for c, col in enumerate(f.columns, start=1)
        if col
    ]
    total = 0

    def place_column(k: int, sign: int):
        nonlocal total
        if k == len(columns):
            total += sign
            return
        rows, letters = columns[k]
        h = len(letters)
        used = [False] * h
        # chosen[i] = source position whose letter lands in the i-th cell of the column
        chosen: list[int] = []

        def place_cell(i: int):
            if i == h:
                place_column(k + 1, sign * _permutation_sign(chosen))
                return
            need = residual[rows[i] - 1]
            for j in range(h):
                if used[j]:
                    continue
                v = letters[j]
                if need[v] <= 0:
                    continue
                need[v] -= 1
                used[j] = True
                chosen.append(j)
                place_cell(i + 1)
                chosen.pop()
                used[j] = False
                need[v] += 1

        place_cell(0)

    place_column(0, 1)
    return total


def rearrangement_coefficient(f: Filling, s: Filling, engine: str = "backtrack") -> int:
    """``R(F, S)``; zero when the contents differ."""
    if f.shape != s.shape:
        raise ValueError("fillings have different shapes")
    if Counter(f.values) != Counter(s.values):
        return 0
    if engine == "backtrack":
        return _backtrack_coefficient(f, s)
    if engine == "polynomial":
        return d_poly(f).coefficient(tableau_monomial(s))
    raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")


def rearrangement_coefficient_bruteforce(f: Filling, s: Filling) -> int:
    """Definition-level sum over the whole column Young subgroup. Exponential; tests only."""
    target = row_contents(s)
    return sum(
        p.sign
        for p in iter_column_permutations(f.shape)
        if row_contents(apply_column_permutation(f, p)) == target
    )


def evaluation_vector(f: Filling, ctx: TableauOrderedSet | Sequence[Filling], engine: str = "backtrack") -> list[int]:
    """``(R(F, S_j))_j`` over the tableaux of a context."""
    tableaux = list(ctx)
    if engine == "polynomial":
        if tableaux and tableaux[0].shape != f.shape:
            raise ValueError("fillings have different shapes")
        if tableaux and Counter(f.values) != Counter(tableaux[0].values):
            return [0] * len(tableaux)
        poly = d_poly(f)
        return [poly.coefficient(tableau_monomial(t)) for t in tableaux]
    return [rearrangement_coefficient(f, t, engine) for t in tableaux]
