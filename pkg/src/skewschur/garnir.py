"""Shuffles, the Garnir action on fillings, and classical iterative straightening.

The iterative routine here is deliberately the textbook algorithm: it serves
as the independent reference against which the closed-form expansion in
:mod:`skewschur.straighten` is checked.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .expansion import SSYT, Expansion
from .shapes import Filling, SkewShape, colsort, context_of, is_column_strict


class Shuffle(NamedTuple):
    perm: tuple[int, ...]  # one-line notation, values 1..a+b
    sign: int


@lru_cache(maxsize=None)
def shuffles(a: int, b: int) -> tuple[Shuffle, ...]:
    """The (a, b)-shuffles in lexicographic one-line order; the identity comes first."""
    if a < 1 or b < 1:
        raise ValueError("shuffle block sizes must be positive")
    n = a + b
    out = []
    for head in itertools.combinations(range(1, n + 1), a):
        tail = [v for v in range(1, n + 1) if v not in head]
        # inversions: pairs (x in head, y in tail) with x > y
        inv, k = 0, 0
        for x in head:
            while k < b and tail[k] < x:
                k += 1
            inv += k
        out.append(Shuffle(head + tuple(tail), -1 if inv % 2 else 1))
    return tuple(out)


@dataclass(frozen=True)
class GarnirData:
    c1: int
    c2: int
    a: int
    b: int

    def check(self, shape: SkewShape) -> None:
        """Raise ValueError unless the parameters lie within the shape's bounds."""
        if not 1 <= self.c1 < self.c2 <= shape.num_cols:
            raise ValueError(f"need 1 <= c1 < c2 <= {shape.num_cols}, got c1={self.c1}, c2={self.c2}")
        h = shape.col_heights
        if not 1 <= self.a <= h[self.c1 - 1]:
            raise ValueError(f"a={self.a} outside 1..{h[self.c1 - 1]}")
        if not 1 <= self.b <= h[self.c2 - 1]:
            raise ValueError(f"b={self.b} outside 1..{h[self.c2 - 1]}")

    def is_admissible(self, shape: SkewShape) -> bool:
        try:
            self.check(shape)
        except ValueError:
            return False
        return shape.lam_conj[self.c1 - 1] - self.a < shape.mu_conj[self.c2 - 1] + self.b


def garnir_cells(shape: SkewShape, g: GarnirData) -> tuple[tuple[int, int], ...]:
    """The Garnir cells in the enumeration order: bottom ``a`` of ``c1``, then top ``b`` of ``c2``."""
    g.check(shape)
    bottom = shape.lam_conj[g.c1 - 1]
    top = shape.mu_conj[g.c2 - 1]
    return tuple((r, g.c1) for r in range(bottom - g.a + 1, bottom + 1)) + tuple(
        (r, g.c2) for r in range(top + 1, top + g.b + 1)
    )


def garnir_action(f: Filling, g: GarnirData, pi: Shuffle | tuple[int, ...]) -> Filling:
    """``F_pi``: the entry at the k-th Garnir cell becomes the entry at the pi(k)-th."""
    perm = pi.perm if isinstance(pi, Shuffle) else tuple(pi)
    pos = [f.shape.cell_index[cell] for cell in garnir_cells(f.shape, g)]
    if sorted(perm) != list(range(1, len(pos) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(pos)}")
    old = f.values
    new = list(old)
    for k, p in enumerate(pos):
        new[p] = old[pos[perm[k] - 1]]
    return f.with_values(new)


def admissible_data(shape: SkewShape) -> list[GarnirData]:
    out = []
    h = shape.col_heights
    for c1, c2 in itertools.combinations(range(1, shape.num_cols + 1), 2):
        for a in range(1, h[c1 - 1] + 1):
            for b in range(1, h[c2 - 1] + 1):
                if shape.lam_conj[c1 - 1] - a < shape.mu_conj[c2 - 1] + b:
                    out.append(GarnirData(c1, c2, a, b))
    return out


def violating_pair(f: Filling) -> tuple[int, int, int] | None:
    """First ``(r, c1, c2)`` with ``c1 < c2`` and ``F[r, c1] > F[r, c2]``, scanning rows top-down.

    Requires ``f`` to be strictly increasing down every column; returns None
    exactly when ``f`` is an SSYT.
    """
    if not is_column_strict(f):
        raise ValueError("violating_pair needs a column-strict filling")
    shape = f.shape
    for r, row in enumerate(f.rows, start=1):
        first_col = shape.mu_padded[r - 1] + 1
        for i, j in itertools.combinations(range(len(row)), 2):
            if row[i] > row[j]:
                return r, first_col + i, first_col + j
    return None


def straightening_data(shape: SkewShape, r: int, c1: int, c2: int) -> GarnirData:
    """Garnir parameters resolving a row violation at ``(r, c1), (r, c2)``; always admissible."""
    return GarnirData(c1, c2, shape.lam_conj[c1 - 1] - r + 1, r - shape.mu_conj[c2 - 1])


@dataclass
class IterationStats:
    steps: int = 0  # Garnir rewrites performed
    generated: int = 0  # nonzero terms produced by rewrites (before merging)
    peak_terms: int = 0  # largest number of pending non-final terms
    monotone: bool = True  # every produced term was later in column-word order


def _column_key(shape: SkewShape, values) -> tuple[int, ...]:
    return tuple(values[p] for pos in reversed(shape.column_positions) for p in pos)


def iterative_straighten_stats(f: Filling) -> tuple[Expansion, IterationStats]:
    """Straighten ``f`` into the SSYT basis by repeated Garnir rewriting.

    Pending terms are keyed by column-sorted fillings and processed in
    increasing column-word order; every rewrite only produces later terms,
    so each filling is expanded at most once.
    """
    ctx = context_of(f)
    shape = f.shape
    stats = IterationStats()
    start, sign, dup = colsort(f)
    if dup:
        return Expansion(SSYT, ctx, {}), stats

    pending: dict[tuple[int, ...], int] = {start.values: sign}
    heap = [(_column_key(shape, start.values), start.values)]
    result: dict[int, int] = {}
    while heap:
        key, values = heapq.heappop(heap)
        coeff = pending.pop(values)
        if not coeff:
            continue
        current = Filling(shape, values, f.m)
        witness = violating_pair(current)
        if witness is None:
            i = ctx.index(current)
            result[i] = result.get(i, 0) + coeff
            continue
        stats.steps += 1
        g = straightening_data(shape, *witness)
        for pi in shuffles(g.a, g.b)[1:]:
            moved, s, dup = colsort(garnir_action(current, g, pi))
            if dup:
                continue
            stats.generated += 1
            new_key = _column_key(shape, moved.values)
            if new_key <= key:
                stats.monotone = False
            delta = -coeff * pi.sign * s
            if moved.values in pending:
                pending[moved.values] += delta
            else:
                pending[moved.values] = delta
                heapq.heappush(heap, (new_key, moved.values))
        stats.peak_terms = max(stats.peak_terms, len(pending))
    return Expansion(SSYT, ctx, result), stats


def iterative_straighten(f: Filling) -> Expansion:
    return iterative_straighten_stats(f)[0]
