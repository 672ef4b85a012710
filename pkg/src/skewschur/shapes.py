"""Partitions, skew diagrams, fillings and semistandard tableaux.

Cells are addressed 1-based as ``(row, col)``. A :class:`Filling` stores its
entries as a flat tuple in row-major cell order, which is also the reading
word.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Cell = tuple[int, int]
Content = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    """Return ``parts`` as a tuple with trailing zeros stripped, or raise ValueError."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i, p in enumerate(parts):
        if p <= 0:
            raise ValueError(f"partition parts must be positive, got {parts}")
        if i and p > parts[i - 1]:
            raise ValueError(f"partition must be weakly decreasing, got {parts}")
    return parts


def conjugate(parts: Sequence[int]) -> Partition:
    """Conjugate partition: entry ``j`` counts the parts that are at least ``j``."""
    parts = check_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram lambda/mu."""

    lam: Partition
    mu: Partition = ()

    def __post_init__(self):
        lam = check_partition(self.lam)
        mu = check_partition(self.mu)
        if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
            raise ValueError(f"mu={mu} is not contained in lambda={lam}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def num_rows(self) -> int:
        return len(self.lam)

    @property
    def num_cols(self) -> int:
        return self.lam[0] if self.lam else 0

    @cached_property
    def mu_padded(self) -> Partition:
        return self.mu + (0,) * (len(self.lam) - len(self.mu))

    @cached_property
    def lam_conj(self) -> Partition:
        return conjugate(self.lam)

    @cached_property
    def mu_conj(self) -> Partition:
        """Conjugate of mu, right-padded with zeros to ``num_cols`` entries."""
        mc = conjugate(self.mu)
        return mc + (0,) * (self.num_cols - len(mc))

    @cached_property
    def col_heights(self) -> tuple[int, ...]:
        """``col_heights[c - 1]`` is the number of cells in column ``c``."""
        return tuple(l - m for l, m in zip(self.lam_conj, self.mu_conj))

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(
            (r, c)
            for r in range(1, self.num_rows + 1)
            for c in range(self.mu_padded[r - 1] + 1, self.lam[r - 1] + 1)
        )

    @cached_property
    def cell_index(self) -> dict[Cell, int]:
        return {cell: k for k, cell in enumerate(self.cells)}

    def column_rows(self, c: int) -> range:
        """Row indices of the cells of column ``c``, top to bottom."""
        if not 1 <= c <= self.num_cols:
            raise ValueError(f"column {c} out of range 1..{self.num_cols}")
        return range(self.mu_conj[c - 1] + 1, self.lam_conj[c - 1] + 1)

    @cached_property
    def column_positions(self) -> tuple[tuple[int, ...], ...]:
        """Flat positions of each column's cells, top to bottom; index ``c - 1``."""
        idx = self.cell_index
        return tuple(
            tuple(idx[(r, c)] for r in self.column_rows(c))
            for c in range(1, self.num_cols + 1)
        )

    @cached_property
    def row_slices(self) -> tuple[slice, ...]:
        out, start = [], 0
        for l, m in zip(self.lam, self.mu_padded):
            out.append(slice(start, start + l - m))
            start += l - m
        return tuple(out)

    def __contains__(self, cell) -> bool:
        return cell in self.cell_index

    def __str__(self) -> str:
        lam = ",".join(map(str, self.lam))
        mu = ",".join(map(str, self.mu))
        return f"({lam})/({mu})"


def skew_cells(shape: SkewShape) -> tuple[Cell, ...]:
    return shape.cells


@dataclass(frozen=True)
class Filling:
    """An assignment of letters ``1..m`` to the cells of a skew shape.

    ``values`` lists the entries in row-major order, so it doubles as the
    reading word.
    """

    shape: SkewShape
    values: tuple[int, ...]
    m: int = field(default=0)

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != self.shape.size:
            raise ValueError(
                f"filling has {len(values)} entries but shape {self.shape} has {self.shape.size} cells"
            )
        m = int(self.m) if self.m else max(values, default=1)
        if m < 1:
            raise ValueError("alphabet size must be positive")
        bad = [v for v in values if not 1 <= v <= m]
        if bad:
            raise ValueError(f"entries {bad} are outside the alphabet 1..{m}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "m", m)

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Sequence[Sequence[int]], m: int = 0) -> "Filling":
        rows = [list(r) for r in rows]
        if len(rows) != shape.num_rows:
            raise ValueError(f"expected {shape.num_rows} rows, got {len(rows)}")
        for r, (row, sl) in enumerate(zip(rows, shape.row_slices), start=1):
            if len(row) != sl.stop - sl.start:
                raise ValueError(f"row {r} needs {sl.stop - sl.start} entries, got {len(row)}")
        return cls(shape, tuple(itertools.chain.from_iterable(rows)), m)

    @classmethod
    def from_columns(cls, shape: SkewShape, columns: Sequence[Sequence[int]], m: int = 0) -> "Filling":
        values = [0] * shape.size
        if len(columns) != shape.num_cols:
            raise ValueError(f"expected {shape.num_cols} columns, got {len(columns)}")
        for pos, col in zip(shape.column_positions, columns):
            if len(pos) != len(col):
                raise ValueError("column length does not match the shape")
            for p, v in zip(pos, col):
                values[p] = v
        return cls(shape, tuple(values), m)

    def __getitem__(self, cell: Cell) -> int:
        return self.values[self.shape.cell_index[cell]]

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.values[sl] for sl in self.shape.row_slices)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        v = self.values
        return tuple(tuple(v[p] for p in pos) for pos in self.shape.column_positions)

    @property
    def content(self) -> Content:
        counts = [0] * self.m
        for v in self.values:
            counts[v - 1] += 1
        return tuple(counts)

    def with_values(self, values) -> "Filling":
        return Filling(self.shape, tuple(values), self.m)

    def __str__(self) -> str:
        width = len(str(self.m))
        lines = []
        for (r, row), mu_r in zip(enumerate(self.rows, 1), self.shape.mu_padded):
            lines.append(" ".join(["." * width] * mu_r + [str(v).rjust(width) for v in row]))
        return "\n".join(lines)


def content(f: Filling) -> Content:
    return f.content


def is_ssyt(f: Filling) -> bool:
    """Rows weakly increase left to right, columns strictly increase downward."""
    if any(row[i] > row[i + 1] for row in f.rows for i in range(len(row) - 1)):
        return False
    return all(col[i] < col[i + 1] for col in f.columns for i in range(len(col) - 1))


def is_column_strict(f: Filling) -> bool:
    return all(col[i] < col[i + 1] for col in f.columns for i in range(len(col) - 1))


def has_column_duplicate(f: Filling) -> bool:
    return any(len(set(col)) != len(col) for col in f.columns)


def reading_word(f: Filling) -> tuple[int, ...]:
    return f.values


def column_word(f: Filling) -> tuple[int, ...]:
    """Columns read right to left, each top to bottom."""
    return tuple(itertools.chain.from_iterable(reversed(f.columns)))


def _permutation_sign(perm: Sequence[int]) -> int:
    # cycle decomposition: each cycle of length k contributes (k - 1) transpositions
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def colsort(f: Filling) -> tuple[Filling, int, bool]:
    """Sort each column increasing downward.

    Returns ``(sorted_filling, sign, has_column_duplicate)``. ``sign`` is the
    sign of the sorting column permutation; it is fixed to +1 when some
    column repeats an entry.
    """
    values = list(f.values)
    sign, dup = 1, False
    for pos in f.shape.column_positions:
        col = [values[p] for p in pos]
        order = sorted(range(len(col)), key=col.__getitem__)
        if not dup:
            if len(set(col)) != len(col):
                dup = True
            else:
                sign *= _permutation_sign(order)
        for p, k in zip(pos, order):
            values[p] = col[k]
    return f.with_values(values), (1 if dup else sign), dup


def rowsort(f: Filling) -> Filling:
    return f.with_values(itertools.chain.from_iterable(sorted(row) for row in f.rows))


def sort_filling(f: Filling) -> Filling:
    """``rowsort(colsort(f))``; an SSYT whenever no column repeats an entry."""
    return rowsort(colsort(f)[0])


def compare_reading_order(a: Filling, b: Filling) -> int:
    """-1, 0 or 1 as ``a`` precedes, equals or follows ``b`` in reading-word order."""
    if a.shape != b.shape:
        raise ValueError("fillings have different shapes")
    wa, wb = reading_word(a), reading_word(b)
    return (wa > wb) - (wa < wb)


def compare_column_order(a: Filling, b: Filling) -> int:
    wa, wb = column_word(a), column_word(b)
    return (wa > wb) - (wa < wb)


@dataclass(frozen=True)
class TableauOrderedSet:
    """All SSYT of a fixed shape and content, index 0 being the largest in reading order.

    Position ``i`` corresponds to the tableau labelled ``S_{i+1}``.
    """

    shape: SkewShape
    content: Content
    tableaux: tuple[Filling, ...]

    @property
    def m(self) -> int:
        return len(self.content)

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {t.values: i for i, t in enumerate(self.tableaux)}

    def index(self, t: Filling) -> int:
        try:
            return self._index[t.values]
        except KeyError:
            raise ValueError("filling is not a tableau of this context") from None

    def __contains__(self, t) -> bool:
        return isinstance(t, Filling) and t.shape == self.shape and t.values in self._index

    def __len__(self) -> int:
        return len(self.tableaux)

    def __iter__(self) -> Iterator[Filling]:
        return iter(self.tableaux)

    def __getitem__(self, i: int) -> Filling:
        return self.tableaux[i]


def _backtrack_ssyt(shape: SkewShape, remaining: list[int], m: int) -> Iterator[tuple[int, ...]]:
    cells = shape.cells
    idx = shape.cell_index
    # flat positions of the left neighbour and the neighbour above, or -1
    left = [idx.get((r, c - 1), -1) for r, c in cells]
    above = [idx.get((r - 1, c), -1) for r, c in cells]
    values = [0] * len(cells)

    def rec(k: int):
        if k == len(cells):
            yield tuple(values)
            return
        lo = 1
        if left[k] >= 0:
            lo = values[left[k]]
        if above[k] >= 0:
            lo = max(lo, values[above[k]] + 1)
        for v in range(lo, m + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                values[k] = v
                yield from rec(k + 1)
                remaining[v - 1] += 1

    yield from rec(0)


@lru_cache(maxsize=4096)
def _ssyt_context(shape: SkewShape, z: Content) -> TableauOrderedSet:
    m = len(z)
    words = sorted(_backtrack_ssyt(shape, list(z), m), reverse=True)
    return TableauOrderedSet(shape, z, tuple(Filling(shape, w, m) for w in words))


def enumerate_ssyt(shape: SkewShape, z: Sequence[int], m: int | None = None) -> TableauOrderedSet:
    """All SSYT of ``shape`` with content ``z``, sorted so index 0 is the reading-order maximum.

    ``m`` defaults to ``len(z)``; a larger ``m`` pads ``z`` with zeros.
    """
    z = tuple(int(x) for x in z)
    if m is not None:
        if m < len(z) and any(z[m:]):
            raise ValueError("content uses letters beyond the alphabet")
        z = (z + (0,) * m)[:m]
    if any(x < 0 for x in z):
        raise ValueError("content entries must be non-negative")
    if sum(z) != shape.size:
        raise ValueError(f"content {z} sums to {sum(z)}, shape has {shape.size} cells")
    return _ssyt_context(shape, z)


def context_of(f: Filling) -> TableauOrderedSet:
    """The SSYT context sharing ``f``'s shape and content."""
    return _ssyt_context(f.shape, f.content)


# -- enumeration helpers used by the sweeps -----------------------------------------


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def iter_skew_shapes(size: int) -> Iterator[SkewShape]:
    """Skew shapes with exactly ``size`` cells and no empty row or column, sorted by (lambda, mu).

    Every skew diagram is a translate of one of these up to deleting empty
    rows and columns, which do not affect straightening.
    """
    found = []

    # mu is built bottom-up: the last row starts in column 1, and each row
    # above starts no earlier than the row below and at most one past its end
    def rec(lengths: tuple[int, ...], i: int, mu: list[int]):
        if i < 0:
            mu_top = tuple(reversed(mu))
            found.append(SkewShape(tuple(m + l for m, l in zip(mu_top, lengths)), mu_top))
            return
        below = mu[-1]
        end_below = below + lengths[i + 1]
        for m in range(max(below, end_below - lengths[i]), end_below + 1):
            mu.append(m)
            rec(lengths, i - 1, mu)
            mu.pop()

    if size > 0:
        for lengths in _compositions(size):
            rec(lengths, len(lengths) - 2, [0])
    found.sort(key=lambda sh: (sh.lam, sh.mu))
    yield from found


def iter_fillings(shape: SkewShape, m: int) -> Iterator[Filling]:
    for values in itertools.product(range(1, m + 1), repeat=shape.size):
        yield Filling(shape, values, m)


def iter_contents(size: int, m: int) -> Iterator[Content]:
    """Weak compositions of ``size`` into ``m`` non-negative parts."""
    for bars in itertools.combinations(range(size + m - 1), m - 1):
        prev, parts = -1, []
        for b in bars + (size + m - 1,):
            parts.append(b - prev - 1)
            prev = b
        yield tuple(parts)
