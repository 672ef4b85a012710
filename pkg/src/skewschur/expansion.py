from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .shapes import Filling, TableauOrderedSet

SSYT = "ssyt"
D = "d"
BASIS_KINDS = (SSYT, D)


@dataclass(frozen=True)
class Expansion:
    """An integer combination of basis vectors of one (shape, content) context.

    ``coeffs`` maps a 0-based position in ``context`` to a nonzero integer;
    position ``i`` stands for ``S_{i+1}`` or ``D_{i+1}`` depending on ``basis``.
    """

    basis: str
    context: TableauOrderedSet
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASIS_KINDS:
            raise ValueError(f"unknown basis kind {self.basis!r}")
        n = len(self.context)
        clean = {}
        for i, a in self.coeffs.items():
            if not 0 <= i < n:
                raise ValueError(f"index {i} out of range for a context of size {n}")
            if a:
                clean[int(i)] = int(a)
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_vector(cls, basis: str, context: TableauOrderedSet, vec: Iterable[int]) -> "Expansion":
        vec = list(vec)
        if len(vec) != len(context):
            raise ValueError("vector length does not match the context")
        return cls(basis, context, dict(enumerate(vec)))

    def vector(self) -> list[int]:
        out = [0] * len(self.context)
        for i, a in self.coeffs.items():
            out[i] = a
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> Iterator[tuple[int, Filling, int]]:
        for i, a in self.coeffs.items():
            yield i, self.context[i], a

    def __len__(self) -> int:
        return len(self.coeffs)
