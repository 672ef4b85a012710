"""A scikit-learn style transformer from fillings to exact coefficient vectors.

``fit`` learns the (shape, content) contexts present in the training
fillings; ``transform`` straightens each filling and writes its coefficients
into the block of columns owned by its context. Blocks of different contexts
never overlap, which realises the convention that distinct contents do not
interact. Entries are Python ints in an object array, so no precision is lost.
"""
from __future__ import annotations

from typing import Any, Iterable

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .expansion import BASIS_KINDS, Expansion
from .jsonio import InvalidInputError, filling_from_json
from .rearrange import ENGINES
from .shapes import Filling, TableauOrderedSet, context_of
from .straighten import straighten

METHODS = ("noniterative", "iterative")


def as_fillings(X: Any) -> list[Filling]:
    """Coerce a filling, a JSON filling document, or an iterable of either into a list."""
    if isinstance(X, (Filling, dict)):
        X = [X]
    if isinstance(X, np.ndarray):
        X = X.ravel().tolist()
    if not isinstance(X, Iterable) or isinstance(X, (str, bytes)):
        raise InvalidInputError("expected a filling or a sequence of fillings")
    out = []
    for x in X:
        if isinstance(x, Filling):
            out.append(x)
        elif isinstance(x, dict):
            out.append(filling_from_json(x))
        else:
            raise InvalidInputError(f"cannot interpret {type(x).__name__} as a filling")
    if not out:
        raise InvalidInputError("no fillings given")
    return out


def _context_key(ctx: TableauOrderedSet) -> tuple:
    return ctx.shape.lam, ctx.shape.mu, ctx.content


class SkewStraightener(TransformerMixin, BaseEstimator):
    """Straighten fillings into the SSYT basis or the D-basis.

    Parameters
    ----------
    method : {"noniterative", "iterative"}
        ``"noniterative"`` reads the D-coefficients off as rearrangement
        coefficients; ``"iterative"`` applies Garnir relations until only
        semistandard terms remain.
    basis : {"d", "ssyt"}
        Basis of the output coordinates.
    engine : {"backtrack", "polynomial"}
        How rearrangement coefficients are computed (non-iterative only).
    """

    def __init__(self, method: str = "noniterative", basis: str = "d", engine: str = "backtrack"):
        self.method = method
        self.basis = basis
        self.engine = engine

    def _check_params(self) -> None:
        for name, allowed in (("method", METHODS), ("basis", BASIS_KINDS), ("engine", ENGINES)):
            if getattr(self, name) not in allowed:
                raise ValueError(f"{name} must be one of {allowed}, got {getattr(self, name)!r}")

    def fit(self, X, y=None):
        self._check_params()
        fillings = as_fillings(X)
        contexts = {_context_key(c): c for c in map(context_of, fillings)}
        self.contexts_ = [contexts[k] for k in sorted(contexts)]
        self.offsets_ = {}
        start = 0
        for ctx in self.contexts_:
            self.offsets_[_context_key(ctx)] = start
            start += len(ctx)
        self.n_features_out_ = start
        return self

    def expansions(self, X) -> list[Expansion]:
        """Straighten without laying out columns; does not require fitting."""
        self._check_params()
        return [straighten(f, self.method, self.basis, self.engine) for f in as_fillings(X)]

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "contexts_")
        fillings = as_fillings(X)
        out = np.zeros((len(fillings), self.n_features_out_), dtype=object)
        for row, f in enumerate(fillings):
            key = _context_key(context_of(f))
            if key not in self.offsets_:
                raise ValueError(f"filling of shape {f.shape} and content {key[2]} was not seen in fit")
            off = self.offsets_[key]
            for i, a in straighten(f, self.method, self.basis, self.engine).coeffs.items():
                out[row, off + i] = a
        return out

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        check_is_fitted(self, "contexts_")
        prefix = "D" if self.basis == "d" else "S"
        names = []
        for ctx in self.contexts_:
            z = ",".join(map(str, ctx.content))
            names.extend(f"{ctx.shape}|{z}|{prefix}{i}" for i in range(1, len(ctx) + 1))
        return np.asarray(names, dtype=object)
