"""Exact straightening for skew Schur modules.

Fillings of a skew diagram are expanded either in the semistandard tableau
basis, by classical Garnir rewriting, or in the D-basis, where every
coefficient is a rearrangement coefficient computed directly.
"""
from .determinantal import d_poly, garnir_block_matrix, garnir_signed_sum, tableau_monomial
from .estimator import SkewStraightener
from .expansion import D, SSYT, Expansion
from .garnir import GarnirData, garnir_action, iterative_straighten, shuffles
from .polyring import SparsePoly, determinant
from .rearrange import ColumnPermutation, apply_column_permutation, rearrangement_coefficient
from .shapes import Filling, SkewShape, TableauOrderedSet, colsort, enumerate_ssyt, is_ssyt, sort_filling
from .straighten import (
    DBasis,
    build_dbasis,
    convert,
    gram_matrix,
    inner,
    straighten,
    straighten_noniterative,
    support_bound,
    verify_gram_schmidt,
)

__all__ = [
    "D",
    "SSYT",
    "ColumnPermutation",
    "DBasis",
    "Expansion",
    "Filling",
    "GarnirData",
    "SkewShape",
    "SkewStraightener",
    "SparsePoly",
    "TableauOrderedSet",
    "apply_column_permutation",
    "build_dbasis",
    "colsort",
    "convert",
    "d_poly",
    "determinant",
    "enumerate_ssyt",
    "garnir_action",
    "garnir_block_matrix",
    "garnir_signed_sum",
    "gram_matrix",
    "inner",
    "is_ssyt",
    "iterative_straighten",
    "rearrangement_coefficient",
    "shuffles",
    "sort_filling",
    "straighten",
    "straighten_noniterative",
    "support_bound",
    "tableau_monomial",
    "verify_gram_schmidt",
]
