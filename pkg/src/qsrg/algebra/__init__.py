"""Finite fields, canonical subspaces and q-counting."""

from qsrg.algebra.counting import bracket, gaussian
from qsrg.algebra.field import GF, FieldSpec, field_arith
from qsrg.algebra.points import (
    ProjectiveSpace,
    list_to_mask,
    mask_to_list,
    point_from_index,
    point_index,
    projective_space,
)
from qsrg.algebra.subspace import (
    annihilator,
    Subspace,
    enumerate_subspaces,
    full_space,
    intersect,
    iter_subspaces,
    rref_canonical,
    span,
    zero_space,
)

__all__ = [
    "GF",
    "FieldSpec",
    "ProjectiveSpace",
    "Subspace",
    "bracket",
    "enumerate_subspaces",
    "field_arith",
    "annihilator",
    "full_space",
    "gaussian",
    "intersect",
    "iter_subspaces",
    "list_to_mask",
    "mask_to_list",
    "point_from_index",
    "point_index",
    "projective_space",
    "rref_canonical",
    "span",
    "zero_space",
]
