"""Subspace designs and the neighborhood design of a strongly regular q-ary graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from qsrg.algebra import FieldSpec, Subspace, iter_subspaces, projective_space
from qsrg.errors import InvalidInput, NotStronglyRegular, WrongParameterShape
from qsrg.qgraph import QaryGraph, neighborhood, srg_parameters


@dataclass(frozen=True)
class SubspaceDesign:
    """A claimed t-(v, k, lambda; q) design: blocks are k-subspaces of F_q^v."""

    field: FieldSpec
    v: int
    t: int
    lambda_: int
    blocks: tuple[Subspace, ...]

    def __post_init__(self):
        blocks = tuple(sorted(set(self.blocks)))
        if len({b.dim for b in blocks}) > 1:
            raise InvalidInput("design blocks must all have the same dimension")
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> Optional[int]:
        return self.blocks[0].dim if self.blocks else None

    def block_point_lists(self) -> list[list[int]]:
        space = projective_space(self.v, self.field)
        return sorted(space.point_list(b) for b in self.blocks)

    def to_json(self) -> dict:
        return {
            "v": self.v,
            "field": self.field.to_json(),
            "t": self.t,
            "lambda": self.lambda_,
            "blocks": self.block_point_lists(),
        }

    @classmethod
    def from_json(cls, d: dict) -> SubspaceDesign:
        F = FieldSpec.from_json(d["field"])
        v = int(d["v"])
        space = projective_space(v, F)
        blocks = []
        for pts in d["blocks"]:
            b = space.subspace_of(pts)
            if space.point_list(b) != sorted(pts):
                raise InvalidInput(f"block {pts} is not a subspace")
            blocks.append(b)
        return cls(F, v, int(d["t"]), int(d["lambda"]), tuple(blocks))


class DesignCounterexample(NamedTuple):
    subspace: Subspace
    count: int


def verify_design(d: SubspaceDesign) -> Optional[DesignCounterexample]:
    """Return None if every t-subspace lies in exactly lambda blocks.

    Otherwise return the first offending t-subspace (in enumeration order)
    together with the number of blocks containing it.
    """
    space = projective_space(d.v, d.field)
    masks = [space.mask(b) for b in d.blocks]
    for T in iter_subspaces(d.v, d.t, d.field):
        tm = space.mask(T)
        count = sum(1 for m in masks if m & tm == tm)
        if count != d.lambda_:
            return DesignCounterexample(T, count)
    return None


def neighborhood_design(g: QaryGraph) -> SubspaceDesign:
    """The set of closed neighborhoods of an SRG(v, k, mu-2, mu; q), claimed as a 2-(v, k+1, mu; q) design."""
    params = srg_parameters(g)
    if params is None:
        raise NotStronglyRegular("graph is not a strongly regular q-ary graph")
    if params.mu is None or params.lambda_ is None or params.lambda_ != params.mu - 2:
        raise WrongParameterShape(f"neighborhood designs need lambda = mu - 2, got {params}")
    blocks = {neighborhood(g, x) for x in range(g.num_vertices)}
    return SubspaceDesign(g.field, g.v, 2, params.mu, tuple(blocks))


def design_from_point_lists(F: FieldSpec, v: int, t: int, lambda_: int, blocks) -> SubspaceDesign:
    space = projective_space(v, F)
    return SubspaceDesign(F, v, t, lambda_, tuple(space.subspace_of(b) for b in blocks))

