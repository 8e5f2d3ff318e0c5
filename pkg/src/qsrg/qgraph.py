"""q-ary graphs: vertices are the points of F_q^v, edges are chosen planes.

An edge is stored as the sorted list of the q+1 point labels it contains.
Neighborhoods are computed as point bitmasks (see ``qsrg.algebra.points``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from qsrg.algebra import FieldSpec, Subspace, bracket, mask_to_list, projective_space
from qsrg.errors import DuplicateEdge, InvalidEdge, InvalidInput


@dataclass(frozen=True)
class SrgParams:
    """Parameters (v, k, lambda, mu; q); ``None`` marks an undefined value.

    lambda is undefined when no two vertices are adjacent, mu when every two
    vertices are adjacent.
    """

    v: int
    k: int
    lambda_: Optional[int]
    mu: Optional[int]
    q: int

    def as_tuple(self):
        return (self.v, self.k, self.lambda_, self.mu)

    def matches(self, lambda_: int, mu: int) -> bool:
        """Compare with target values; an undefined value holds vacuously."""
        return (self.lambda_ is None or self.lambda_ == lambda_) and (self.mu is None or self.mu == mu)

    def __str__(self):
        fmt = lambda x: "undefined" if x is None else str(x)  # noqa: E731
        return f"SRG({self.v},{self.k},{fmt(self.lambda_)},{fmt(self.mu)};{self.q})"

    def to_json(self) -> dict:
        return {"v": self.v, "k": self.k, "lambda": self.lambda_, "mu": self.mu, "q": self.q}


@dataclass(frozen=True)
class QaryGraph:
    field: FieldSpec
    v: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(int(i) for i in e)) for e in self.edges))
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_masks(cls, F: FieldSpec, v: int, masks: Iterable[int]) -> QaryGraph:
        return cls(F, v, tuple(tuple(mask_to_list(m)) for m in masks))

    @classmethod
    def from_subspaces(cls, F: FieldSpec, v: int, planes: Iterable[Subspace]) -> QaryGraph:
        space = projective_space(v, F)
        return cls(F, v, tuple(tuple(space.point_list(s)) for s in planes))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def space(self):
        return projective_space(self.v, self.field)

    @property
    def num_vertices(self) -> int:
        return bracket(self.v, self.q)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        out = []
        for e in self.edges:
            m = 0
            for i in e:
                m |= 1 << i
            out.append(m)
        return tuple(out)

    @cached_property
    def closed_neighborhoods(self) -> tuple[int, ...]:
        """Point-set union of {x} and every edge through x, as bitmasks."""
        nb = [1 << i for i in range(self.num_vertices)]
        for e, m in zip(self.edges, self.edge_masks):
            for i in e:
                nb[i] |= m
        return tuple(nb)

    def adjacent(self, x: int, y: int) -> bool:
        return x != y and bool(self.closed_neighborhoods[x] >> y & 1)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "v": self.v, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, d: dict) -> QaryGraph:
        try:
            F = FieldSpec.from_json(d["field"])
            v = int(d["v"])
            edges = [[int(i) for i in e] for e in d["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed graph description: {exc}") from exc
        return cls(F, v, tuple(tuple(e) for e in edges))


def validate_graph(g: QaryGraph) -> None:
    """Raise InvalidEdge or DuplicateEdge unless every edge is a distinct plane."""
    space = g.space
    seen = set()
    for e in g.edges:
        if len(e) != g.q + 1 or len(set(e)) != len(e) or any(not 0 <= i < space.n for i in e):
            raise InvalidEdge(f"edge {list(e)} does not list q+1 = {g.q + 1} distinct points")
        if space.line(e[0], e[1]) != sum(1 << i for i in e):
            raise InvalidEdge(f"edge {list(e)} is not a 2-subspace")
        if e in seen:
            raise DuplicateEdge(f"edge {list(e)} occurs twice")
        seen.add(e)


def neighborhood(g: QaryGraph, x: int) -> Subspace:
    """The span of x and all edges through x (x itself when isolated)."""
    space = g.space
    space.point_from_index(x)
    return space.subspace_of(g.closed_neighborhoods[x])


def is_regular(g: QaryGraph) -> Optional[int]:
    """Return k if every closed neighborhood is exactly a (k+1)-subspace, else None."""
    space = g.space
    sizes = {m.bit_count() for m in g.closed_neighborhoods}
    if len(sizes) != 1:
        return None
    (size,) = sizes
    dim = next((d for d in range(1, g.v + 1) if bracket(d, g.q) == size), None)
    if dim is None:
        return None
    for m in g.closed_neighborhoods:
        if not space.is_subspace_mask(m):
            return None
    return dim - 1


def srg_parameters(g: QaryGraph) -> Optional[SrgParams]:
    """Return the SRG parameters of ``g``, or None if it is not strongly regular."""
    k = is_regular(g)
    if k is None:
        return None
    nb = g.closed_neighborhoods
    lam = mu = None
    for x in range(len(nb)):
        nx = nb[x]
        for y in range(x + 1, len(nb)):
            common = (nx & nb[y]).bit_count()
            if nx >> y & 1:
                c = common - 2
                if lam is None:
                    lam = c
                elif c != lam:
                    return None
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    return None
    return SrgParams(g.v, k, lam, mu, g.q)
