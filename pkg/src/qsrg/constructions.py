"""Complete, spread-union and symplectic q-ary graphs."""

from __future__ import annotations

from dataclasses import dataclass

from qsrg.algebra import (
    FieldSpec,
    Subspace,
    enumerate_subspaces,
    iter_subspaces,
    mask_to_list,
    projective_space,
    rref_canonical,
)
from qsrg.algebra.extension import extension_modulus, projective_points_over_extension, times_x
from qsrg.errors import InvalidInput, NotDivisible, OddDimension
from qsrg.qgraph import QaryGraph


@dataclass(frozen=True)
class SpreadSpec:
    """A set of t-subspaces of F_q^v covering every point exactly once."""

    field: FieldSpec
    v: int
    t: int
    members: tuple[Subspace, ...]

    def member_masks(self) -> list[int]:
        space = projective_space(self.v, self.field)
        return [space.mask(m) for m in self.members]

    def is_partition(self) -> bool:
        space = projective_space(self.v, self.field)
        seen = 0
        for m in self.member_masks():
            if seen & m:
                return False
            seen |= m
        return seen == (1 << space.n) - 1


def complete(v: int, F: FieldSpec) -> QaryGraph:
    if v < 2:
        raise InvalidInput(f"the complete q-ary graph needs v >= 2, got {v}")
    return QaryGraph.from_subspaces(F, v, enumerate_subspaces(v, 2, F))


def desarguesian_spread(v: int, t: int, F: FieldSpec) -> SpreadSpec:
    """Field-reduction spread: the GF(q)-traces of the points of PG(v/t - 1, q^t).

    F_q^v is read as (F_{q^t})^(v/t), coordinate block j holding the
    coefficients of the j-th entry over F_q.
    """
    if t < 2:
        raise InvalidInput(f"spread members need dimension t >= 2, got {t}")
    if v % t:
        raise NotDivisible(f"t must divide v (t={t}, v={v})")
    modulus = extension_modulus(F, t)
    members = []
    for w in projective_points_over_extension(F, t, v // t):
        rows = []
        cur = w
        for _ in range(t):
            rows.append(tuple(c for entry in cur for c in entry))
            cur = tuple(times_x(entry, modulus, F) for entry in cur)
        members.append(rref_canonical(rows, v, F))
    members.sort()
    return SpreadSpec(F, v, t, tuple(members))


def spread_graph(s: SpreadSpec) -> QaryGraph:
    """All planes lying inside some member of the spread."""
    space = projective_space(s.v, s.field)
    edges = set()
    for m in s.member_masks():
        pts = mask_to_list(m)
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                edges.add(space.line(pts[a], pts[b]))
    return QaryGraph.from_masks(s.field, s.v, edges)


def standard_symplectic_matrix(v: int, F: FieldSpec) -> tuple[tuple[int, ...], ...]:
    """Block diagonal alternating matrix with v/2 blocks [[0, 1], [-1, 0]]."""
    if v % 2:
        raise OddDimension(f"symplectic forms need even dimension, got {v}")
    m = [[0] * v for _ in range(v)]
    for i in range(0, v, 2):
        m[i][i + 1] = 1
        m[i + 1][i] = F.neg(1)
    return tuple(tuple(r) for r in m)


def bilinear(M, x, y, F: FieldSpec) -> int:
    """x^T M y over F."""
    add, mul = F.add_table, F.mul_table
    acc = 0
    for xi, row in zip(x, M):
        if xi:
            s = 0
            for mij, yj in zip(row, y):
                s = add[s][mul[mij][yj]]
            acc = add[acc][mul[xi][s]]
    return acc


def isotropic_graph(M, v: int, F: FieldSpec) -> QaryGraph:
    """The q-ary graph whose edges are the planes totally isotropic for ``M``."""
    planes = [s for s in iter_subspaces(v, 2, F) if bilinear(M, s.basis[0], s.basis[1], F) == 0]
    return QaryGraph.from_subspaces(F, v, planes)


def symplectic_graph(v: int, F: FieldSpec) -> QaryGraph:
    if v % 2:
        raise OddDimension(f"symplectic graphs need even v, got {v}")
    if v < 4:
        raise InvalidInput(f"symplectic graphs need v >= 4, got {v}")
    return isotropic_graph(standard_symplectic_matrix(v, F), v, F)
