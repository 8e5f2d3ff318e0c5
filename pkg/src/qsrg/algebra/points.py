"""Point labels for the projective space of F_q^v.

Points (1-subspaces) are numbered in the canonical subspace order: by pivot
position, then lexicographically by the normalized vector.  Point sets are
handled as Python int bitmasks over these labels.
"""

from __future__ import annotations

from functools import lru_cache

from qsrg.algebra.counting import bracket
from qsrg.algebra.field import FieldSpec
from qsrg.algebra.subspace import Subspace, Vector, iter_subspaces, rref_canonical
from qsrg.errors import InvalidIndex, InvalidInput, NotAPoint


class ProjectiveSpace:
    """Point labelling and point-set helpers for PG(v-1, q).

    Obtain instances through :func:`projective_space` so tables are shared.
    """

    def __init__(self, v: int, F: FieldSpec):
        if v < 1:
            raise InvalidInput(f"ambient dimension must be >= 1, got {v}")
        self.v = v
        self.field = F
        self.q = F.q
        self.points: list[Vector] = [s.basis[0] for s in iter_subspaces(v, 1, F)]
        self.index: dict[Vector, int] = {x: i for i, x in enumerate(self.points)}
        self.n = len(self.points)
        assert self.n == bracket(v, F.q)
        self._line_cache: dict[tuple[int, int], int] = {}

    def __repr__(self):
        return f"ProjectiveSpace(v={self.v}, q={self.q})"

    def normalize(self, x) -> Vector:
        lead = next((c for c in x if c), 0)
        if not lead:
            raise NotAPoint("the zero vector is not a point")
        s = self.field.inv_table[lead]
        mul = self.field.mul_table[s]
        return tuple(mul[c] for c in x)

    def vector_index(self, x) -> int:
        return self.index[self.normalize(x)]

    def point_index(self, s: Subspace) -> int:
        if s.dim != 1:
            raise NotAPoint(f"subspace of dimension {s.dim} is not a point")
        if s.v != self.v or s.field != self.field:
            raise NotAPoint("point lives in a different ambient space")
        return self.index[s.basis[0]]

    def point_from_index(self, i: int) -> Subspace:
        if not 0 <= i < self.n:
            raise InvalidIndex(f"point index {i} out of range [0, {self.n})")
        return Subspace(self.field, self.v, (self.points[i],))

    def mask(self, s: Subspace) -> int:
        """Bitmask of the points contained in ``s``."""
        if s.dim == 0:
            return 0
        m = 0
        for x in s.vectors():
            if any(x):
                m |= 1 << self.vector_index(x)
        return m

    def point_list(self, s: Subspace) -> list[int]:
        return mask_to_list(self.mask(s))

    def subspace_of(self, idx) -> Subspace:
        """The span of the given points (indices or a bitmask)."""
        if isinstance(idx, int):
            idx = mask_to_list(idx)
        return rref_canonical([self.points[i] for i in idx], self.v, self.field)

    def line(self, i: int, j: int) -> int:
        """Bitmask of the q+1 points on the line through distinct points i, j."""
        if i > j:
            i, j = j, i
        key = (i, j)
        m = self._line_cache.get(key)
        if m is None:
            if i == j:
                raise InvalidInput("a line needs two distinct points")
            x, y = self.points[i], self.points[j]
            add, mul = self.field.add_table, self.field.mul_table
            m = 1 << i
            for c in range(self.q):
                m |= 1 << self.vector_index(tuple(add[b][mul[c][a]] for a, b in zip(x, y)))
            self._line_cache[key] = m
        return m

    def is_subspace_mask(self, m: int) -> bool:
        """True iff the point set ``m`` is exactly the point set of a subspace."""
        if m == 0:
            return True
        return self.mask(self.subspace_of(m)) == m


@lru_cache(maxsize=None)
def projective_space(v: int, F: FieldSpec) -> ProjectiveSpace:
    return ProjectiveSpace(v, F)


def mask_to_list(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def list_to_mask(idx) -> int:
    m = 0
    for i in idx:
        m |= 1 << i
    return m


def point_index(s: Subspace) -> int:
    return projective_space(s.v, s.field).point_index(s)


def point_from_index(i: int, v: int, F: FieldSpec) -> Subspace:
    return projective_space(v, F).point_from_index(i)
