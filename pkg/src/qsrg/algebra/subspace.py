"""Canonical subspaces of F_q^v and the lattice operations on them.

A subspace is stored by its reduced row echelon basis, which makes equality
of subspaces plain equality of basis tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from qsrg.algebra.counting import gaussian
from qsrg.algebra.field import FieldSpec
from qsrg.errors import AmbientMismatch, BudgetExceeded, InvalidInput

Vector = tuple[int, ...]

ENUMERATION_BUDGET = 2**24


def rref(rows: Iterable[Sequence[int]], F: FieldSpec, v: int) -> tuple[Vector, ...]:
    """Gauss-Jordan reduce ``rows`` over ``F``; return the nonzero rows."""
    add, mul, neg, inv = F.add_table, F.mul_table, F.neg_table, F.inv_table
    m = []
    for r in rows:
        if len(r) != v:
            raise InvalidInput(f"row {tuple(r)} has length {len(r)}, expected {v}")
        m.append([F.check(int(x)) for x in r])
    rank = 0
    for col in range(v):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        row = m[rank]
        s = inv[row[col]]
        if s != 1:
            row = m[rank] = [mul[s][x] for x in row]
        for i in range(len(m)):
            c = m[i][col]
            if i != rank and c:
                nc = neg[c]
                m[i] = [add[x][mul[nc][y]] for x, y in zip(m[i], row)]
        rank += 1
        if rank == len(m):
            break
    return tuple(tuple(r) for r in m[:rank])


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^v held in reduced row echelon form."""

    field: FieldSpec
    v: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.basis)

    def sort_key(self):
        # Pivot columns first, then entries row-major; for points this puts
        # <(1,0,...,0)> first.
        return (self.pivots, tuple(x for r in self.basis for x in r))

    def __lt__(self, other: Subspace):
        return (self.dim, self.sort_key()) < (other.dim, other.sort_key())

    def contains_vector(self, x: Sequence[int]) -> bool:
        add, mul, neg = self.field.add_table, self.field.mul_table, self.field.neg_table
        x = list(x)
        for row, p in zip(self.basis, self.pivots):
            c = x[p]
            if c:
                nc = neg[c]
                x = [add[a][mul[nc][b]] for a, b in zip(x, row)]
        return not any(x)

    def contains(self, other: Subspace) -> bool:
        _check_same(self, other)
        return all(self.contains_vector(r) for r in other.basis)

    def vectors(self):
        """Yield every vector of the subspace (q^dim of them), zero first."""
        F = self.field
        add, mul = F.add_table, F.mul_table
        for coeffs in itertools.product(range(F.q), repeat=self.dim):
            vec = [0] * self.v
            for c, row in zip(coeffs, self.basis):
                if c:
                    vec = [add[a][mul[c][b]] for a, b in zip(vec, row)]
            yield tuple(vec)

    def to_json(self) -> dict:
        return {"v": self.v, "dim": self.dim, "basis": [list(r) for r in self.basis]}

    @classmethod
    def from_json(cls, d: dict, F: FieldSpec) -> Subspace:
        s = rref_canonical(d["basis"], int(d["v"]), F)
        if s.dim != int(d["dim"]) or list(map(list, s.basis)) != d["basis"]:
            raise InvalidInput("serialized basis is not canonical")
        return s


def _check_same(a: Subspace, b: Subspace):
    if a.v != b.v or a.field != b.field:
        raise AmbientMismatch(f"subspaces live in different ambient spaces ({a.v}, {a.field}) vs ({b.v}, {b.field})")


def rref_canonical(rows: Iterable[Sequence[int]], v: int, F: FieldSpec) -> Subspace:
    return Subspace(F, v, rref(rows, F, v))


def span(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    return rref_canonical(a.basis + b.basis, a.v, a.field)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection by the Zassenhaus stacking: reduce [[a, a], [b, 0]].

    Rows of the reduced block matrix whose left half vanishes span a ∩ b.
    """
    _check_same(a, b)
    v, F = a.v, a.field
    zero = (0,) * v
    stacked = [r + r for r in a.basis] + [r + zero for r in b.basis]
    reduced = rref(stacked, F, 2 * v)
    return rref_canonical([r[v:] for r in reduced if not any(r[:v])], v, F)


def zero_space(v: int, F: FieldSpec) -> Subspace:
    return Subspace(F, v, ())


def full_space(v: int, F: FieldSpec) -> Subspace:
    return Subspace(F, v, tuple(tuple(int(i == j) for j in range(v)) for i in range(v)))


def iter_subspaces(v: int, k: int, F: FieldSpec):
    """Yield all k-subspaces of F_q^v in canonical order without materializing them."""
    q = F.q
    for pivots in itertools.combinations(range(v), k):
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, v) if j not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            m = [[0] * v for _ in range(k)]
            for i, p in enumerate(pivots):
                m[i][p] = 1
            for (i, j), x in zip(free, values):
                m[i][j] = x
            yield Subspace(F, v, tuple(tuple(r) for r in m))


def enumerate_subspaces(v: int, k: int, F: FieldSpec, budget: int = ENUMERATION_BUDGET) -> list[Subspace]:
    if not 0 <= k <= v:
        raise InvalidInput(f"need 0 <= k <= v, got k={k}, v={v}")
    n = gaussian(v, k, F.q)
    if n > budget:
        raise BudgetExceeded(f"{n} subspaces of dimension {k} in F_{F.q}^{v} exceed budget {budget}")
    return list(iter_subspaces(v, k, F))


def annihilator(s: Subspace) -> Subspace:
    """The subspace of vectors f with f . x = 0 for every x in ``s``."""
    F, v = s.field, s.v
    pivots = s.pivots
    neg = F.neg_table
    rows = []
    for c in range(v):
        if c in pivots:
            continue
        f = [0] * v
        f[c] = 1
        for row, p in zip(s.basis, pivots):
            f[p] = neg[row[c]]
        rows.append(f)
    return rref_canonical(rows, v, F)
