"""Recover the alternating form behind a q-ary graph whose neighborhoods are hyperplanes.

Each vertex <x> has a hyperplane neighborhood, the kernel of a functional f_x
determined up to a nonzero scalar.  We look for a matrix M with
x^T M proportional to f_x for every point.  Rows of M are scaled copies of
f_{e_i}; the scale of row 0 is fixed to 1 and the others are read off from
the points <e_0 + e_i>.  Every remaining point then either agrees with the
resulting M or certifies that no bilinear form induces the neighborhoods.
"""

from __future__ import annotations

from qsrg.algebra import annihilator, bracket, projective_space, rref_canonical
from qsrg.constructions import bilinear
from qsrg.errors import NotPolarity, NotSymplectic
from qsrg.qgraph import QaryGraph

Matrix = tuple[tuple[int, ...], ...]


def _functionals(g: QaryGraph) -> list[tuple[int, ...]]:
    space = g.space
    hyperplane_size = bracket(g.v - 1, g.q)
    out = []
    for x, m in enumerate(g.closed_neighborhoods):
        if m.bit_count() != hyperplane_size or not space.is_subspace_mask(m):
            raise NotPolarity(f"neighborhood of vertex {x} is not a hyperplane")
        out.append(annihilator(space.subspace_of(m)).basis[0])
    return out


def _proportional(a, b, F) -> bool:
    return rref_canonical([a, b], len(a), F).dim == 1


def _row_times(c: int, row, F):
    mul = F.mul_table[c]
    return tuple(mul[x] for x in row)


def _row_add(a, b, F):
    add = F.add_table
    return tuple(add[x][y] for x, y in zip(a, b))


def recover_alternating_form(g: QaryGraph) -> Matrix:
    """Return an invertible alternating M with N(<x>) = {y : x^T M y = 0}.

    Raises NotPolarity when some neighborhood is not a hyperplane and
    NotSymplectic when no invertible alternating form fits.
    """
    F, v = g.field, g.v
    space = projective_space(v, F)
    funcs = _functionals(g)
    basis_pts = [space.index[tuple(int(i == j) for j in range(v))] for i in range(v)]
    f = [funcs[p] for p in basis_pts]

    rows = [f[0]]
    for i in range(1, v):
        target = funcs[space.vector_index(tuple(int(j in (0, i)) for j in range(v)))]
        scale = next(
            (c for c in range(1, F.q) if _proportional(_row_add(f[0], _row_times(c, f[i], F), F), target, F)),
            None,
        )
        if scale is None:
            raise NotSymplectic(f"no consistent scaling of the functional at basis vector {i}")
        rows.append(_row_times(scale, f[i], F))
    M = tuple(rows)

    add, mul = F.add_table, F.mul_table
    for x, fx in zip(space.points, funcs):
        img = [0] * v
        for xi, row in zip(x, M):
            if xi:
                img = [add[a][mul[xi][b]] for a, b in zip(img, row)]
        if not any(img) or not _proportional(img, fx, F):
            raise NotSymplectic(f"neighborhood of {x} is not induced by a bilinear form")

    if rref_canonical(M, v, F).dim != v:
        raise NotSymplectic("recovered form is degenerate")
    if not is_alternating(M, F):
        raise NotSymplectic("recovered form is not alternating")
    return M


def is_alternating(M, F) -> bool:
    v = len(M)
    return all(M[i][i] == 0 for i in range(v)) and all(
        M[i][j] == F.neg(M[j][i]) for i in range(v) for j in range(i + 1, v)
    )


def transform_graph(g: QaryGraph, A) -> QaryGraph:
    """Image of ``g`` under the coordinate change x -> x A (A invertible, rows are images of e_i)."""
    F, v = g.field, g.v
    space = g.space
    add, mul = F.add_table, F.mul_table

    def image(x):
        out = [0] * v
        for xi, row in zip(x, A):
            if xi:
                out = [add[a][mul[xi][b]] for a, b in zip(out, row)]
        return space.vector_index(out)

    perm = [image(x) for x in space.points]
    return QaryGraph(F, v, tuple(tuple(perm[i] for i in e) for e in g.edges))


def congruent_up_to_scalar(M1, M2, A, F) -> bool:
    """True iff A M2 A^T = c M1 for some nonzero scalar c.

    With row-vector images x -> x A, the form x^T M2 y pulled back along A is
    (xA) M2 (yA)^T = x (A M2 A^T) y^T.
    """
    v = len(M1)
    pulled = tuple(
        tuple(bilinear(M2, A[i], A[j], F) for j in range(v)) for i in range(v)
    )
    return any(
        all(pulled[i][j] == F.mul(c, M1[i][j]) for i in range(v) for j in range(v)) for c in range(1, F.q)
    )
