import sys
from pathlib import Path

import pytest

from qsrg.algebra import GF, bracket, gaussian, projective_space
from qsrg.constructions import (
    bilinear,
    complete,
    desarguesian_spread,
    isotropic_graph,
    spread_graph,
    standard_symplectic_matrix,
    symplectic_graph,
)
from qsrg.errors import InvalidInput, NotDivisible, OddDimension
from qsrg.qgraph import srg_parameters

sys.path.insert(0, str(Path(__file__).parent))
import oracles  # noqa: E402
from catalog import comp, spread, symplectic  # noqa: E402


def test_complete_edge_counts():
    assert len(complete(2, GF(2)).edges) == 1
    assert len(complete(4, GF(2)).edges) == gaussian(4, 2, 2) == 35
    assert len(complete(3, GF(3)).edges) == 13
    with pytest.raises(InvalidInput):
        complete(1, GF(2))


@pytest.mark.parametrize("v,q", [(3, 2), (4, 2), (3, 3), (3, 4)])
def test_complete_parameters(v, q):
    assert srg_parameters(comp(v, q)).as_tuple() == (v, v - 1, bracket(v, q) - 2, None)


def test_spread_member_counts():
    F2 = GF(2)
    assert len(desarguesian_spread(4, 2, F2).members) == 5
    assert len(desarguesian_spread(4, 4, F2).members) == 1
    assert len(desarguesian_spread(6, 2, F2).members) == 21


@pytest.mark.parametrize("v,t,q", [(4, 2, 2), (6, 2, 2), (6, 3, 2), (4, 2, 3), (4, 2, 4), (6, 2, 3), (8, 4, 2), (4, 2, 5), (4, 2, 9)])
def test_spread_partition(v, t, q):
    s = desarguesian_spread(v, t, GF(q))
    assert s.is_partition()
    masks = s.member_masks()
    assert len(masks) == (q**v - 1) // (q**t - 1)
    assert sum(m.bit_count() for m in masks) == bracket(v, q)
    assert all(m.dim == t for m in s.members)


def test_spread_partition_brute_force():
    # cover check with plain vector sets, independent of the bitmask code
    s = desarguesian_spread(6, 2, GF(2))
    seen = set()
    for m in s.members:
        pts = {tuple(x) for x in m.vectors() if any(x)}
        assert len(pts) == 3
        assert not (pts & seen)
        seen |= pts
    assert seen == set(oracles.points(6, 2))


def test_spread_is_one_of_the_56():
    spreads = oracles.count_line_spreads(4, 2)
    mine = frozenset(frozenset(tuple(x) for x in m.vectors() if any(x)) for m in desarguesian_spread(4, 2, GF(2)).members)
    assert mine in set(spreads)


@pytest.mark.parametrize("v,t,q", [(4, 2, 2), (6, 3, 2), (6, 2, 2), (4, 2, 3)])
def test_spread_graph_parameters(v, t, q):
    assert srg_parameters(spread(v, t, q)).as_tuple() == (v, t - 1, bracket(t, q) - 2, 0)


def test_spread_graph_examples():
    g = spread(4, 2, 2)
    assert len(g.edges) == 5
    assert spread(4, 4, 2) == comp(4, 2)


def test_spread_errors():
    with pytest.raises(NotDivisible):
        desarguesian_spread(5, 2, GF(2))
    with pytest.raises(InvalidInput):
        desarguesian_spread(4, 1, GF(2))


@pytest.mark.parametrize("v,q", [(4, 2), (4, 3), (6, 2), (4, 4), (4, 5)])
def test_symplectic_parameters(v, q):
    g = symplectic(v, q)
    mu = bracket(v - 2, q)
    assert srg_parameters(g).as_tuple() == (v, v - 2, mu - 2, mu)
    F = g.field
    M = standard_symplectic_matrix(v, F)
    space = projective_space(v, F)
    # every vertex is isotropic and lies on [v-2]_q edges
    for i in range(space.n):
        x = space.points[i]
        assert bilinear(M, x, x, F) == 0
        assert sum(1 for e in g.edges if i in e) == bracket(v - 2, q)


def test_symplectic_matches_brute_force():
    for M in oracles.alternating_invertible_matrices(4, 2)[:5]:
        g = isotropic_graph(M, 4, GF(2))
        space = projective_space(4, GF(2))
        ours = {frozenset(tuple(space.points[i]) for i in e) for e in g.edges}
        assert ours == set(oracles.isotropic_lines(M, 4, 2))


def test_symplectic_errors():
    with pytest.raises(OddDimension):
        symplectic_graph(5, GF(2))
    with pytest.raises(InvalidInput):
        symplectic_graph(2, GF(2))
