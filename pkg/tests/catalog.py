"""Constructed graphs shared across test modules, built once per session."""

from functools import lru_cache

from qsrg.algebra import GF, bracket
from qsrg.constructions import complete, desarguesian_spread, spread_graph, symplectic_graph


@lru_cache(maxsize=None)
def symplectic(v, q):
    return symplectic_graph(v, GF(q))


@lru_cache(maxsize=None)
def spread(v, t, q):
    return spread_graph(desarguesian_spread(v, t, GF(q)))


@lru_cache(maxsize=None)
def comp(v, q):
    return complete(v, GF(q))


# (name, builder args, expected (v, k, lambda, mu))
EXPECTED = [
    ("symplectic-4-2", lambda: symplectic(4, 2), (4, 2, 1, 3)),
    ("symplectic-4-3", lambda: symplectic(4, 3), (4, 2, 2, 4)),
    ("symplectic-6-2", lambda: symplectic(6, 2), (6, 4, 13, 15)),
    ("symplectic-4-4", lambda: symplectic(4, 4), (4, 2, 3, 5)),
    ("spread-4-2-2", lambda: spread(4, 2, 2), (4, 1, 1, 0)),
    ("spread-6-2-2", lambda: spread(6, 2, 2), (6, 1, 1, 0)),
    ("spread-6-3-2", lambda: spread(6, 3, 2), (6, 2, 5, 0)),
    ("spread-4-2-3", lambda: spread(4, 2, 3), (4, 1, 2, 0)),
    ("spread-4-2-4", lambda: spread(4, 2, 4), (4, 1, 3, 0)),
    ("spread-4-4-2", lambda: spread(4, 4, 2), (4, 3, bracket(4, 2) - 2, None)),
    ("complete-3-2", lambda: comp(3, 2), (3, 2, 5, None)),
    ("complete-4-2", lambda: comp(4, 2), (4, 3, 13, None)),
    ("complete-3-3", lambda: comp(3, 3), (3, 2, 11, None)),
]

IDS = [name for name, _, _ in EXPECTED]
