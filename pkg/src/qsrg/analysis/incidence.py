"""Point-edge incidence graph of a q-ary graph: degrees, girth and diameter."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from qsrg.qgraph import QaryGraph


@dataclass(frozen=True)
class BipartiteIncidence:
    """Vertices 0..n_points-1 are points, the following n_lines vertices are edges."""

    n_points: int
    n_lines: int
    incidences: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, g: QaryGraph) -> BipartiteIncidence:
        inc = tuple((p, j) for j, e in enumerate(g.edges) for p in e)
        return cls(g.num_vertices, len(g.edges), inc)

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n_points + self.n_lines)]
        for p, j in self.incidences:
            adj[p].append(self.n_points + j)
            adj[self.n_points + j].append(p)
        return adj


@dataclass(frozen=True)
class IncidenceMetrics:
    point_degrees: frozenset
    line_degrees: frozenset
    girth: float  # math.inf when acyclic
    diameter: float  # math.inf when disconnected

    @property
    def biregular(self) -> bool:
        return len(self.point_degrees) <= 1 and len(self.line_degrees) <= 1

    def regular_of_degree(self, d: int) -> bool:
        return self.point_degrees <= {d} and self.line_degrees <= {d}


def _bfs(adj, root):
    dist = [-1] * len(adj)
    parent = [-1] * len(adj)
    dist[root] = 0
    queue = deque([root])
    shortest_cycle = math.inf
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
            elif w != parent[u]:
                shortest_cycle = min(shortest_cycle, dist[u] + dist[w] + 1)
    return dist, shortest_cycle


def girth_and_diameter(adj) -> tuple[float, float]:
    """Girth and diameter by a breadth-first search from every vertex."""
    girth, diameter = math.inf, 0
    for root in range(len(adj)):
        dist, cyc = _bfs(adj, root)
        girth = min(girth, cyc)
        if min(dist) < 0:
            diameter = math.inf
        elif diameter != math.inf:
            diameter = max(diameter, max(dist))
    return girth, diameter


def incidence_metrics(g: QaryGraph) -> IncidenceMetrics:
    inc = BipartiteIncidence.of(g)
    adj = inc.adjacency()
    girth, diameter = girth_and_diameter(adj)
    # bipartite graphs only have even cycles
    assert girth == math.inf or girth % 2 == 0
    return IncidenceMetrics(
        point_degrees=frozenset(len(adj[p]) for p in range(inc.n_points)),
        line_degrees=frozenset(len(adj[inc.n_points + j]) for j in range(inc.n_lines)),
        girth=girth,
        diameter=diameter,
    )
