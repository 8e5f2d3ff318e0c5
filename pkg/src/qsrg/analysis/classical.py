"""Classical simple graphs and the collapse of a q-ary graph onto its points."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from qsrg.algebra import mask_to_list
from qsrg.analysis.identity import parameter_identity
from qsrg.errors import InvalidInput
from qsrg.qgraph import QaryGraph


@dataclass(frozen=True)
class ClassicalGraph:
    """A simple graph on ``range(n)``; row i of ``adjacency`` is a bitmask of i's neighbors."""

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise InvalidInput("adjacency must have one row per vertex")
        for i, row in enumerate(self.adjacency):
            if row >> i & 1:
                raise InvalidInput(f"vertex {i} is adjacent to itself")
            for j in mask_to_list(row):
                if j >= self.n or not self.adjacency[j] >> i & 1:
                    raise InvalidInput(f"adjacency is not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges) -> ClassicalGraph:
        rows = [0] * n
        for i, j in edges:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adjacency) for j in mask_to_list(row) if i < j]

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, d: dict) -> ClassicalGraph:
        return cls.from_edges(int(d["n"]), [tuple(e) for e in d["edges"]])


class ClassicalSrgParams(NamedTuple):
    n: int
    k: int
    lambda_: Optional[int]
    mu: Optional[int]


def collapse(g: QaryGraph) -> ClassicalGraph:
    """Points become vertices; i ~ j iff the plane <i, j> is an edge of ``g``."""
    rows = tuple(m & ~(1 << i) for i, m in enumerate(g.closed_neighborhoods))
    return ClassicalGraph(g.num_vertices, rows)


def verify_classical_srg(c: ClassicalGraph) -> Optional[ClassicalSrgParams]:
    """Return (n, k, lambda, mu) by direct common-neighbor counting, or None."""
    degrees = {row.bit_count() for row in c.adjacency}
    if len(degrees) > 1:
        return None
    k = degrees.pop() if degrees else 0
    lam = mu = None
    adj = c.adjacency
    for i in range(c.n):
        for j in range(i + 1, c.n):
            common = (adj[i] & adj[j]).bit_count()
            if adj[i] >> j & 1:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is not None and mu is not None:
        # k(k - 1 - lambda) = (n - k - 1) mu must hold for any SRG
        assert parameter_identity(c.n, k, lam, mu, 1).holds
    return ClassicalSrgParams(c.n, k, lam, mu)


def connected_components(c: ClassicalGraph) -> list[list[int]]:
    seen = 0
    comps = []
    for start in range(c.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for i in mask_to_list(frontier):
                nxt |= c.adjacency[i]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(mask_to_list(comp))
    return comps
