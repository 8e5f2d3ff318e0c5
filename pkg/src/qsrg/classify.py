"""Exhaustive search for regular and strongly regular q-ary graphs.

A k-regular q-ary graph is the same thing as a map X -> N(X) sending every
point to a (k+1)-subspace through it, subject to Y in N(X) iff X in N(Y).
The search assigns N(X) vertex by vertex in point order.  Every undecided
vertex keeps a domain of still-admissible (k+1)-subspaces, stored as one
boolean row over the list of all (k+1)-subspaces; an assignment filters all
rows at once (forward checking) and an empty row prunes the branch.

With SRG targets the filter also enforces |N(X) ∩ N(Y)| = lambda + 2 for
adjacent and = mu for non-adjacent pairs, which covers the mu = 1 rule that
two non-adjacent vertices may not share two common neighbors.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from qsrg.algebra import GF, FieldSpec, bracket, gaussian, iter_subspaces, mask_to_list, projective_space
from qsrg.analysis import parameter_identity, projective_count_decompose, recover_alternating_form
from qsrg.errors import BudgetExceeded, NotPolarity, NotSymplectic
from qsrg.qgraph import QaryGraph, is_regular, srg_parameters, validate_graph

LOG = logging.getLogger(__name__)

SPREAD_UNION = "spread_union"
SYMPLECTIC = "symplectic"
OTHER = "other"


@dataclass
class SearchConfig:
    v: int
    k: int
    q: int
    lambda_: Optional[int] = None
    mu: Optional[int] = None
    symmetry_fixing: bool = False
    node_budget: int = 10**7
    workers: int = 1
    split_depth: int = 2

    def __post_init__(self):
        if self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if (self.lambda_ is None) != (self.mu is None):
            raise ValueError("give both lambda and mu, or neither")
        if not 0 <= self.k < self.v:
            raise ValueError(f"need 0 <= k < v, got k={self.k}, v={self.v}")

    @property
    def field(self) -> FieldSpec:
        return GF(self.q)

    @property
    def has_targets(self) -> bool:
        return self.lambda_ is not None


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    subtrees: int = 0
    wall_time: float = 0.0
    complete: bool = True
    prefilter: Optional[str] = None
    orbit_factor: int = 1

    def to_json(self) -> dict:
        return {"nodes": self.nodes, "prunes": self.prunes, "complete": self.complete}


@dataclass
class SearchOutcome:
    graphs: list[QaryGraph]
    stats: SearchStats
    count: int = 0


def prefilter(cfg: SearchConfig) -> Optional[str]:
    """Reason why no graph can exist for ``cfg`` by parameter arithmetic, else None."""
    q, v, k = cfg.q, cfg.v, cfg.k
    # edges through a point = planes through it in a (k+1)-space
    if (bracket(v, q) * bracket(k, q)) % (q + 1):
        return "edge count [v]_q [k]_q / (q+1) is not an integer"
    if cfg.has_targets:
        if not parameter_identity(v, k, cfg.lambda_, cfg.mu, q).holds:
            return "parameter identity fails"
        if projective_count_decompose(cfg.lambda_, cfg.mu, q) is None:
            return "lambda + 2 or mu is not a q-integer"
    return None


class NeighborhoodSearch:
    """Tables and the depth-first search for one SearchConfig."""

    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        F = cfg.field
        self.space = projective_space(cfg.v, F)
        n = self.n = self.space.n
        self.cand_masks = [self.space.mask(s) for s in iter_subspaces(cfg.v, cfg.k + 1, F)]
        S = len(self.cand_masks)
        self.contains = np.zeros((S, n), dtype=bool)
        for c, m in enumerate(self.cand_masks):
            self.contains[c, mask_to_list(m)] = True
        self.contains_t = np.ascontiguousarray(self.contains.T)
        self.initial = self.contains_t.copy()
        if cfg.has_targets:
            inter = np.array(
                [[(a & b).bit_count() for b in self.cand_masks] for a in self.cand_masks], dtype=np.int32
            )
            self.ok_adjacent = inter == cfg.lambda_ + 2
            self.ok_nonadjacent = inter == cfg.mu
        else:
            self.ok_adjacent = self.ok_nonadjacent = None
        if cfg.symmetry_fixing:
            first = int(np.flatnonzero(self.initial[0])[0])
            self.initial[0] = False
            self.initial[0, first] = True

    @property
    def orbit_factor(self) -> int:
        """Labeled graphs per graph found when N(point 0) is pinned."""
        if not self.cfg.symmetry_fixing:
            return 1
        v, k, q = self.cfg.v, self.cfg.k, self.cfg.q
        through_point = gaussian(v - 1, k, q)
        # GL(v, q) is transitive on (point, (k+1)-space through it) flags;
        # the two counts of flags must agree.
        assert bracket(v, q) * through_point == gaussian(v, k + 1, q) * bracket(k + 1, q)
        assert int(self.contains_t[0].sum()) == through_point
        return through_point

    def _assign(self, dom: np.ndarray, x: int, c: int) -> np.ndarray:
        """Domains after N(x) := candidate c."""
        in_nb = self.contains[c][:, None]
        # y in N(x)  <=>  x in N(y)
        keep = self.contains_t[x][None, :] == in_nb
        if self.ok_adjacent is not None:
            keep &= np.where(in_nb, self.ok_adjacent[c][None, :], self.ok_nonadjacent[c][None, :])
        new = dom & keep
        new[x] = False
        new[x, c] = True
        return new

    def _search(self, dom, assignment, emit, stats, budget, stop_depth):
        depth = len(assignment)
        if depth == stop_depth:
            emit(tuple(assignment), dom)
            return
        x = depth
        for c in np.flatnonzero(dom[x]):
            c = int(c)
            stats.nodes += 1
            if stats.nodes > budget:
                stats.complete = False
                raise BudgetExceeded(f"node budget {budget} exhausted", stats=stats.to_json())
            new = self._assign(dom, x, c)
            if not new[x + 1 :].any(axis=1).all():
                stats.prunes += 1
                continue
            assignment.append(c)
            self._search(new, assignment, emit, stats, budget, stop_depth)
            assignment.pop()

    def roots(self, depth: int, stats: SearchStats) -> list[tuple[tuple[int, ...], np.ndarray]]:
        """Consistent assignments of the first ``depth`` vertices with their domains, in search order."""
        out = []
        if self.initial.any(axis=1).all():
            emit = lambda a, dom: out.append((a, dom))  # noqa: E731
            self._search(self.initial.copy(), [], emit, stats, self.cfg.node_budget, min(depth, self.n))
        return out

    def solve_subtree(self, prefix, dom, budget) -> tuple[list[tuple[int, ...]], SearchStats]:
        stats = SearchStats()
        out = []
        self._search(dom, list(prefix), lambda a, _: out.append(a), stats, budget, self.n)
        return out, stats

    def to_graph(self, assignment) -> QaryGraph:
        edges = set()
        for x, c in enumerate(assignment):
            for y in mask_to_list(self.cand_masks[c]):
                if y > x:
                    edges.add(self.space.line(x, y))
        return QaryGraph.from_masks(self.cfg.field, self.cfg.v, edges)


_WORKER: Optional[NeighborhoodSearch] = None


def _init_worker(cfg):
    global _WORKER
    _WORKER = NeighborhoodSearch(cfg)


def _solve_local(search, task):
    prefix, dom, budget = task
    try:
        sols, stats = search.solve_subtree(prefix, dom, budget)
    except BudgetExceeded as exc:
        return None, exc.stats
    return sols, stats.to_json()


def _run_task(task):
    return _solve_local(_WORKER, task)


def run_search(cfg: SearchConfig) -> SearchOutcome:
    """Run the full search for ``cfg``; raises BudgetExceeded with partial statistics."""
    t0 = time.perf_counter()
    stats = SearchStats()
    reason = prefilter(cfg)
    if reason is not None:
        stats.prefilter = reason
        stats.wall_time = time.perf_counter() - t0
        return SearchOutcome([], stats, 0)

    search = NeighborhoodSearch(cfg)
    stats.orbit_factor = search.orbit_factor
    roots = search.roots(cfg.split_depth, stats)
    stats.subtrees = len(roots)
    tasks = [(prefix, dom, cfg.node_budget) for prefix, dom in roots]

    solutions = []

    def absorb(sols, sub):
        stats.nodes += sub["nodes"]
        stats.prunes += sub["prunes"]
        if sols is None or stats.nodes > cfg.node_budget:
            stats.complete = False
            stats.wall_time = time.perf_counter() - t0
            raise BudgetExceeded(f"node budget {cfg.node_budget} exhausted", stats=stats.to_json())
        solutions.extend(sols)

    if cfg.workers > 1 and len(tasks) > 1:
        pool = ProcessPoolExecutor(max_workers=cfg.workers, initializer=_init_worker, initargs=(cfg,))
        try:
            for sols, sub in pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * cfg.workers))):
                absorb(sols, sub)
        finally:
            pool.shutdown(cancel_futures=True)
    else:
        for prefix, dom, _ in tasks:
            absorb(*_solve_local(search, (prefix, dom, cfg.node_budget - stats.nodes)))

    graphs = []
    for a in solutions:
        g = search.to_graph(a)
        _recheck(g, cfg)
        graphs.append(g)
    graphs.sort(key=lambda g: g.edges)
    stats.wall_time = time.perf_counter() - t0
    LOG.info("search %s: %d graphs, %d nodes, %.2fs", cfg, len(graphs), stats.nodes, stats.wall_time)
    return SearchOutcome(graphs, stats, len(graphs) * stats.orbit_factor)


def _recheck(g: QaryGraph, cfg: SearchConfig):
    # independent re-verification; the search state is never trusted
    validate_graph(g)
    if is_regular(g) != cfg.k:
        raise AssertionError(f"search produced a graph that is not {cfg.k}-regular")
    if cfg.has_targets:
        params = srg_parameters(g)
        if params is None or not params.matches(cfg.lambda_, cfg.mu):
            raise AssertionError(f"search produced a graph with parameters {params}")


def enumerate_regular(cfg: SearchConfig) -> Iterator[QaryGraph]:
    if cfg.has_targets:
        cfg = SearchConfig(**{**cfg.__dict__, "lambda_": None, "mu": None})
    yield from run_search(cfg).graphs


def enumerate_srg(cfg: SearchConfig) -> Iterator[QaryGraph]:
    if not cfg.has_targets:
        raise ValueError("enumerate_srg needs lambda and mu targets")
    yield from run_search(cfg).graphs


def family_of(g: QaryGraph) -> str:
    """Structural family tag: spread union, symplectic, or other."""
    nbs = set(g.closed_neighborhoods)
    covered = 0
    disjoint = True
    for m in nbs:
        if covered & m:
            disjoint = False
            break
        covered |= m
    if disjoint and covered == (1 << g.num_vertices) - 1:
        return SPREAD_UNION
    try:
        recover_alternating_form(g)
    except (NotPolarity, NotSymplectic):
        return OTHER
    return SYMPLECTIC


def candidate_parameters(v: int, k: int, q: int) -> list[tuple[int, int]]:
    """(lambda, mu) pairs allowed for SRG(v, k, lambda, mu; q) by the three-case split."""
    out = [(bracket(k + 1, q) - 2, 0)]
    if k == v - 2 and bracket(k, q) - 2 >= 0:
        out.append((bracket(k, q) - 2, bracket(k, q)))
    if (v, k) == (5, 2):
        out.append((q - 1, 1))
    return out


@dataclass
class TupleResult:
    k: int
    lambda_: int
    mu: int
    count: Optional[int]
    families: dict
    nodes: int
    complete: bool
    prefilter: Optional[str] = None
    orbit_factor: int = 1
    wall_time: float = 0.0
    graphs: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "lambda": self.lambda_,
            "mu": self.mu,
            "count": self.count,
            "families": dict(self.families),
            "nodes": self.nodes,
            "complete": self.complete,
            "prefilter": self.prefilter,
            "orbit_factor": self.orbit_factor,
        }


@dataclass
class ClassificationReport:
    v: int
    q: int
    tuples: list[TupleResult]

    @property
    def has_other(self) -> bool:
        return any(t.families.get(OTHER, 0) for t in self.tuples)

    @property
    def complete(self) -> bool:
        return all(t.complete for t in self.tuples)

    def to_json(self) -> dict:
        return {"v": self.v, "q": self.q, "tuples": [t.to_json() for t in self.tuples]}


def classify_tuple(cfg: SearchConfig) -> TupleResult:
    families = {SPREAD_UNION: 0, SYMPLECTIC: 0, OTHER: 0}
    try:
        out = run_search(cfg)
    except BudgetExceeded as exc:
        return TupleResult(cfg.k, cfg.lambda_, cfg.mu, None, families, exc.stats.get("nodes", 0), False)
    for g in out.graphs:
        families[family_of(g)] += out.stats.orbit_factor
    return TupleResult(
        cfg.k,
        cfg.lambda_,
        cfg.mu,
        out.count,
        families,
        out.stats.nodes,
        True,
        out.stats.prefilter,
        out.stats.orbit_factor,
        out.stats.wall_time,
        out.graphs,
    )


def classify_report(
    v: int,
    q: int,
    k: Optional[int] = None,
    lambda_: Optional[int] = None,
    mu: Optional[int] = None,
    node_budget: int = 10**7,
    workers: int = 1,
    symmetry_fixing: bool = False,
) -> ClassificationReport:
    """Search every parameter tuple the three-case split allows and tag each graph found.

    ``k`` restricts to one degree; ``lambda_``/``mu`` (with ``k``) to one tuple.
    A tuple whose budget runs out is recorded as incomplete.
    """
    ks = [k] if k is not None else list(range(1, v))
    results = []
    for kk in ks:
        pairs = [(lambda_, mu)] if lambda_ is not None else candidate_parameters(v, kk, q)
        for lam, m in pairs:
            cfg = SearchConfig(v, kk, q, lam, m, symmetry_fixing, node_budget, workers)
            results.append(classify_tuple(cfg))
    return ClassificationReport(v, q, results)
