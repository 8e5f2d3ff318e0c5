import json
import sys
from pathlib import Path

import pytest

from qsrg.algebra import GF, bracket, projective_space
from qsrg.classify import (
    OTHER,
    SPREAD_UNION,
    SYMPLECTIC,
    NeighborhoodSearch,
    SearchConfig,
    SearchStats,
    classify_report,
    classify_tuple,
    enumerate_regular,
    enumerate_srg,
    family_of,
    candidate_parameters,
    prefilter,
    run_search,
)
from qsrg.constructions import isotropic_graph
from qsrg.errors import BudgetExceeded
from qsrg.qgraph import is_regular, srg_parameters, validate_graph

sys.path.insert(0, str(Path(__file__).parent))
import oracles  # noqa: E402
from catalog import comp, spread, symplectic  # noqa: E402


def _line_sets(g):
    space = projective_space(g.v, g.field)
    return frozenset(frozenset(space.points[i] for i in e) for e in g.edges)


def test_tiny_examples():
    assert len(list(enumerate_regular(SearchConfig(2, 1, 2)))) == 1
    (g,) = enumerate_regular(SearchConfig(3, 2, 2))
    assert g == comp(3, 2)
    (g,) = enumerate_regular(SearchConfig(3, 0, 2))
    assert g.edges == ()


def test_v3_matches_brute_force():
    brute = oracles.regular_edge_sets(3, 2)
    for k in range(3):
        ours = {_line_sets(g) for g in enumerate_regular(SearchConfig(3, k, 2))}
        assert ours == brute.get(k, set()), k


def test_line_spreads_of_pg32():
    graphs = list(enumerate_regular(SearchConfig(4, 1, 2)))
    assert len(graphs) == 56
    assert {_line_sets(g) for g in graphs} == set(oracles.count_line_spreads(4, 2))
    srg = list(enumerate_srg(SearchConfig(4, 1, 2, 1, 0)))
    assert srg == graphs


def test_symplectic_28():
    graphs = list(enumerate_srg(SearchConfig(4, 2, 2, 1, 3)))
    assert len(graphs) == 28
    F = GF(2)
    expected = {isotropic_graph(M, 4, F) for M in oracles.alternating_invertible_matrices(4, 2)}
    assert len(expected) == 28
    assert set(graphs) == expected
    assert all(family_of(g) == SYMPLECTIC for g in graphs)
    assert graphs == sorted(graphs, key=lambda g: g.edges)


def test_regular_equals_srg_at_v4():
    assert list(enumerate_regular(SearchConfig(4, 2, 2))) == list(enumerate_srg(SearchConfig(4, 2, 2, 1, 3)))


def test_wrong_targets_give_nothing():
    assert list(enumerate_srg(SearchConfig(4, 2, 2, 5, 0))) == []


def test_soundness():
    for cfg in [SearchConfig(4, 1, 2, 1, 0), SearchConfig(4, 2, 2, 1, 3), SearchConfig(4, 3, 2, 13, 0)]:
        for g in enumerate_srg(cfg):
            validate_graph(g)
            assert is_regular(g) == cfg.k
            assert srg_parameters(g).matches(cfg.lambda_, cfg.mu)


def test_symmetry_fixing_counts():
    out = run_search(SearchConfig(4, 2, 2, 1, 3, symmetry_fixing=True))
    assert out.stats.orbit_factor == 7 and out.count == 28
    out = run_search(SearchConfig(4, 1, 2, symmetry_fixing=True))
    assert out.count == 56
    out = run_search(SearchConfig(4, 2, 3, 2, 4, symmetry_fixing=True))
    assert out.count == 234


def test_enumerate_srg_needs_targets():
    with pytest.raises(ValueError):
        list(enumerate_srg(SearchConfig(4, 2, 2)))
    with pytest.raises(ValueError):
        SearchConfig(4, 2, 2, lambda_=1)
    with pytest.raises(ValueError):
        SearchConfig(4, 4, 2)
    with pytest.raises(ValueError):
        SearchConfig(4, 1, 2, node_budget=0)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded) as info:
        run_search(SearchConfig(4, 1, 2, node_budget=10))
    assert info.value.stats["complete"] is False
    res = classify_tuple(SearchConfig(4, 1, 2, 1, 0, node_budget=10))
    assert res.count is None and not res.complete


@pytest.mark.parametrize("workers", [2, 3])
def test_worker_count_does_not_change_output(workers):
    for args in [(4, 1, 2, 1, 0), (4, 2, 2, 1, 3)]:
        one = run_search(SearchConfig(*args))
        many = run_search(SearchConfig(*args, workers=workers))
        assert one.graphs == many.graphs
        assert one.stats.nodes == many.stats.nodes


def test_budget_exceeded_in_parallel():
    with pytest.raises(BudgetExceeded):
        run_search(SearchConfig(4, 1, 2, node_budget=50, workers=2))


def test_prefilter_reasons():
    assert prefilter(SearchConfig(5, 1, 2)) is not None
    assert prefilter(SearchConfig(5, 2, 2, 1, 1)) is None
    assert prefilter(SearchConfig(4, 2, 2, 2, 3)) is not None
    assert prefilter(SearchConfig(5, 2, 2, 0, 2)) is not None


def _unfiltered(cfg):
    """Search without the parameter filters; keep graphs whose defined parameters equal the targets.

    The complete graph has no non-adjacent pair, so it satisfies every mu
    target vacuously and is dropped here.
    """
    search = NeighborhoodSearch(cfg)
    roots = search.roots(0, SearchStats())
    out = []
    for prefix, dom in roots:
        sols, _ = search.solve_subtree(prefix, dom, 10**7)
        for a in sols:
            p = srg_parameters(search.to_graph(a))
            if p.as_tuple() == (cfg.v, cfg.k, cfg.lambda_, cfg.mu):
                out.append(a)
    return out


@pytest.mark.slow
@pytest.mark.parametrize("v", [3, 4])
def test_prefilter_consistency(v):
    """Every target rejected by the parameter filters yields nothing in a search that skips them."""
    q = 2
    for k in range(1, v):
        top = bracket(k + 1, q)
        for lam in range(0, top - 1):
            for mu in range(0, top + 1):
                cfg = SearchConfig(v, k, q, lam, mu)
                if prefilter(cfg) is not None:
                    assert _unfiltered(cfg) == [], (v, k, lam, mu)


def test_regular_graphs_pass_prefilter():
    for v in (3, 4):
        for k in range(1, v):
            for g in enumerate_regular(SearchConfig(v, k, 2)):
                p = srg_parameters(g)
                if p is not None and p.lambda_ is not None and p.mu is not None:
                    assert prefilter(SearchConfig(v, k, 2, p.lambda_, p.mu)) is None


def test_family_tags():
    assert family_of(spread(4, 2, 2)) == SPREAD_UNION
    assert family_of(comp(4, 2)) == SPREAD_UNION
    assert family_of(spread(6, 3, 2)) == SPREAD_UNION
    assert family_of(symplectic(4, 3)) == SYMPLECTIC
    assert family_of(symplectic(6, 2)) == SYMPLECTIC


def test_candidate_parameters():
    assert candidate_parameters(4, 1, 2) == [(1, 0)]
    assert candidate_parameters(4, 2, 2) == [(5, 0), (1, 3)]
    assert candidate_parameters(4, 3, 2) == [(13, 0)]
    assert candidate_parameters(5, 2, 2) == [(5, 0), (1, 1)]
    assert candidate_parameters(6, 4, 3) == [(119, 0), (38, 40)]


def test_report_v4():
    rep = classify_report(4, 2)
    got = {(t.k, t.lambda_, t.mu): (t.count, t.families) for t in rep.tuples}
    assert got[(1, 1, 0)] == (56, {SPREAD_UNION: 56, SYMPLECTIC: 0, OTHER: 0})
    assert got[(2, 1, 3)] == (28, {SPREAD_UNION: 0, SYMPLECTIC: 28, OTHER: 0})
    assert got[(2, 5, 0)][0] == 0
    assert got[(3, 13, 0)] == (1, {SPREAD_UNION: 1, SYMPLECTIC: 0, OTHER: 0})
    assert not rep.has_other and rep.complete
    data = json.loads(json.dumps(rep.to_json()))
    assert set(data) == {"v", "q", "tuples"}
    assert {"k", "lambda", "mu", "count", "families", "nodes", "complete"} <= set(data["tuples"][0])


def test_report_v3_and_v5():
    rep = classify_report(3, 2)
    counts = {(t.k, t.lambda_, t.mu): t.count for t in rep.tuples}
    assert counts[(1, 1, 0)] == 0 and counts[(2, 5, 0)] == 1
    rep = classify_report(5, 2, symmetry_fixing=True)
    counts = {(t.k, t.lambda_, t.mu): t.count for t in rep.tuples}
    assert counts[(1, 1, 0)] == 0
    assert counts[(2, 1, 1)] == 0
    assert counts[(4, 29, 0)] == 1
    assert not rep.has_other and rep.complete
    assert all(t.families[SYMPLECTIC] == 0 for t in rep.tuples)


def test_symplectic_q3_against_forms():
    forms = oracles.alternating_invertible_matrices(4, 3)
    assert len(forms) == 468
    F = GF(3)
    expected = {isotropic_graph(M, 4, F) for M in forms}
    # M and -M give the same graph
    assert len(expected) == 234
    assert set(enumerate_srg(SearchConfig(4, 2, 3, 2, 4))) == expected
