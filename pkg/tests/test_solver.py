import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from connfactor.distance import PathConstraint
from connfactor.errors import PreconditionViolated
from connfactor.generators import gen_instance, planted_split, threshold, twin_k
from connfactor.graph import INF, Graph, connected_components, diameter
from connfactor.oracle import EnumerationBudget, classify
from connfactor.solver import (
    Outcome,
    candidate_paths,
    connect_across,
    density_problems,
    solve,
    verify_connected_factor,
)
from connfactor.tutte import DegreeSpec, Factor

from conftest import complete, disjoint, star

TWIN, FIVE = twin_k(5)
CLIQUES = frozenset(e for e in TWIN.edges if (e[0] < 6) == (e[1] < 6))
CONNECTED_TWIN = TWIN.edges - {(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)}


def brute_paths(g, X):
    """Every u-a-b-v with u in X, v outside, sorted by (u, v, a, b)."""
    out = []
    for u, a, b, v in itertools.permutations(range(g.n), 4):
        if u in X and v not in X and g.has_edge(u, a) and g.has_edge(a, b) and g.has_edge(b, v):
            out.append((u, v, a, b))
    return [PathConstraint(u, a, b, v) for u, v, a, b in sorted(out)]


class TestCandidates:
    def test_twin_golden_first(self):
        stream = list(candidate_paths(TWIN, range(6)))
        assert stream[0] == PathConstraint(0, 1, 7, 6)
        assert stream == brute_paths(TWIN, set(range(6)))
        assert len(stream) == 390

    def test_empty_cut(self):
        g = disjoint(complete(6), complete(6))
        assert list(candidate_paths(g, range(6))) == []

    def test_k4(self):
        got = [p.vertices for p in candidate_paths(complete(4), {0, 1})]
        assert got == [(0, 1, 3, 2), (0, 3, 1, 2), (0, 1, 2, 3), (0, 2, 1, 3),
                       (1, 0, 3, 2), (1, 3, 0, 2), (1, 0, 2, 3), (1, 2, 0, 3)]
        assert [p.vertices for p in brute_paths(complete(4), {0, 1})] == got


class TestVerify:
    def test_k13(self):
        g = complete(13)
        r = verify_connected_factor(g, DegreeSpec.uniform(13, 12), g.edges)
        assert r.ok and r.connected and r.diameter == 1

    def test_two_cliques(self):
        r = verify_connected_factor(TWIN, FIVE, CLIQUES)
        assert not r.ok and not r.connected and r.components == 2 and r.diameter == INF
        assert r.violations == ["disconnected: 2 components"]
        assert "VALID no\nCOMPONENTS 2\nDIAMETER inf\n" in r.to_text()

    def test_connected_twin(self):
        r = verify_connected_factor(TWIN, FIVE, CONNECTED_TWIN)
        assert r.ok and r.diameter == 3

    def test_wrong_degrees(self):
        r = verify_connected_factor(TWIN, FIVE, CONNECTED_TWIN - {(0, 6)})
        assert any("vertex 0 has degree 4" in v for v in r.violations)


class TestSolve:
    def test_k13(self):
        r = solve(complete(13), DegreeSpec.uniform(13, 12))
        assert r.outcome is Outcome.CONNECTED and r.factor.edges == complete(13).edges

    def test_twin(self):
        r = solve(TWIN, FIVE)
        assert r.outcome is Outcome.CONNECTED
        assert verify_connected_factor(TWIN, FIVE, r.factor).ok
        assert r.diagnostics.witness == PathConstraint(0, 1, 7, 6)
        assert r.diagnostics.split == (frozenset(range(6)), frozenset(range(6, 12)))
        assert diameter(r.factor.graph) >= 3

    def test_two_disjoint_cliques(self):
        g = disjoint(complete(6), complete(6))
        r = solve(g, DegreeSpec.uniform(12, 5))
        assert r.outcome is Outcome.NO_CONNECTED_FACTOR and r.factor is None
        assert r.diagnostics.candidates_tried == 0

    def test_no_factor(self):
        # K_{6,7} has no 6-factor: every edge crosses, so both sides would need equal degree sums.
        g = Graph(13, [(u, v) for u in range(6) for v in range(6, 13)])
        r = solve(g, DegreeSpec.uniform(13, 6))
        assert r.outcome is Outcome.NO_FACTOR

    def test_sparse_is_rejected(self):
        with pytest.raises(PreconditionViolated):
            solve(star(3), DegreeSpec.uniform(4, 1))
        with pytest.raises(PreconditionViolated):
            solve(complete(12), DegreeSpec.uniform(12, 4))
        assert density_problems(complete(12), DegreeSpec.uniform(12, 5)) == []

    def test_fallback_oracle(self):
        r = solve(complete(5), DegreeSpec.uniform(5, 2), fallback_oracle=True)
        assert r.outcome is Outcome.CONNECTED and r.diagnostics.used_oracle
        r = solve(star(3), DegreeSpec.uniform(4, 2), fallback_oracle=True)
        assert r.outcome is Outcome.NO_FACTOR
        r = solve(disjoint(complete(3), complete(3)), DegreeSpec.uniform(6, 2), fallback_oracle=True,
                  oracle_budget=EnumerationBudget(max_nodes=10_000))
        assert r.outcome is Outcome.NO_CONNECTED_FACTOR

    def test_parallel_matches_serial(self):
        a = solve(TWIN, FIVE)
        b = solve(TWIN, FIVE, parallel=True, workers=2)
        assert a.to_text() == b.to_text()

    def test_serialization(self):
        r = solve(TWIN, FIVE)
        text = r.to_text()
        lines = text.splitlines()
        assert lines[0] == "STATUS connected" and lines[1] == "12 30"
        assert lines[-1] == "WITNESS 0 1 7 6" and len(lines) == 33
        doc = json.loads(r.to_json())
        assert doc["status"] == "connected" and doc["m"] == 30 and doc["witness"] == [0, 1, 7, 6]

    def test_connect_across_from_given_split(self):
        found = connect_across(TWIN, FIVE, range(6))
        assert found is not None
        F, p = found
        assert p == PathConstraint(0, 1, 7, 6)
        assert verify_connected_factor(TWIN, FIVE, F).ok


def _split_instances():
    for n in (12, 14, 16, 18, 20):
        f = threshold(n)
        for seed in range(3):
            for extra in (0, 3, 8):
                yield n, f, seed, extra


@pytest.mark.parametrize("n,f,seed,extra", list(_split_instances()))
def test_two_block_instances(n, f, seed, extra):
    g, spec = planted_split(n, f, extra, seed)
    r = solve(g, spec)
    if r.outcome is Outcome.CONNECTED:
        assert verify_connected_factor(g, spec, r.factor).ok
    if r.diagnostics.split is not None:
        X, Y = r.diagnostics.split
        # Two components, each larger than f.
        assert len(X) >= f + 1 and len(Y) >= f + 1
        if r.diagnostics.witness is not None:
            w = r.diagnostics.witness
            assert (w.u in X) and (w.v not in X)
            assert diameter(r.factor.graph) >= 3
    if extra == 0:
        # Without cross edges no connected factor can exist.
        assert r.outcome is Outcome.NO_CONNECTED_FACTOR
    elif n <= 14:
        assert r.outcome.value == classify(g, spec).outcome


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0.6, 0.7, 0.8, 0.9, 1.0]), st.integers(0, 2**31))
def test_agrees_with_oracle_on_n12(p, seed):
    g, f = gen_instance("gnp-threshold", {"n": 12, "p": p}, seed)
    r = solve(g, f)
    assert r.outcome.value == classify(g, f).outcome
    if r.factor is not None:
        assert verify_connected_factor(g, f, r.factor).ok


@pytest.mark.parametrize("k", range(5, 10))
def test_twin_family(k):
    g, f = twin_k(k)
    r = solve(g, f)
    assert r.outcome is Outcome.CONNECTED
    assert r.diagnostics.witness == PathConstraint(0, 1, k + 2, k + 1)
    assert verify_connected_factor(g, f, r.factor).ok
    assert diameter(r.factor.graph) == 3
