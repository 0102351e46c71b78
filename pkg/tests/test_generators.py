import hashlib
import random

import pytest
from hypothesis import given, settings, strategies as st

from connfactor.errors import PreconditionViolated
from connfactor.generators import gen_instance, planted_split, random_regular, threshold
from connfactor.graph import Graph, connected_components, dump_graph, is_connected
from connfactor.solver import Outcome, solve
from connfactor.tutte import dump_degree_spec

from conftest import complete


def test_threshold():
    assert [threshold(n) for n in (10, 12, 13, 15, 20, 200)] == [4, 5, 6, 6, 8, 80]


def test_twin_k5():
    g, f = gen_instance("twin-k", {"k": 5}, 0)
    assert (g.n, g.m) == (12, 36)
    assert set(f) == {5}
    assert sum(1 for u, v in g.edges if (u < 6) != (v < 6)) == 6


@pytest.mark.parametrize("seed", [0, 1, 2, 17])
def test_planted_connected_without_extra_is_its_own_factor(seed):
    g, f = gen_instance("planted-connected", {"n": 12, "f": 5, "extra": 0}, seed)
    assert g.degrees() == [5] * 12 and is_connected(g)
    r = solve(g, f)
    assert r.outcome is Outcome.CONNECTED and r.factor.edges == g.edges


def test_gnp_full():
    g, f = gen_instance("gnp-threshold", {"n": 12, "p": 1.0, "f": 5}, 9)
    assert g == complete(12) and set(f) == {5}


def test_gnp_default_f():
    _, f = gen_instance("gnp-threshold", {"n": 13, "p": 0.5}, 0)
    assert set(f) == {6}


def test_planted_split_has_two_block_factor():
    g, f = planted_split(16, 7, 4, seed=3)
    assert min(g.degrees()) >= 7 and g.m == 56 + 4


@pytest.mark.parametrize("model,params", [
    ("planted-connected", {"n": 13, "f": 5}),               # odd n*f
    ("planted-connected", {"n": 12, "f": 12}),
    ("planted-split", {"n": 12, "f": 6}),                   # blocks too small
    ("gnp-threshold", {"n": 12, "p": 1.5}),
    ("gnp-threshold", {"n": 12}),                           # missing p
    ("no-such-model", {}),
])
def test_bad_params(model, params):
    with pytest.raises(PreconditionViolated):
        gen_instance(model, params, 0)


# Frozen outputs: the generator (random.Random, MT19937) must not drift.
@pytest.mark.parametrize("model,params,m,digest", [
    ("planted-connected", {"n": 20, "f": 8, "extra": 10}, 90, "53b2954f8e748a73"),
    ("gnp-threshold", {"n": 12, "p": 0.6}, 38, "ce411ccbbcfb775f"),
    ("planted-split", {"n": 16, "f": 7, "extra": 4}, 60, "96e334a62cc24c9a"),
])
def test_frozen_outputs(model, params, m, digest):
    g, _ = gen_instance(model, params, 42)
    assert g.m == m
    assert hashlib.sha256(dump_graph(g).encode()).hexdigest()[:16] == digest


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["planted-connected", "gnp-threshold", "planted-split"]),
       st.integers(12, 24), st.integers(0, 2**31))
def test_byte_deterministic(model, n, seed):
    f = threshold(n)
    if model == "planted-connected" and n * f % 2:
        n += 1
        f = threshold(n)
        if n * f % 2:
            return
    params = {"n": n, "f": f, "p": 0.7, "extra": 5}
    if model == "planted-split":
        left = n // 2
        if min(left, n - left) <= f or (left * f) % 2 or ((n - left) * f) % 2:
            return
    a = gen_instance(model, params, seed)
    b = gen_instance(model, params, seed)
    assert dump_graph(a[0]) == dump_graph(b[0])
    assert dump_degree_spec(a[1]) == dump_degree_spec(b[1])


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 30), st.integers(2, 12), st.integers(0, 2**31))
def test_random_regular(n, d, seed):
    if d >= n or n * d % 2:
        return
    g = Graph(n, random_regular(n, d, random.Random(seed)))
    assert g.degrees() == [d] * n
    assert len(connected_components(g)) == 1


def test_connected_perfect_matching_impossible():
    with pytest.raises(PreconditionViolated):
        random_regular(4, 1, random.Random(0))
    assert len(random_regular(4, 1, random.Random(0), connected=False)) == 2
