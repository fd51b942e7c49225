import itertools
import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defectcolor.coloring import verify
from defectcolor.corpus import cycle, dodecahedron, gen_random, grid, path, subdivided
from defectcolor.solver import (
    GirthTooSmall,
    TooLarge,
    brute_force,
    exact_solve,
    make_nonempty,
    reduce_solve,
)

PAIRS = [(0, 0), (0, 1), (1, 1), (2, 2), (3, 4), (1, 0), (0, 2)]


def naive(adj, d1, d2):
    """Pure-python enumeration, the oracle for the numpy oracle."""
    vs = sorted(adj)
    for bits in itertools.product((3, 4), repeat=len(vs)):
        colors = dict(zip(vs, bits))
        if len(set(bits)) < 2:
            continue
        bound = {3: d1, 4: d2}
        if all(sum(colors[w] == colors[v] for w in adj[v]) <= bound[colors[v]] for v in vs):
            return True
    return False


def random_adj(n, p, seed):
    g = nx.gnp_random_graph(n, p, seed=seed)
    return {v: set(g[v]) for v in g}


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 10), st.floats(0.1, 0.9), st.integers(0, 10_000), st.sampled_from(PAIRS))
def test_brute_force_matches_naive(n, p, seed, pair):
    adj = random_adj(n, p, seed)
    got = brute_force(adj, *pair)
    assert (got is not None) == naive(adj, *pair)
    if got is not None:
        assert verify(adj, got, *pair).valid


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 14), st.floats(0.05, 0.9), st.integers(0, 10_000), st.sampled_from(PAIRS))
def test_exact_matches_brute_force(n, p, seed, pair):
    adj = random_adj(n, p, seed)
    rep = exact_solve(adj, *pair)
    assert rep.feasible == (brute_force(adj, *pair) is not None)
    if rep.feasible:
        assert verify(adj, rep.coloring, *pair).valid


def test_small_known_answers():
    assert not exact_solve(cycle(5), 0, 0).feasible  # odd cycle
    assert exact_solve(cycle(6), 0, 0).feasible
    assert exact_solve(cycle(5), 0, 1).feasible
    assert not exact_solve({0: set()}, 3, 4).feasible  # one class would be empty
    assert exact_solve({0: {1}, 1: {0}}, 0, 0).feasible
    k5 = {v: set(range(5)) - {v} for v in range(5)}
    assert not exact_solve(k5, 0, 1).feasible
    assert exact_solve(k5, 1, 2).feasible


def test_disconnected_inputs():
    adj = {0: {1}, 1: {0}, 2: {3}, 3: {2}, 4: set()}
    for pair in PAIRS:
        assert exact_solve(adj, *pair).feasible == (brute_force(adj, *pair) is not None)


def test_brute_force_limit():
    with pytest.raises(TooLarge):
        brute_force(path(25), 3, 4)


def test_make_nonempty():
    adj = {0: {1}, 1: {0, 2}, 2: {1}}
    out = make_nonempty(adj, {0: 3, 1: 3, 2: 3}, 3, 4)
    assert verify(adj, out, 3, 4).valid


def test_report_dict_is_json():
    rep = exact_solve(dodecahedron(), 3, 4)
    d = rep.to_dict()
    json.dumps(d)
    assert d["outcome"] == "feasible"
    assert d["bounds"] == {"3": 3, "4": 4}
    assert len(d["coloring"]) == 20


@pytest.mark.parametrize("strategy", ["vertex", "edge", "gadget"])
def test_reduce_solve_on_random_graphs(strategy):
    for seed in range(25):
        emb = gen_random(random.Random(seed).randint(5, 200), seed)
        rep = reduce_solve(emb, strategy=strategy)
        assert rep.feasible
        assert verify(emb, rep.coloring, 3, 4).valid
        assert rep.trace is not None


def test_reduce_solve_named_graphs():
    for emb in (dodecahedron(), subdivided(dodecahedron()), cycle(5), path(7)):
        rep = reduce_solve(emb)
        assert verify(emb, rep.coloring, 3, 4).valid


def test_reduce_solve_rejects_short_cycles():
    with pytest.raises(GirthTooSmall):
        reduce_solve(grid(3, 3))
    with pytest.raises(ValueError):
        reduce_solve(cycle(5), strategy="nope")


def test_reduce_solve_is_deterministic():
    emb = gen_random(250, 7)
    a, b = reduce_solve(emb), reduce_solve(emb)
    assert a.coloring == b.coloring
    assert a.trace.to_json() == b.trace.to_json()


def test_trace_steps_shrink_the_measure():
    rep = reduce_solve(gen_random(120, 5), strategy="gadget")
    assert all(step.decreases for step in rep.trace.steps)
    json.loads(rep.trace.to_json())
