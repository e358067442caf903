from itertools import combinations, product

import pytest
from conftest import connected_graphs, net_graph
from hypothesis import given, settings, strategies as st

from histree.errors import QuotientTooLarge
from histree.exact import decide_exact
from histree.graph import Graph, is_connected, verify_hist
from histree.modular import (
    AssignmentInstance,
    assignment_feasible,
    decide_modular,
    has_nontrivial_module,
    is_module,
    maximal_modules,
    partition_for,
    top_level_modular_partition,
)


def _mods(mp):
    return sorted(sorted(m) for m in mp.modules)


def test_square_partition():
    c4 = Graph.cycle(4)
    assert sorted(map(sorted, maximal_modules(c4))) == [[0, 2], [1, 3]]
    assert _mods(top_level_modular_partition(c4)) == [[0], [1, 3], [2]]


@pytest.mark.parametrize("g", [Graph.complete(4), Graph.path(4)])
def test_singleton_partitions(g):
    assert _mods(top_level_modular_partition(g)) == [[0], [1], [2], [3]]


def test_decide_examples():
    assert decide_modular(Graph.complete(4)).is_yes
    c4 = Graph.cycle(4)
    assert decide_modular(c4, top_level_modular_partition(c4)).is_no
    assert decide_modular(c4).is_no
    assert decide_modular(net_graph()).is_no


def test_quotient_gate():
    with pytest.raises(QuotientTooLarge):
        decide_modular(Graph.path(8), max_k=5)


def test_assignment_examples():
    tight = AssignmentInstance([0, 2], {0: 2, 1: 2}, [(0, 1)], {1: True})
    assert assignment_feasible(tight) is None
    assert assignment_feasible(AssignmentInstance([0, 0], {}, [(0, 1)])) == {}
    assert assignment_feasible(AssignmentInstance([0, 1], {0: 1}, [(0, 1)])) == {(1, 0): 1}


def _distributions(total, arcs):
    """Every way to split ``total`` over ``arcs`` (self arcs take at most 1)."""
    if not arcs:
        if total == 0:
            yield ()
        return
    (i, j), rest = arcs[0], arcs[1:]
    top = min(total, 1) if i == j else total
    for x in range(top + 1):
        for tail in _distributions(total - x, rest):
            yield (x, *tail)


def _brute_assignment(inst):
    """Exhaustive search, supplier by supplier; received counts are capped at 2."""
    k = len(inst.supply)
    targets = set(inst.demand)
    out_arcs = {i: [] for i in range(k)}
    for a, b in inst.edges:
        for i, j in ((a, b), (b, a)):
            if j in targets:
                out_arcs[i].append((i, j))
    for i, ok in inst.self_ok.items():
        if ok and i in targets:
            out_arcs[i].append((i, i))
    states = {tuple([0] * k)}
    for i in range(k):
        nxt = set()
        for got in states:
            for dist in _distributions(inst.supply[i], out_arcs[i]):
                new = list(got)
                for (_, j), x in zip(out_arcs[i], dist):
                    new[j] = min(2, new[j] + x)
                nxt.add(tuple(new))
        states = nxt
    return any(all(got[j] >= d for j, d in inst.demand.items()) for got in states)


@st.composite
def assignment_instances(draw):
    k = draw(st.integers(1, 5))
    supply = [draw(st.integers(0, 3)) for _ in range(k)]
    members = draw(st.lists(st.integers(0, k - 1), unique=True, max_size=k))
    demand = {j: draw(st.integers(0, 2)) for j in members}
    pairs = list(combinations(range(k), 2))
    edges = [e for e in pairs if draw(st.booleans())]
    self_ok = {j: draw(st.booleans()) for j in members}
    return AssignmentInstance(supply, demand, edges, self_ok)


@given(assignment_instances())
@settings(max_examples=400, deadline=None)
def test_assignment_matches_bruteforce(inst):
    x = assignment_feasible(inst)
    assert (x is not None) == _brute_assignment(inst)
    if x is None:
        return
    out = [0] * len(inst.supply)
    into = [0] * len(inst.supply)
    adjacent = {frozenset(e) for e in inst.edges}
    for (i, j), c in x.items():
        assert c > 0
        if i == j:
            assert c == 1 and inst.self_ok.get(i)
        else:
            assert frozenset((i, j)) in adjacent and j in inst.demand
        out[i] += c
        into[j] += c
    assert out == list(inst.supply)
    assert all(into[j] >= d for j, d in inst.demand.items())


@given(connected_graphs(min_n=2, max_n=8), st.data())
@settings(max_examples=150, deadline=None)
def test_partitions_are_valid(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    mp = partition_for(g, v)
    assert mp.is_valid(g)
    assert mp.modules[mp.m0] == frozenset([v])
    for i, j in combinations(range(len(mp.modules)), 2):
        full = all(g.has_edge(a, b) for a in mp.modules[i] for b in mp.modules[j])
        assert mp.quotient.has_edge(i, j) == full
    for m, flag in zip(mp.modules, mp.independent):
        assert flag == g.is_independent(m)


def _brute_maximal_modules(g):
    mods = [frozenset(m) for size in range(1, g.n) for m in combinations(range(g.n), size) if is_module(g, m)]
    return {m for m in mods if not any(m < o for o in mods)}


@given(connected_graphs(min_n=3, max_n=7))
@settings(max_examples=150, deadline=None)
def test_prime_root_children_are_maximal_modules(g):
    if not is_connected(g.complement()):
        return
    assert set(maximal_modules(g)) == _brute_maximal_modules(g)
    assert has_nontrivial_module(g) == any(len(m) > 1 for m in _brute_maximal_modules(g))


@given(connected_graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_modular_matches_exact(g):
    v = decide_modular(g)
    assert v.answer == decide_exact(g).answer
    if v.is_yes:
        assert verify_hist(g, v.witness)
