import itertools

import networkx as nx
import numpy as np
import pytest
from conftest import connected_graphs, graphs, net_graph, to_nx
from hypothesis import given, settings, strategies as st

from histree.errors import TooLarge
from histree.graph import Graph, TreeWitness, is_connected, verify_hist
from histree.oracle import count_spanning_trees, hamiltonian_path, hisf, oracle_hisf, oracle_hist, spanning_trees


def test_k4_examples():
    trees = list(spanning_trees(Graph.complete(4)))
    assert len(trees) == 16
    stars = [t for t in trees if 3 in TreeWitness(4, t).degrees]
    assert len(stars) == 4
    assert oracle_hist(Graph.complete(4)).is_yes


def test_no_examples():
    assert oracle_hist(Graph.complete(3)).is_no
    assert oracle_hist(net_graph()).is_no


def test_size_gate():
    with pytest.raises(TooLarge):
        oracle_hist(Graph.complete(12), max_n=10)


def test_hisf_examples():
    assert oracle_hisf(Graph.complete(4), 1)
    assert not oracle_hisf(Graph.complete(3), 1)
    assert oracle_hisf(net_graph(), 6)


def test_hampath_examples():
    assert hamiltonian_path(Graph.path(4), 0, 3) == [0, 1, 2, 3]
    k4 = Graph.complete(4)
    for s, t in itertools.permutations(range(4), 2):
        p = hamiltonian_path(k4, s, t)
        assert p[0] == s and p[-1] == t and sorted(p) == [0, 1, 2, 3]
    assert hamiltonian_path(Graph.star(3), 1, 2) is None


@given(graphs(max_n=7))
@settings(max_examples=150, deadline=None)
def test_tree_count_matches_matrix_tree_theorem(g):
    if g.n == 1:
        assert count_spanning_trees(g) == 1
        return
    lap = nx.laplacian_matrix(to_nx(g)).toarray().astype(float)
    expected = round(np.linalg.det(lap[1:, 1:])) if is_connected(g) else 0
    assert count_spanning_trees(g) == expected


@given(connected_graphs(max_n=8))
@settings(max_examples=200, deadline=None)
def test_compiled_search_matches_python_search(g):
    a = oracle_hist(g)
    b = oracle_hist(g, compiled=False)
    assert a.answer == b.answer
    if a.is_yes:
        assert verify_hist(g, a.witness)
        assert a.witness == b.witness


@given(connected_graphs(max_n=7))
@settings(max_examples=100, deadline=None)
def test_hist_iff_some_enumerated_tree_qualifies(g):
    any_tree = any(2 not in TreeWitness(g.n, t).degrees for t in spanning_trees(g))
    assert oracle_hist(g).is_yes == any_tree


@given(graphs(max_n=7), st.integers(1, 7))
@settings(max_examples=200, deadline=None)
def test_hisf_result_is_a_valid_forest(g, k):
    forest = hisf(g, k)
    assert (forest is None) == (hisf(g, k, compiled=False) is None)
    if forest is None:
        return
    assert len(forest) == g.n - k
    h = nx.Graph(forest)
    h.add_nodes_from(range(g.n))
    assert nx.is_forest(h) and nx.number_connected_components(h) == k
    assert all(d != 2 for _, d in h.degree())
    assert all(g.has_edge(u, v) for u, v in forest)


@given(connected_graphs(max_n=8), st.data())
@settings(max_examples=150, deadline=None)
def test_hampath_matches_permutation_search(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    t = data.draw(st.integers(0, g.n - 1))
    found = hamiltonian_path(g, s, t)
    brute = None
    if g.n == 1:
        brute = [s] if s == t else None
    elif s != t:
        for mid in itertools.permutations(set(range(g.n)) - {s, t}):
            p = [s, *mid, t]
            if all(g.has_edge(a, b) for a, b in zip(p, p[1:])):
                brute = p
                break
    assert (found is None) == (brute is None)
    if found:
        assert found[0] == s and found[-1] == t and sorted(found) == list(range(g.n))
        assert all(g.has_edge(a, b) for a, b in zip(found, found[1:]))
