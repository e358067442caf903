import random
from itertools import combinations

import networkx as nx
import pytest
from conftest import connected_graphs, net_graph, to_nx
from hypothesis import given, settings, strategies as st

from histree.cvd import (
    CvdDecomposition,
    cluster_vertex_deletion,
    decide_via_kernel,
    decompose,
    find_induced_p3,
    kernelize,
    kernel_clique_bound,
    minimum_cvd,
)
from histree.errors import BudgetExceeded, InvalidDecomposition
from histree.exact import decide_exact
from histree.graph import Graph, verify_hist


def _is_cluster(g, alive):
    return find_induced_p3(g, set(alive)) is None


def test_cluster_graph_needs_nothing():
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
    assert cluster_vertex_deletion(g, 0) == frozenset()


def test_path_needs_one():
    s = cluster_vertex_deletion(Graph.path(3), 1)
    assert s is not None and len(s) == 1


def test_pentagon():
    c5 = Graph.cycle(5)
    assert cluster_vertex_deletion(c5, 1) is None
    s = cluster_vertex_deletion(c5, 2)
    assert s is not None and len(s) == 2
    assert _is_cluster(c5, set(range(5)) - s)


@given(connected_graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_minimum_cvd_is_minimum(g):
    s = minimum_cvd(g, 8)
    assert _is_cluster(g, set(range(g.n)) - s)
    for small in combinations(range(g.n), len(s) - 1) if s else ():
        assert not _is_cluster(g, set(range(g.n)) - set(small))


def test_k20_shrinks_to_an_edge():
    g = Graph.complete(20)
    k = kernelize(g, decompose(g, frozenset()))
    assert k.graph == Graph.complete(2)
    v = decide_via_kernel(g)
    assert v.is_yes and verify_hist(g, v.witness)


def test_triangle_unchanged():
    k = kernelize(Graph.complete(3), decompose(Graph.complete(3), frozenset()))
    assert not k.shrunk


def test_two_twin_classes():
    # vertex 10 is S; clique 0..9 with class 0..5 joined to S and 6..9 not
    g = Graph(11, list(combinations(range(10), 2)) + [(10, v) for v in range(6)])
    d = decompose(g, {10})
    k = kernelize(g, d)
    sizes = sorted(len(m) for m in k.decomposition.twin_classes[0])
    assert sizes == [4, 4]


def test_net_kernel_decides_no():
    g = net_graph()
    s = minimum_cvd(g)
    assert s is not None and 0 < len(s) <= 3
    assert decide_via_kernel(g).is_no


def test_invalid_decomposition_rejected():
    g = Graph.path(3)
    bad = CvdDecomposition(frozenset(), (frozenset({0, 1, 2}),), ((frozenset({0, 1, 2}),),))
    with pytest.raises(InvalidDecomposition):
        bad.validate(g)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        decide_via_kernel(Graph.cycle(7), budget=1)


def hub_with_cliques(sizes):
    """A hub adjacent to everything plus disjoint cliques."""
    edges, nxt = [], 1
    for s in sizes:
        block = range(nxt, nxt + s)
        edges += list(combinations(block, 2)) + [(0, v) for v in block]
        nxt += s
    return Graph(nxt, edges)


@pytest.mark.parametrize("sizes", [(5,), (5, 5), (5, 1), (6, 2, 1)])
def test_hub_cliques_match_exact(sizes):
    g = hub_with_cliques(sizes)
    v = decide_via_kernel(g, decide=decide_exact)
    assert v.answer == decide_exact(g).answer


@st.composite
def planted(draw):
    """Cluster graph on ``V - S`` with large twin classes, plus random ``S`` edges."""
    rng = random.Random(draw(st.integers(0, 10**6)))
    s = rng.randint(0, 2)
    n = rng.randint(s + 3, 11)
    rest = list(range(s, n))
    cliques, i = [], 0
    while i < len(rest):
        size = rng.randint(1, len(rest) - i)
        cliques.append(rest[i : i + size])
        i += size
    edges = [e for c in cliques for e in combinations(c, 2)]
    for c in cliques:
        groups = rng.randint(1, 2)
        for gi in range(groups):
            nbrs = [x for x in range(s) if rng.random() < 0.6]
            for v in c[gi::groups]:
                edges += [(x, v) for x in nbrs]
    edges += [e for e in combinations(range(s), 2) if rng.random() < 0.5]
    g = Graph(n, edges)
    tree = [(rng.randrange(v), v) for v in range(1, n)]
    return g if nx.is_connected(to_nx(g)) else g.add_edges(tree)


@given(planted())
@settings(max_examples=80, deadline=None)
def test_kernel_preserves_answer_and_bound(g):
    s = minimum_cvd(g, 6)
    d = decompose(g, s)
    k = kernelize(g, d)
    assert decide_exact(g).answer == decide_exact(k.graph).answer
    biggest = max((len(c) for c in k.decomposition.cliques), default=0)
    assert biggest + len(s) <= kernel_clique_bound(len(s))
    again = kernelize(k.graph, k.decomposition)
    assert not again.shrunk and again.graph == k.graph
    v = decide_via_kernel(g, s=s, decide=decide_exact)
    if v.is_yes:
        assert verify_hist(g, v.witness)
