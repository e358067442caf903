import networkx as nx
import pytest
from conftest import net_graph
from hypothesis import assume, given, settings, strategies as st

from histree.certificates import check_certificate
from histree.classes import is_block_split, is_chordal, split_partition
from histree.errors import DiameterTooLarge, IsBlockSplit, IsSplit, NotBlockSplit, NotSplit, WrongDiameter
from histree.generators import gen_A, gen_B, gen_random
from histree.graph import Graph, diameter, verify_hist
from histree.oracle import oracle_hist
from histree.poly import (
    count_good,
    decide_block_split,
    decide_chordal_d3,
    decide_diameter2,
    decide_split,
    match_a_family,
    match_b_family,
    trivial_verdict,
)


def _clique_edges(vs):
    vs = list(vs)
    return [(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]]


def k3_two_pendants():
    return Graph(5, _clique_edges(range(3)) + [(0, 3), (0, 4)])


def k4_one_pendant_each():
    return Graph(8, _clique_edges(range(4)) + [(i, i + 4) for i in range(4)])


# ---------------------------------------------------------------------------
# trivial and block-split


def test_trivial_cases():
    assert trivial_verdict(Graph(0)).certificate.kind == "EmptyGraph"
    assert trivial_verdict(Graph(3, [(0, 1)])).certificate.kind == "Disconnected"
    assert trivial_verdict(Graph.path(4)).certificate.kind == "TreeWithDegreeTwo"
    assert trivial_verdict(Graph.star(3)).is_yes
    assert trivial_verdict(Graph.complete(3)).certificate.kind == "CompleteOrderThree"
    assert trivial_verdict(Graph.complete(5)).is_yes
    assert trivial_verdict(Graph.cycle(5)) is None


def test_count_good_examples():
    assert count_good(k3_two_pendants(), split_partition(k3_two_pendants())) == 3
    g = k4_one_pendant_each()
    assert count_good(g, split_partition(g)) == 0
    k4 = Graph.complete(4)
    assert count_good(k4, split_partition(k4)) == 4


def test_count_good_requires_block_split():
    g = Graph(4, _clique_edges(range(3)) + [(0, 3), (1, 3)])
    with pytest.raises(NotBlockSplit):
        count_good(g, split_partition(g))


def test_block_split_examples():
    v = decide_block_split(k3_two_pendants())
    assert v.is_yes and verify_hist(k3_two_pendants(), v.witness)
    for g in (k4_one_pendant_each(), net_graph()):
        v = decide_block_split(g)
        assert v.is_no and v.certificate.kind == "BlockSplitFewGood"
        assert check_certificate(g, v.certificate)


def test_block_split_preconditions():
    with pytest.raises(NotSplit):
        decide_block_split(Graph.cycle(5))
    with pytest.raises(NotBlockSplit):
        decide_block_split(Graph(4, _clique_edges(range(3)) + [(0, 3), (1, 3)]))


# ---------------------------------------------------------------------------
# split


def split_condition1():
    return Graph(5, _clique_edges(range(3)) + [(0, 3), (1, 3), (2, 4)])


def split_condition2():
    return Graph(7, _clique_edges(range(3)) + [(0, 3), (0, 4), (1, 3), (1, 5), (2, 6)])


def test_split_condition_examples():
    for g, kind in ((split_condition1(), "SplitCondition1"), (split_condition2(), "SplitCondition2")):
        v = decide_split(g)
        assert v.is_no and v.certificate.kind == kind
        assert check_certificate(g, v.certificate)
        assert oracle_hist(g).is_no


def test_split_yes_example():
    g = Graph(5, _clique_edges(range(3)) + [(0, 3), (0, 4), (1, 3)])
    v = decide_split(g)
    assert v.is_yes and verify_hist(g, v.witness)


def test_split_preconditions():
    with pytest.raises(IsBlockSplit):
        decide_split(net_graph())
    with pytest.raises(NotSplit):
        decide_split(Graph.cycle(4))


# ---------------------------------------------------------------------------
# chordal diameter three


def chordal_condition1(extra_pendant=False):
    edges = _clique_edges(range(3)) + [(0, 3), (0, 4), (0, 5), (3, 4), (1, 6), (2, 7)]
    n = 8
    if extra_pendant:
        edges.append((1, 8))
        n = 9
    return Graph(n, edges)


def chordal_condition2c():
    edges = _clique_edges(range(4)) + [(0, 4), (1, 4), (2, 4), (0, 5), (1, 6), (2, 7), (3, 8), (4, 5)]
    return Graph(9, edges)


@pytest.mark.parametrize("build, kind", [(chordal_condition1, "ChordalD3Condition1"), (chordal_condition2c, "ChordalD3Condition2")])
def test_chordal_no_examples(build, kind):
    g = build()
    assert is_chordal(g) and diameter(g) == 3 and split_partition(g) is None
    v = decide_chordal_d3(g)
    assert v.is_no and v.certificate.kind == kind
    assert check_certificate(g, v.certificate)
    assert oracle_hist(g).is_no


def test_chordal_condition2c_case():
    assert decide_chordal_d3(chordal_condition2c()).certificate.params["case"] == "c"


def test_chordal_yes_example():
    g = chordal_condition1(extra_pendant=True)
    v = decide_chordal_d3(g)
    assert v.is_yes and verify_hist(g, v.witness)
    assert oracle_hist(g).is_yes


def test_chordal_preconditions():
    with pytest.raises(IsSplit):
        decide_chordal_d3(Graph.path(4))
    with pytest.raises(WrongDiameter):
        decide_chordal_d3(Graph.path(6))


# ---------------------------------------------------------------------------
# diameter two


def test_a_family_example():
    g = gen_A([2, 5])
    v = decide_diameter2(g)
    assert v.is_no and v.certificate.params["family"] == "A"
    assert v.certificate.params["p"] == [2, 5]
    assert check_certificate(g, v.certificate)


def test_b_family_example():
    g = gen_B(10)
    v = decide_diameter2(g)
    assert v.is_no and v.certificate.params["family"] == "B"
    assert check_certificate(g, v.certificate)


def test_petersen_has_hist():
    pet = nx.petersen_graph()
    g = Graph(10, pet.edges())
    v = decide_diameter2(g)
    assert v.is_yes and verify_hist(g, v.witness)


def test_diameter2_precondition():
    with pytest.raises(DiameterTooLarge):
        decide_diameter2(Graph.path(5))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5), st.permutations(range(26)))
@settings(max_examples=100, deadline=None)
def test_a_family_recognised_under_relabelling(p, perm):
    g = gen_A(p)
    h = g.relabel([x for x in perm if x < g.n])
    params = match_a_family(h)
    assert params is not None and sorted(params.p) == sorted(p)


@given(st.integers(6, 14), st.permutations(range(14)))
@settings(max_examples=50, deadline=None)
def test_b_family_recognised_under_relabelling(n, perm):
    h = gen_B(n).relabel([x for x in perm if x < n])
    assert match_b_family(h) is not None


# ---------------------------------------------------------------------------
# agreement with the oracle


def _check(g, v):
    o = oracle_hist(g)
    assert v.answer == o.answer
    if v.is_yes:
        assert verify_hist(g, v.witness)
    else:
        assert check_certificate(g, v.certificate) is not False


@given(st.integers(0, 10**6), st.integers(2, 10))
@settings(max_examples=150, deadline=None)
def test_block_split_matches_oracle(seed, n):
    g = gen_random("block_split", n, 0.5, seed)
    _check(g, decide_block_split(g))


@given(st.integers(0, 10**6), st.integers(3, 10), st.floats(0.1, 0.9))
@settings(max_examples=150, deadline=None)
def test_split_matches_oracle(seed, n, density):
    g = gen_random("split", n, density, seed)
    p = split_partition(g)
    assume(not is_block_split(g, p))
    _check(g, decide_split(g, p))


@given(st.integers(0, 10**6), st.integers(5, 10), st.floats(0.1, 0.9))
@settings(max_examples=150, deadline=None)
def test_chordal_d3_matches_oracle(seed, n, density):
    g = gen_random("chordal", n, density, seed)
    assume(diameter(g) == 3 and split_partition(g) is None)
    _check(g, decide_chordal_d3(g))


@given(st.integers(0, 10**6), st.integers(3, 10), st.floats(0.3, 0.95))
@settings(max_examples=150, deadline=None)
def test_diameter2_matches_oracle(seed, n, density):
    g = gen_random("any", n, density, seed)
    assume(diameter(g) <= 2)
    _check(g, decide_diameter2(g))


def _hisf_component_sizes(g):
    """Component-size profiles of every HISF of ``g`` (exhaustive)."""
    edges = g.edges()
    found = set()

    def rec(i, parent, deg):
        if i == len(edges):
            if 2 not in deg:
                roots = {}
                for v in range(g.n):
                    r = v
                    while parent[r] != r:
                        r = parent[r]
                    roots[r] = roots.get(r, 0) + 1
                found.add(tuple(sorted(roots.values())))
            return
        u, v = edges[i]
        ru, rv = u, v
        while parent[ru] != ru:
            ru = parent[ru]
        while parent[rv] != rv:
            rv = parent[rv]
        if ru != rv:
            p2 = list(parent)
            p2[ru] = rv
            d2 = list(deg)
            d2[u] += 1
            d2[v] += 1
            rec(i + 1, p2, d2)
        rec(i + 1, parent, deg)

    rec(0, list(range(g.n)), [0] * g.n)
    return found


def test_hisf_good_count_with_large_components():
    """Two good vertices per component once every component has >= 3 vertices.

    The statement without the size restriction fails already on the paw
    (triangle plus pendant) with two single-edge components.
    """
    from test_acceptance import _block_split_family

    checked = 0
    for g, p in _block_split_family(max_n=6):
        if g.m == g.n - 1 or (g.n == 3 and g.m == 3):
            continue
        good = count_good(g, p)
        for sizes in _hisf_component_sizes(g):
            if min(sizes) >= 3:
                checked += 1
                assert good >= 2 * len(sizes), (g, sizes)
    assert checked > 0
    paw = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    assert (2, 2) in _hisf_component_sizes(paw)
    assert count_good(paw, split_partition(paw)) == 2
