"""Polynomial-time HIST deciders for special graph classes.

Every decider returns a :class:`Verdict`.  YES verdicts always carry a
witness that has been checked with :func:`verify_hist`; NO verdicts carry
a certificate naming the structural condition that rules a HIST out.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from . import construct
from .classes import (
    SplitPartition,
    dominating_maximal_cliques,
    is_block_split,
    is_chordal,
    split_partition,
)
from .errors import (
    Disconnected,
    DiameterTooLarge,
    IsBlockSplit,
    IsSplit,
    NotBlockSplit,
    NotChordal,
    NotSplit,
    WrongDiameter,
)
from .exact import decide_exact
from .graph import Graph, TreeWitness, diameter, is_connected, is_tree, verify_hist
from .verdict import Certificate, Verdict

log = logging.getLogger(__name__)

# graphs up to this order get their YES witness from the exact DP when
# no constructive route is available
DESK_N = 12


def _checked(g: Graph, method: str, witness: TreeWitness | None, certificate=None) -> Verdict | None:
    if witness is None or not verify_hist(g, witness):
        return None
    return Verdict.yes(method, witness, certificate)


def _exact_fallback(g: Graph, method: str, reason: str) -> Verdict:
    """Exact DP at desk scale, UNDECIDED above it."""
    if g.n <= DESK_N:
        log.debug("%s: falling back to the exact DP (%s)", method, reason)
        v = decide_exact(g)
        return Verdict(v.answer, method, v.witness, v.certificate)
    return Verdict.undecided(method, reason)


# ---------------------------------------------------------------------------
# trivial cases


def trivial_verdict(g: Graph) -> Verdict | None:
    """Settle empty, disconnected, one-vertex, tree and complete inputs."""
    n = g.n
    if n == 0:
        return Verdict.no("trivial", "EmptyGraph")
    if not is_connected(g):
        return Verdict.no("trivial", "Disconnected", n=n)
    if n == 1:
        return Verdict.yes("trivial", TreeWitness(1, []))
    if is_tree(g):
        twos = [v for v in range(n) if g.degree(v) == 2]
        if twos:
            return Verdict.no("trivial", "TreeWithDegreeTwo", vertices=twos)
        return Verdict.yes("trivial", TreeWitness(n, g.edges()))
    if g.m == n * (n - 1) // 2:
        if n == 3:
            return Verdict.no("trivial", "CompleteOrderThree")
        return Verdict.yes("trivial", TreeWitness(n, [(0, v) for v in range(1, n)]))
    return None


# ---------------------------------------------------------------------------
# block-split graphs


def count_good(g: Graph, p: SplitPartition) -> int:
    if not is_block_split(g, p):
        raise NotBlockSplit("some independent vertex has degree >= 2")
    size = len(p.clique)
    return sum(1 for u in p.clique if g.degree(u) != size)


def decide_block_split(g: Graph, p: SplitPartition | None = None) -> Verdict:
    if p is None:
        p = split_partition(g)
        if p is None:
            raise NotSplit("graph has no split partition")
    if not is_block_split(g, p):
        raise NotBlockSplit("some independent vertex has degree >= 2")
    if not is_connected(g):
        raise Disconnected("a disconnected graph has no spanning tree")
    early = trivial_verdict(g)
    if early is not None:
        return early.with_method("blocksplit")
    size = len(p.clique)
    good = sorted(u for u in p.clique if g.degree(u) != size)
    if len(good) < 2:
        return Verdict.no("blocksplit", "BlockSplitFewGood", good=good, clique=p.clique)
    w = construct.block_split_tree(g, p.clique, p.independent)
    v = _checked(g, "blocksplit", w)
    assert v is not None, "block-split construction produced an invalid tree"
    return v


# ---------------------------------------------------------------------------
# split graphs


@dataclass(frozen=True)
class SplitCertificate:
    kind: str  # "Condition1" or "Condition2"
    U: frozenset[int] = frozenset()
    v_star: int | None = None

    def to_certificate(self, p: SplitPartition) -> Certificate:
        params: dict = {"clique": p.clique, "independent": p.independent}
        if self.kind == "Condition2":
            params.update(U=self.U, v_star=self.v_star)
        return Certificate("Split" + self.kind, params)


def split_conditions(g: Graph, p: SplitPartition) -> SplitCertificate | None:
    """The NO conditions for split graphs that are not block-split."""
    c, i = p.clique, p.independent
    ni = {u: g.adj[u] & i for u in c}
    if all(len(ni[u]) == 1 for u in c) and len(c) - len(i) == 1:
        return SplitCertificate("Condition1")
    U = frozenset(u for u in c if len(ni[u]) == 2)
    if not all(len(ni[u]) in (1, 2) for u in c) or len(U) < 2:
        return None
    if len({ni[u] for u in U}) != len(U):
        return None
    for u in c - U:
        (w,) = ni[u]
        if g.degree(w) != 1:
            return None
    common = frozenset.intersection(*(ni[u] for u in U))
    if len(common) != 1:
        return None
    return SplitCertificate("Condition2", U, next(iter(common)))


def _split_recipe(g: Graph, c: frozenset[int], i: frozenset[int]):
    """Edge-deletion recipe as ``(case, forced, avoid)``.

    ``forced`` fixes the clique neighbour kept by some independent
    vertices; ``avoid`` lists clique vertices meant to keep no pendant.
    """
    ni = {u: g.adj[u] & i for u in c}
    size = {u: len(ni[u]) for u in c}
    order = sorted(c)
    non_pendant = [w for w in sorted(i) if g.degree(w) >= 2]

    def keep(u):
        return {w: u for w in ni[u]}

    zero = [u for u in order if size[u] == 0]
    if zero:
        u = zero[0]
        others = [v for v in order if v != u and size[v] != 1]
        if others:
            v = others[0]
            if size[v] == 0:
                return "A(a)", {}, {u, v}
            return "A(a)", keep(v), {u}
        w = non_pendant[0]
        c1, c2 = sorted(g.adj[w])[:2]
        return "A(b)", {w: c1}, {u, c2}
    if max(size.values()) >= 3:
        ustar = max(order, key=lambda u: size[u])
        a = ni[ustar]
        vs = [v for v in order if v != ustar and size[v] >= 2]
        if vs:
            v = vs[0]
            b = ni[v]
            if not a & b:
                return "A(c-1)", {**keep(ustar), **keep(v)}, set()
            if b <= a:
                return "A(c-2)", keep(ustar), {v}
            if len(a & b) == 1:
                return "A(c-3)", {**{w: ustar for w in a - b}, **keep(v)}, set()
            common = sorted(a & b)
            forced = {w: ustar for w in a - b}
            forced.update({w: v for w in b - a})
            forced[common[1]] = v
            forced.update({w: ustar for w in common if w != common[1]})
            return "A(c-4)", forced, set()
        # every other clique vertex has exactly one independent neighbour
        w = non_pendant[0]
        if w in a:
            cand = sorted(g.adj[w] - {ustar})[0]
            return "A(d)", keep(ustar), {cand}
        c1, c2 = sorted(g.adj[w])[:2]
        return "A(d)", {**keep(ustar), w: c2}, {c1}
    U = [u for u in order if size[u] == 2]
    if not U:
        return "B(U=0)", {w: min(g.adj[w]) for w in sorted(i)}, set()
    for u1, u2 in combinations(U, 2):
        if ni[u1] == ni[u2]:
            return "B(ii)", keep(u1), {u2}
    rest = [u for u in order if size[u] == 1]
    for u in U:
        for v in rest:
            if ni[v] <= ni[u]:
                return "B(iii)", keep(u), {v}
    for v in rest:
        (w,) = ni[v]
        if g.degree(w) >= 2:
            u = U[0]
            forced = keep(u)
            if w not in forced:
                forced[w] = sorted(g.adj[w] - {v})[0]
            return "B(2c)", forced, {v}
    if len(U) == 1:
        u = U[0]
        w = non_pendant[0]
        if u in g.adj[w]:
            cand = sorted(g.adj[w] - {u})[0]
            return "B(i)", keep(u), {cand}
        c1, c2 = sorted(g.adj[w])[:2]
        return "B(i)", {**keep(u), w: c1}, {c2}
    for u1, u2 in combinations(U, 2):
        if not ni[u1] & ni[u2]:
            return "B(iv)", {**keep(u1), **keep(u2)}, set()
    for ustar in U:
        v1, v2 = sorted(ni[ustar])
        for u1 in U:
            if u1 == ustar or v1 not in ni[u1]:
                continue
            for u2 in U:
                if u2 in (ustar, u1) or v2 not in ni[u2]:
                    continue
                shared = ni[u1] & ni[u2]
                if shared:
                    v3 = min(shared)
                    return "B(iv)", {v1: ustar, v2: ustar, v3: u2}, {u1}
    return None


def split_hist(g: Graph, c: frozenset[int], i: frozenset[int]) -> tuple[TreeWitness, str] | None:
    """A HIST through a block-split spanning subgraph, with the route used."""
    if all(g.degree(w) <= 1 for w in i):
        w = construct.block_split_tree(g, c, i)
        return (w, "block-split") if w is not None and verify_hist(g, w) else None
    recipe = _split_recipe(g, c, i) if c else None
    if recipe is not None:
        case, forced, avoid = recipe
        assign = construct.complete_assignment(g, i, forced, frozenset(avoid))
        claimed_ok = all(v not in assign.values() for v in avoid)
        if claimed_ok and construct.good_count(assign, c) >= 2:
            h = construct.assignment_subgraph(g, c, assign)
            w = construct.block_split_tree(h, c, i)
            if w is not None and verify_hist(g, w):
                return w, case
        log.debug("split recipe %s did not validate", case)
    assign = construct.flow_assignment(g, c, i)
    if assign is not None:
        h = construct.assignment_subgraph(g, c, assign)
        w = construct.block_split_tree(h, c, i)
        if w is not None and verify_hist(g, w):
            return w, "flow"
    return None


def decide_split(g: Graph, p: SplitPartition | None = None) -> Verdict:
    if p is None:
        p = split_partition(g)
        if p is None:
            raise NotSplit("graph has no split partition")
    elif not p.is_valid(g):
        raise NotSplit("partition is not a valid split partition")
    if is_block_split(g, p):
        raise IsBlockSplit("graph is block-split; use decide_block_split")
    if not is_connected(g):
        raise Disconnected("a disconnected graph has no spanning tree")
    cert = split_conditions(g, p)
    if cert is not None:
        c = cert.to_certificate(p)
        return Verdict.no("split", c.kind, **c.params)
    found = split_hist(g, p.clique, p.independent)
    if found is not None:
        w, route = found
        return Verdict.yes("split", w, Certificate("Construction", {"route": route}))
    return _exact_fallback(g, "split", "split construction failed")


# ---------------------------------------------------------------------------
# chordal graphs of diameter three


def chordal_d3_conditions(g: Graph, c: frozenset[int]) -> Certificate | None:
    """NO conditions for a non-split chordal diameter-3 graph and dominating clique ``c``."""
    cbar = frozenset(range(g.n)) - c
    nb = {u: g.adj[u] & cbar for u in c}
    size = {u: len(nb[u]) for u in c}

    def pendant_single(u):
        return size[u] == 1 and all(g.degree(w) == 1 for w in nb[u])

    for ustar in sorted(c):
        if size[ustar] >= 3 and all(pendant_single(u) for u in c if u != ustar):
            return Certificate("ChordalD3Condition1", {"clique": c, "u_star": ustar})
    if not all(size[u] in (1, 2) for u in c):
        return None
    U = frozenset(u for u in c if size[u] == 2)
    if not all(g.degree(w) == 1 for u in c - U for w in nb[u]):
        return None
    params = {"clique": c, "U": U}
    if len(U) == 1:
        return Certificate("ChordalD3Condition2", {**params, "case": "a"})
    if not U:
        return None
    common = frozenset.intersection(*(nb[u] for u in U))
    if len(U) == 2 and len(common) == 1:
        return Certificate("ChordalD3Condition2", {**params, "case": "b", "v_star": min(common)})
    if len(U) >= 3 and len({nb[u] for u in U}) == len(U) and len(common) == 1:
        inner = sum(1 for a, b in g.edges() if a in cbar and b in cbar)
        if inner == 1:
            return Certificate("ChordalD3Condition2", {**params, "case": "c", "v_star": min(common)})
    return None


def _chordal_d3_construct(g: Graph, c: frozenset[int]) -> tuple[TreeWitness, str] | None:
    """Proof-guided attempts at a HIST; every candidate is verified."""
    cbar = frozenset(range(g.n)) - c
    inner = [(a, b) for a, b in g.edges() if a in cbar and b in cbar]
    g0 = g.remove_edges(inner)
    attempts: list[tuple[str, Graph]] = [("drop-inner", g0)]
    nb = {u: g.adj[u] & cbar for u in c}
    for u in sorted(c):
        if len(nb[u]) == 1:
            (v,) = nb[u]
            if g.degree(v) >= 2:
                attempts.append(("drop-pendant-edge", g0.remove_edges([(u, v)])))
    U = [u for u in sorted(c) if len(nb[u]) == 2]
    for u in sorted(c):
        if u in U:
            continue
        for vstar in sorted(nb[u]):
            nc = sorted(g0.adj[vstar] & c)
            if len(nc) >= 2:
                for kept in nc:
                    attempts.append(("keep-one", g0.remove_edges([(vstar, x) for x in nc if x != kept])))
    for route, h in attempts:
        if not is_connected(h):
            continue
        found = split_hist(h, c, cbar)
        if found is not None and verify_hist(g, found[0]):
            return found[0], route
    # rewiring: hang two inner neighbours v1, v2 of a hub v* on v*
    inner_adj = {v: g.adj[v] & cbar for v in cbar}
    for vstar in sorted(cbar):
        for v1, v2 in combinations(sorted(inner_adj[vstar]), 2):
            keep = [x for x in range(g.n) if x not in (v1, v2)]
            sub, ids = g0.induced(keep)
            back = {new: old for new, old in enumerate(ids)}
            fwd = {old: new for new, old in enumerate(ids)}
            for ui in (set(g.adj[v1]) | set(g.adj[v2])) & c:
                if vstar in g.adj[ui] and len(nb[ui]) == 2:
                    sub = sub.remove_edges([(fwd[ui], fwd[vstar])])
            if not is_connected(sub):
                continue
            found = split_hist(sub, frozenset(fwd[x] for x in c), frozenset(fwd[x] for x in cbar - {v1, v2}))
            if found is None:
                continue
            edges = [(back[a], back[b]) for a, b in found[0].edges] + [(v1, vstar), (v2, vstar)]
            w = TreeWitness(g.n, edges)
            if verify_hist(g, w):
                return w, "rewire"
    return None


def decide_chordal_d3(g: Graph) -> Verdict:
    if not is_connected(g):
        raise Disconnected("a disconnected graph has no spanning tree")
    if not is_chordal(g):
        raise NotChordal("graph has a chordless cycle of length >= 4")
    d = diameter(g)
    if d != 3:
        raise WrongDiameter(f"diameter is {d}, expected 3")
    if split_partition(g) is not None:
        raise IsSplit("graph is split; use decide_split")
    cliques = dominating_maximal_cliques(g)
    assert cliques, "chordal graph of diameter 3 without a dominating clique"
    results = [chordal_d3_conditions(g, c) for c in cliques]
    disagree = len({r is None for r in results}) > 1
    extra = Certificate("CliqueDisagreement", {"cliques": cliques}) if disagree else None
    if disagree:
        log.warning("dominating cliques disagree on the NO conditions: %s", cliques)
    order = [c for c, r in zip(cliques, results) if r is None]
    for c in order:
        found = _chordal_d3_construct(g, c)
        if found is not None:
            return Verdict.yes("chordal3", found[0], extra)
    if results[0] is not None:
        cert = results[0]
        params = dict(cert.params)
        if disagree:
            params["disagreement"] = True
        return Verdict.no("chordal3", cert.kind, **params)
    return _exact_fallback(g, "chordal3", "chordal diameter-3 construction failed")


# ---------------------------------------------------------------------------
# diameter at most two


@dataclass(frozen=True)
class AFamilyParams:
    k: int
    p: tuple[int, ...]
    x: int
    y: tuple[int, ...]
    U: tuple[frozenset[int], ...] = field(default=())

    def to_params(self) -> dict:
        return {"family": "A", "k": self.k, "p": list(self.p), "x": self.x, "y": list(self.y), "U": list(self.U)}


def _confirm_a(g: Graph, x: int, ys: list[int], us: list[frozenset[int]]) -> AFamilyParams | None:
    if not ys or any(not part for part in us):
        return None
    covered = {x, *ys}.union(*us)
    if len(covered) != g.n or 1 + len(ys) + sum(map(len, us)) != g.n:
        return None
    edges = set()
    for y, part in zip(ys, us):
        for u in part:
            edges.add(frozenset((x, u)))
            edges.add(frozenset((y, u)))
    for a, b in combinations(ys, 2):
        edges.add(frozenset((a, b)))
    if edges != {frozenset(e) for e in g.edges()}:
        return None
    order = sorted(range(len(ys)), key=lambda i: (len(us[i]), ys[i]))
    return AFamilyParams(
        len(ys),
        tuple(len(us[i]) for i in order),
        x,
        tuple(ys[i] for i in order),
        tuple(us[i] for i in order),
    )


def _a_from_hub(g: Graph, x: int) -> AFamilyParams | None:
    u_all = g.adj[x]
    ys = sorted(set(range(g.n)) - u_all - {x})
    us = [frozenset(g.adj[y] & u_all) for y in ys]
    return _confirm_a(g, x, ys, us)


def match_a_family(g: Graph) -> AFamilyParams | None:
    """Recognise ``A(p_1..p_k)`` and recover its parameters."""
    n = g.n
    if n < 3:
        return None
    twos = frozenset(v for v in range(n) if g.degree(v) == 2)
    if twos and g.is_independent(twos):
        hubs = [x for x in range(n) if g.adj[x] == twos]
        if len(hubs) == 1:
            found = _a_from_hub(g, hubs[0])
            if found is not None:
                return found
    # k = 1 (hub and y both adjacent to all of U) and k = 2 with a
    # singleton class: the hub then has degree n - 2 or n - 3
    for x in range(n):
        if g.degree(x) in (n - 2, n - 3) and g.is_independent(g.adj[x]):
            found = _a_from_hub(g, x)
            if found is not None:
                return found
    return None


def match_b_family(g: Graph) -> tuple[int, int] | None:
    """The extra edge ``(u1, u2)`` if ``g`` is ``B_n``, else None."""
    if g.n < 6:
        return None
    for a, b in g.edges():
        if g.degree(a) != 3 or g.degree(b) != 3:
            continue
        if g.adj[a] - {b} != g.adj[b] - {a}:
            continue
        params = match_a_family(g.remove_edges([(a, b)]))
        if params is None or params.k != 2:
            continue
        for part, size in zip(params.U, params.p):
            if {a, b} <= part and size == 2 and sum(params.p) - 2 == g.n - 5:
                return a, b
    return None


def decide_diameter2(g: Graph, seed: int = 0) -> Verdict:
    if not is_connected(g):
        raise Disconnected("a disconnected graph has no spanning tree")
    d = diameter(g)
    if d > 2:
        raise DiameterTooLarge(f"diameter is {d}, expected at most 2")
    if g.n <= 9:
        v = decide_exact(g)
        return Verdict(v.answer, "diam2", v.witness, v.certificate)
    params = match_a_family(g)
    if params is not None:
        return Verdict.no("diam2", "DiameterTwoFamily", **params.to_params())
    extra = match_b_family(g)
    if extra is not None:
        return Verdict.no("diam2", "DiameterTwoFamily", family="B", n=g.n, extra_edge=list(extra))
    if g.n <= DESK_N:
        v = decide_exact(g)
        assert v.is_yes, "diameter-2 graph outside the exceptional families has no HIST"
        return Verdict.yes("diam2", v.witness)
    w = construct.greedy_hist(g, seed=seed)
    if w is not None and verify_hist(g, w):
        return Verdict.yes("diam2", w)
    return Verdict.undecided(
        "diam2",
        "a HIST exists but local search found none",
        Certificate("HistExists", {"family_checked": True}),
    )
