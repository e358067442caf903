"""Constructive helpers shared by the polynomial deciders.

* :func:`block_split_tree` builds a HIST of a block-split graph with at
  least two good vertices.
* :func:`split_assignment` picks, for every independent vertex of a split
  graph, one clique neighbour to keep, so that the resulting block-split
  spanning subgraph has two good vertices.
* :func:`greedy_hist` is a local search used where no constructive proof
  is available.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from .flow import BoundedFlow
from .graph import Graph, TreeWitness, is_tree


def _tree_is_hist(g: Graph) -> bool:
    return all(g.degree(v) != 2 for v in range(g.n))


def block_split_tree(h: Graph, clique: frozenset[int], indep: frozenset[int]) -> TreeWitness | None:
    """HIST of a block-split graph, or None when there are fewer than two good vertices."""
    if is_tree(h):
        return TreeWitness(h.n, h.edges()) if _tree_is_hist(h) else None
    size = len(clique)
    if size == 3 and not indep:
        return None  # K3
    order = sorted(clique)
    good = [u for u in order if h.degree(u) != size]
    bad = [u for u in order if h.degree(u) == size]
    if len(good) < 2:
        return None
    edges = [(w, next(iter(h.adj[w]))) for w in sorted(indep)]
    if not bad:
        if size == 3:
            root = next(u for u in order if len(h.adj[u] & indep) >= 2)
        else:
            root = order[0]
        edges += [(root, u) for u in order if u != root]
    else:
        path = [good[0], *bad, good[1]]
        root = path[1]
        edges += list(zip(path, path[1:]))
        edges += [(root, u) for u in good[2:]]
    return TreeWitness(h.n, edges)


def good_count(assign: dict[int, int], clique) -> int:
    load = {c: 0 for c in clique}
    for c in assign.values():
        load[c] += 1
    return sum(1 for c in clique if load[c] != 1)


def assignment_subgraph(g: Graph, clique, assign: dict[int, int]) -> Graph:
    cl = sorted(clique)
    edges = list(combinations(cl, 2)) + list(assign.items())
    return Graph(g.n, edges)


def complete_assignment(
    g: Graph,
    indep,
    forced: dict[int, int],
    avoid=frozenset(),
) -> dict[int, int]:
    """Extend ``forced`` to every independent vertex, steering clear of ``avoid``."""
    assign = dict(forced)
    for w in sorted(indep):
        if w in assign:
            continue
        options = sorted(g.adj[w] - avoid) or sorted(g.adj[w])
        assign[w] = options[0]
    return assign


def flow_assignment(g: Graph, clique, indep) -> dict[int, int] | None:
    """Search for an assignment with two good clique vertices by flow.

    For every pair ``a < b`` of clique vertices and every choice of target
    (no pendant, or at least two) for each, a bounded flow decides whether
    the independent vertices can be distributed accordingly.
    """
    cl = sorted(clique)
    iv = sorted(indep)
    if len(cl) < 3:
        return None
    cidx = {c: i for i, c in enumerate(cl)}
    src, snk = 0, 1
    base = 2 + len(iv)
    for a, b in combinations(cl, 2):
        for ta in (0, 2):
            for tb in (0, 2):
                net = BoundedFlow(base + len(cl), src, snk)
                arcs = []
                for i, w in enumerate(iv):
                    net.add(src, 2 + i, 1, 1)
                    for c in sorted(g.adj[w]):
                        arcs.append((w, c, net.add(2 + i, base + cidx[c], 0, 1)))
                for c in cl:
                    t = ta if c == a else tb if c == b else None
                    if t is None:
                        net.add(base + cidx[c], snk)
                    elif t == 0:
                        net.add(base + cidx[c], snk, 0, 0)
                    else:
                        net.add(base + cidx[c], snk, 2)
                flows = net.feasible()
                if flows is not None:
                    return {w: c for w, c, k in arcs if flows[k] == 1}
    return None


# ---------------------------------------------------------------------------
# local search


class _Tree:
    def __init__(self, n: int, edges):
        self.n = n
        self.adj = [set() for _ in range(n)]
        for u, v in edges:
            self.adj[u].add(v)
            self.adj[v].add(u)

    def deg2(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) == 2]

    def path(self, a: int, b: int) -> list[int]:
        prev = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y in self.adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        out = [b]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return out[::-1]

    def side(self, a: int, b: int) -> set[int]:
        """Vertices on ``b``'s side once edge ``ab`` is cut."""
        seen = {b}
        stack = [b]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in seen and not (x == b and y == a):
                    seen.add(y)
                    stack.append(y)
        return seen

    def delta(self, drop: tuple[int, int], add: tuple[int, int]) -> int:
        change: dict[int, int] = {}
        for v in drop:
            change[v] = change.get(v, 0) - 1
        for v in add:
            change[v] = change.get(v, 0) + 1
        out = 0
        for v, c in change.items():
            before = len(self.adj[v])
            out += (before + c == 2) - (before == 2)
        return out

    def swap(self, drop, add):
        self.adj[drop[0]].discard(drop[1])
        self.adj[drop[1]].discard(drop[0])
        self.adj[add[0]].add(add[1])
        self.adj[add[1]].add(add[0])

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]


def _leafy_tree(g: Graph, rng: random.Random) -> list[tuple[int, int]]:
    n = g.n
    root = max(range(n), key=lambda v: (g.degree(v), rng.random()))
    inside = {root}
    edges = []
    while len(inside) < n:
        best, gain = None, 0
        for x in inside:
            k = len(g.adj[x] - inside)
            if k > gain or (k == gain and k and rng.random() < 0.5):
                best, gain = x, k
        for y in sorted(g.adj[best] - inside):
            edges.append((best, y))
            inside.add(y)
    return edges


def _improve(g: Graph, t: _Tree) -> bool:
    for v in t.deg2():
        # add an edge at v and cut the cycle it closes
        for w in sorted(g.adj[v] - t.adj[v]):
            p = t.path(v, w)
            for a, b in zip(p, p[1:]):
                if t.delta((a, b), (v, w)) < 0:
                    t.swap((a, b), (v, w))
                    return True
        # cut an edge at v and reconnect the two halves elsewhere
        for u in sorted(t.adj[v]):
            part = t.side(v, u)
            for x in sorted(part):
                for y in sorted(g.adj[x] - part):
                    if (x, y) in ((u, v),):
                        continue
                    if t.delta((v, u), (x, y)) < 0:
                        t.swap((v, u), (x, y))
                        return True
    return False


def greedy_hist(g: Graph, seed: int = 0, restarts: int = 8, max_steps: int | None = None) -> TreeWitness | None:
    """Grow a leafy spanning tree, then swap edges to remove degree-2 vertices.

    Every accepted swap strictly lowers the number of degree-2 vertices, so
    each restart terminates.  Returns None if no restart succeeds.
    """
    if g.n <= 2:
        return TreeWitness(g.n, g.edges())
    rng = random.Random(seed)
    limit = max_steps or 4 * g.n
    for _ in range(restarts):
        t = _Tree(g.n, _leafy_tree(g, rng))
        steps = 0
        while t.deg2() and steps < limit and _improve(g, t):
            steps += 1
        if not t.deg2():
            return TreeWitness(g.n, t.edges())
    return None
