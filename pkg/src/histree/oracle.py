"""Brute-force ground truth for small graphs.

Spanning trees are enumerated by the classic include/exclude recursion
over the sorted edge list: an edge is included unless it closes a cycle
and excluded only if the remaining edges still connect the graph.  The
only pruning is the HIST-specific one: a branch dies once some vertex is
certain to end with tree degree exactly 2.
"""

from __future__ import annotations

import numba
import numpy as np

from .errors import Disconnected, TooLarge
from .graph import Graph, TreeWitness, is_connected
from .verdict import Verdict

DEFAULT_MAX_N = 10


class _Search:
    def __init__(self, g: Graph, target_edges: int, need_spanning: bool, prune: bool):
        self.g = g
        self.n = g.n
        self.edges = g.edges()
        self.target = target_edges
        self.need_spanning = need_spanning
        self.prune = prune
        self.deg = [0] * g.n
        self.rem = [g.degree(v) for v in range(g.n)]
        self.chosen: list[tuple[int, int]] = []
        self.excluded = [False] * len(self.edges)
        self.incident: list[list[int]] = [[] for _ in range(g.n)]
        for e, (u, v) in enumerate(self.edges):
            self.incident[u].append(e)
            self.incident[v].append(e)

    def _root(self, parent: list[int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def _still_connected(self, i: int) -> bool:
        """Would the graph stay connected with edge ``i`` excluded?"""
        parent = list(range(self.n))
        comps = self.n
        for e, (u, v) in enumerate(self.edges):
            if e == i or self.excluded[e]:
                continue
            ru, rv = self._root(parent, u), self._root(parent, v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def _doomed(self, v: int, parent: list[int] | None = None, nxt: int = 0) -> bool:
        """Is ``v`` certain to end with tree degree 2?

        With ``parent`` given, only undecided edges (index >= ``nxt``)
        leading to another component count as usable.
        """
        if self.deg[v] != 2:
            return False
        if self.rem[v] == 0 or parent is None:
            return self.rem[v] == 0
        rv = self._root(parent, v)
        for e in self.incident[v]:
            if e >= nxt:
                a, b = self.edges[e]
                if self._root(parent, b if a == v else a) != rv:
                    return False
        return True

    def run(self, parent: list[int], i: int):
        """Yield every accepted edge set; ``parent`` is the forest's union-find."""
        if len(self.chosen) == self.target:
            if 2 not in self.deg:
                yield list(self.chosen)
            elif not self.prune:
                yield list(self.chosen)
            return
        if i == len(self.edges):
            return
        if len(self.chosen) + (len(self.edges) - i) < self.target:
            return
        u, v = self.edges[i]
        self.rem[u] -= 1
        self.rem[v] -= 1
        ru, rv = self._root(parent, u), self._root(parent, v)
        if ru != rv:
            self.deg[u] += 1
            self.deg[v] += 1
            child = list(parent)
            child[ru] = rv
            if not (self.prune and (self._doomed(u, child, i + 1) or self._doomed(v, child, i + 1))):
                self.chosen.append((u, v))
                yield from self.run(child, i + 1)
                self.chosen.pop()
            self.deg[u] -= 1
            self.deg[v] -= 1
        self.excluded[i] = True
        if not (self.prune and (self._doomed(u, parent, i + 1) or self._doomed(v, parent, i + 1))):
            if ru == rv or not self.need_spanning or self._still_connected(i):
                yield from self.run(parent, i + 1)
        self.excluded[i] = False
        self.rem[u] += 1
        self.rem[v] += 1


def spanning_trees(g: Graph):
    """Yield every spanning tree of a connected graph as a sorted edge list."""
    if g.n == 0:
        return
    s = _Search(g, g.n - 1, need_spanning=True, prune=False)
    yield from s.run(list(range(g.n)), 0)


def count_spanning_trees(g: Graph) -> int:
    return sum(1 for _ in spanning_trees(g))


@numba.njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        x = parent[x]
    return x


@numba.njit(cache=True)
def _connected_without(n, eu, ev, excluded):
    parent = np.arange(n)
    comps = n
    for e in range(len(eu)):
        if excluded[e]:
            continue
        a = _find(parent, eu[e])
        b = _find(parent, ev[e])
        if a != b:
            parent[a] = b
            comps -= 1
            if comps == 1:
                return True
    return comps == 1


@numba.njit(cache=True)
def _doomed_nb(v, deg, rem, parent, eu, ev, inc_ptr, inc_idx, nxt):
    if deg[v] != 2:
        return False
    if rem[v] == 0:
        return True
    rv = _find(parent, v)
    for p in range(inc_ptr[v], inc_ptr[v + 1]):
        e = inc_idx[p]
        if e >= nxt:
            w = ev[e] if eu[e] == v else eu[e]
            if _find(parent, w) != rv:
                return False
    return True


@numba.njit(cache=True)
def _first_forest(n, eu, ev, inc_ptr, inc_idx, target, need_spanning):
    """Compiled twin of :class:`_Search` that stops at the first hit.

    Explicit stack over edge indices; stage 0 tries to include edge ``i``,
    stage 1 tries to exclude it, stage 2 undoes.  The union-find has no
    path compression so unions can be undone in LIFO order.
    """
    m = len(eu)
    deg = np.zeros(n, np.int64)
    rem = np.zeros(n, np.int64)
    for e in range(m):
        rem[eu[e]] += 1
        rem[ev[e]] += 1
    parent = np.arange(n)
    size = np.ones(n, np.int64)
    excluded = np.zeros(m, np.bool_)
    stage = np.zeros(m + 1, np.int64)
    merged = np.full(m + 1, -1, np.int64)  # root absorbed when edge i was included
    chosen = np.zeros(max(target, 1), np.int64)
    nchosen = 0
    i = 0
    while i >= 0:
        if stage[i] == 0:
            # entering node i
            if nchosen == target:
                ok = True
                for v in range(n):
                    if deg[v] == 2:
                        ok = False
                        break
                if ok:
                    return chosen[:nchosen].copy()
                i -= 1
                continue
            if i == m or nchosen + (m - i) < target:
                i -= 1
                continue
            u, v = eu[i], ev[i]
            rem[u] -= 1
            rem[v] -= 1
            stage[i] = 1
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                if size[ru] > size[rv]:
                    ru, rv = rv, ru
                parent[ru] = rv
                size[rv] += size[ru]
                deg[u] += 1
                deg[v] += 1
                merged[i] = ru
                if not (_doomed_nb(u, deg, rem, parent, eu, ev, inc_ptr, inc_idx, i + 1)
                        or _doomed_nb(v, deg, rem, parent, eu, ev, inc_ptr, inc_idx, i + 1)):
                    chosen[nchosen] = i
                    nchosen += 1
                    stage[i + 1] = 0
                    i += 1
                    continue
            continue
        if stage[i] == 1:
            u, v = eu[i], ev[i]
            r = merged[i]
            if r >= 0:
                if nchosen > 0 and chosen[nchosen - 1] == i:
                    nchosen -= 1
                root = parent[r]
                parent[r] = r
                size[root] -= size[r]
                deg[u] -= 1
                deg[v] -= 1
                merged[i] = -1
            stage[i] = 2
            excluded[i] = True
            same = _find(parent, u) == _find(parent, v)
            if not (_doomed_nb(u, deg, rem, parent, eu, ev, inc_ptr, inc_idx, i + 1)
                    or _doomed_nb(v, deg, rem, parent, eu, ev, inc_ptr, inc_idx, i + 1)):
                if same or not need_spanning or _connected_without(n, eu, ev, excluded):
                    stage[i + 1] = 0
                    i += 1
                    continue
            continue
        # stage 2: both branches done
        excluded[i] = False
        rem[eu[i]] += 1
        rem[ev[i]] += 1
        stage[i] = 0
        i -= 1
    return np.zeros(0, np.int64)


def _compiled_search(g: Graph, target: int, need_spanning: bool) -> list[tuple[int, int]] | None:
    edges = g.edges()
    m = len(edges)
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    inc = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(edges):
        inc[u].append(e)
        inc[v].append(e)
    inc_ptr = np.zeros(g.n + 1, dtype=np.int64)
    for v in range(g.n):
        inc_ptr[v + 1] = inc_ptr[v] + len(inc[v])
    inc_idx = np.array([e for lst in inc for e in lst], dtype=np.int64)
    if target == 0:
        return []
    if m < target:
        return None
    found = _first_forest(g.n, eu, ev, inc_ptr, inc_idx, target, need_spanning)
    if len(found) == 0:
        return None
    return [edges[e] for e in found]


def oracle_hist(g: Graph, max_n: int = DEFAULT_MAX_N, compiled: bool = True) -> Verdict:
    """YES with the first HIST in enumeration order, NO if none exists.

    ``compiled=False`` runs the pure-Python enumerator instead; both walk
    the same search tree.
    """
    if g.n > max_n:
        raise TooLarge(g.n, max_n)
    if not is_connected(g):
        raise Disconnected("a disconnected graph has no spanning tree")
    if g.n <= 2:
        return Verdict.yes("oracle", TreeWitness(g.n, g.edges()))
    if compiled:
        tree = _compiled_search(g, g.n - 1, True)
    else:
        s = _Search(g, g.n - 1, need_spanning=True, prune=True)
        tree = next(s.run(list(range(g.n)), 0), None)
    if tree is not None:
        return Verdict.yes("oracle", TreeWitness(g.n, tree))
    return Verdict.no("oracle", "SpanningTreeEnumeration", n=g.n, m=g.m)


def hisf(g: Graph, k: int, max_n: int = DEFAULT_MAX_N, compiled: bool = True) -> list[tuple[int, int]] | None:
    """A spanning forest with exactly ``k`` components and no degree-2 vertex."""
    if g.n > max_n:
        raise TooLarge(g.n, max_n)
    if not 1 <= k <= g.n:
        return None
    if compiled:
        return _compiled_search(g, g.n - k, False)
    s = _Search(g, g.n - k, need_spanning=False, prune=True)
    return next(s.run(list(range(g.n)), 0), None)


def oracle_hisf(g: Graph, k: int, max_n: int = DEFAULT_MAX_N) -> bool:
    return hisf(g, k, max_n) is not None


@numba.njit(cache=True)
def _hampath_table(n, masks, s):
    reach = np.zeros(1 << n, dtype=np.int64)
    reach[1 << s] = 1 << s
    for mask in range(1 << n):
        ends = reach[mask]
        if ends == 0:
            continue
        for v in range(n):
            if (ends >> v) & 1:
                free = masks[v] & ~mask
                w = 0
                while free:
                    if free & 1:
                        reach[mask | (1 << w)] |= 1 << w
                    free >>= 1
                    w += 1
    return reach


def hamiltonian_path(g: Graph, s: int, t: int, max_n: int = 20) -> list[int] | None:
    """An s-t Hamiltonian path via the (subset, endpoint) bitmask DP."""
    n = g.n
    if n > max_n:
        raise TooLarge(n, max_n)
    if n == 1:
        return [s] if s == t else None
    if s == t:
        return None
    masks = np.array(g.masks, dtype=np.int64)
    reach = _hampath_table(n, masks, s)
    full = (1 << n) - 1
    if not (reach[full] >> t) & 1:
        return None
    path = [t]
    mask, v = full, t
    while mask != 1 << s:
        prev_mask = mask & ~(1 << v)
        for u in g.adj[v]:
            if (prev_mask >> u) & 1 and (reach[prev_mask] >> u) & 1:
                path.append(u)
                mask, v = prev_mask, u
                break
        else:  # pragma: no cover - table guarantees a predecessor
            raise AssertionError("broken Hamiltonian path table")
    return path[::-1]
