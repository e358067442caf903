"""Graph-class recognition: chordal, split, block-split and friends."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import InvalidPEO, NotBlockSplit, NotChordal
from .graph import Graph


@dataclass(frozen=True)
class PerfectEliminationOrder:
    order: tuple[int, ...]

    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


@dataclass(frozen=True)
class Hole:
    """A chordless cycle of length at least four."""

    cycle: tuple[int, ...]


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]

    def is_valid(self, g: Graph) -> bool:
        return (
            self.clique | self.independent == frozenset(range(g.n))
            and not self.clique & self.independent
            and g.is_clique(self.clique)
            and g.is_independent(self.independent)
        )


class Quality(str, Enum):
    GOOD = "GOOD"
    BAD = "BAD"


# ---------------------------------------------------------------------------
# chordal graphs


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS visiting order (partition refinement)."""
    if g.n == 0:
        return []
    # slices of unvisited vertices, highest label first
    slices: list[list[int]] = [list(range(g.n))]
    order = []
    while slices:
        v = slices[0].pop(0)
        if not slices[0]:
            slices.pop(0)
        order.append(v)
        refined = []
        for part in slices:
            inside = [w for w in part if w in g.adj[v]]
            outside = [w for w in part if w not in g.adj[v]]
            refined.extend(p for p in (inside, outside) if p)
        slices = refined
    return order


def _later_neighbours(g: Graph, order: tuple[int, ...]) -> list[list[int]]:
    pos = {v: i for i, v in enumerate(order)}
    return [sorted((w for w in g.adj[v] if pos[w] > pos[v]), key=pos.__getitem__) for v in order]


def is_peo(g: Graph, order: tuple[int, ...]) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    for later in _later_neighbours(g, order):
        if later:
            parent, rest = later[0], later[1:]
            if any(w not in g.adj[parent] for w in rest):
                return False
    return True


def find_hole(g: Graph) -> Hole | None:
    """Some chordless cycle of length >= 4, or None for chordal graphs."""
    for v in range(g.n):
        nb = sorted(g.adj[v])
        for a, b in combinations(nb, 2):
            if b in g.adj[a]:
                continue
            blocked = (g.adj[v] | {v}) - {a, b}
            prev = {a: None}
            queue = deque([a])
            while queue and b not in prev:
                x = queue.popleft()
                for y in sorted(g.adj[x]):
                    if y not in prev and y not in blocked:
                        prev[y] = x
                        queue.append(y)
            if b in prev:
                path = [b]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return Hole((v, *path))
    return None


def recognize_chordal(g: Graph) -> PerfectEliminationOrder | Hole:
    order = tuple(reversed(lex_bfs(g)))
    if is_peo(g, order):
        return PerfectEliminationOrder(order)
    hole = find_hole(g)
    assert hole is not None, "LexBFS rejected a graph without a hole"
    return hole


def is_chordal(g: Graph) -> bool:
    return isinstance(recognize_chordal(g), PerfectEliminationOrder)


def maximal_cliques_chordal(g: Graph, peo: PerfectEliminationOrder) -> list[frozenset[int]]:
    """All maximal cliques of a chordal graph from a perfect elimination order."""
    order = peo.order
    if not is_peo(g, order):
        raise InvalidPEO("order is not a perfect elimination order of the graph")
    later = _later_neighbours(g, order)
    dominated = set()
    for i, lv in enumerate(later):
        if lv:
            parent = lv[0]
            pi = order.index(parent)
            if len(lv) - 1 >= len(later[pi]):
                dominated.add(pi)
    cliques = [frozenset([v, *later[i]]) for i, v in enumerate(order) if i not in dominated]
    return sorted(cliques, key=lambda c: sorted(c))


def _chordal_cliques(g: Graph) -> list[frozenset[int]]:
    peo = recognize_chordal(g)
    if isinstance(peo, Hole):
        raise NotChordal(f"chordless cycle {peo.cycle}")
    return maximal_cliques_chordal(g, peo)


def dominates(g: Graph, vertices: frozenset[int]) -> bool:
    covered = set(vertices)
    for v in vertices:
        covered |= g.adj[v]
    return len(covered) == g.n


def dominating_maximal_cliques(g: Graph) -> list[frozenset[int]]:
    return [c for c in _chordal_cliques(g) if dominates(g, c)]


def find_dominating_clique(g: Graph) -> frozenset[int] | None:
    """A maximal clique dominating every vertex, or None.

    Every dominating clique extends to a dominating maximal clique, so
    scanning the maximal cliques is exhaustive.
    """
    found = dominating_maximal_cliques(g)
    return found[0] if found else None


# ---------------------------------------------------------------------------
# split graphs


def split_partition(g: Graph) -> SplitPartition | None:
    """Split partition with the largest clique side, lexicographically smallest on ties."""
    n = g.n
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    by_degree = sorted(range(n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in by_degree]
    m = max(i for i in range(1, n + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    clique = frozenset(by_degree[:m])
    indep = frozenset(by_degree[m:])
    base = SplitPartition(clique, indep)
    assert base.is_valid(g)
    options = [base]
    for c in clique:
        if g.adj[c] & indep:
            continue
        for w in indep:
            if g.adj[w] == clique - {c}:
                options.append(SplitPartition((clique - {c}) | {w}, (indep - {w}) | {c}))
    return min(options, key=lambda p: sorted(p.clique))


def split_partition_bruteforce(g: Graph) -> SplitPartition | None:
    best = None
    for mask in range(1 << g.n):
        c = frozenset(v for v in range(g.n) if mask >> v & 1)
        p = SplitPartition(c, frozenset(range(g.n)) - c)
        if p.is_valid(g):
            key = (-len(c), sorted(c))
            if best is None or key < best[0]:
                best = (key, p)
    return best[1] if best else None


def is_split(g: Graph) -> bool:
    return split_partition(g) is not None


def is_block_split(g: Graph, p: SplitPartition) -> bool:
    return all(g.degree(v) <= 1 for v in p.independent)


def classify_good_bad(g: Graph, p: SplitPartition) -> dict[int, Quality]:
    """Clique vertices of a block-split graph: GOOD iff ``d(u) != |C|``."""
    if not is_block_split(g, p):
        raise NotBlockSplit("some independent vertex has degree >= 2")
    size = len(p.clique)
    return {u: Quality.GOOD if g.degree(u) != size else Quality.BAD for u in sorted(p.clique)}


# ---------------------------------------------------------------------------
# suns (desk-scale strong chordality checks)


def find_sun(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """An induced k-sun (k >= 3) as ``(xs, ys)``, found by backtracking.

    ``y_i`` sees exactly ``x_i`` and ``x_{i+1 mod k}`` among the clique
    vertices.  Exponential; meant for small graphs.
    """
    adj = g.adj

    def ok_y(y, xs, ys, a, b):
        if y in xs or y in ys or adj[y] & set(ys):
            return False
        return all((x in adj[y]) == (x in (a, b)) for x in xs)

    def extend(xs, ys):
        k = len(xs)
        if k >= 3:
            # try closing with y_{k-1} between x_{k-1} and x_0
            for y in sorted(adj[xs[-1]] & adj[xs[0]]):
                if ok_y(y, xs, ys, xs[-1], xs[0]):
                    return tuple(xs), tuple(ys + [y])
        for x in sorted(adj[xs[-1]]):
            if x in xs or x in ys or any(x not in adj[z] for z in xs):
                continue
            if any(x in adj[y] for y in ys):
                continue
            for y in sorted(adj[xs[-1]] & adj[x]):
                if ok_y(y, xs + [x], ys, xs[-1], x):
                    found = extend(xs + [x], ys + [y])
                    if found:
                        return found
        return None

    for x0 in range(g.n):
        found = extend([x0], [])
        if found:
            return found
    return None


def is_strongly_chordal(g: Graph) -> bool:
    return is_chordal(g) and find_sun(g) is None
