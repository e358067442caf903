"""Graph families and instance generators.

All random generators take an explicit seed and return connected graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import EmptyParams, NotBipartite, NotPendant, TooSmall, UnequalParts
from .graph import Graph, connected_components, is_connected

CLASSES = ("split", "block_split", "chordal", "any")


def gen_A(p) -> Graph:
    """``A(p_1..p_k)``: hub ``x = 0``, clique ``y_i = i``, then the classes ``U_i``."""
    p = list(p)
    if not p:
        raise EmptyParams("A needs at least one class size")
    if any(int(q) < 1 for q in p):
        raise EmptyParams("class sizes must be positive")
    k = len(p)
    edges = list(combinations(range(1, k + 1), 2))
    nxt = k + 1
    for i, size in enumerate(p, start=1):
        for u in range(nxt, nxt + size):
            edges += [(0, u), (i, u)]
        nxt += size
    return Graph(nxt, edges)


def gen_B(n: int) -> Graph:
    """``A(2, n-5)`` plus the edge joining the two vertices of the first class."""
    if n - 5 < 1:
        raise TooSmall(f"B_n needs n >= 6, got {n}")
    a = gen_A([2, n - 5])
    return a.add_edges([(3, 4)])


def compositions(total: int):
    """All ordered tuples of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first, *rest)


# ---------------------------------------------------------------------------
# random classes


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    return [(rng.randrange(v), v) for v in range(1, n)]


def random_connected(n: int, density: float, rng: random.Random) -> Graph:
    """Random spanning tree plus every other pair independently with probability ``density``."""
    edges = set(_random_tree_edges(n, rng))
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < density:
            edges.add(e)
    return _shuffle(Graph(n, edges), rng)


def _shuffle(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_split(n: int, density: float, rng: random.Random, block: bool = False) -> Graph:
    c = rng.randint(1, n)
    edges = list(combinations(range(c), 2))
    for w in range(c, n):
        if block:
            nbrs = [rng.randrange(c)]
        else:
            nbrs = [u for u in range(c) if rng.random() < density] or [rng.randrange(c)]
        edges += [(u, w) for u in nbrs]
    return _shuffle(Graph(n, edges), rng)


def random_chordal(n: int, density: float, rng: random.Random) -> Graph:
    """Each new vertex joins a random clique around a random old vertex.

    New vertices are simplicial when added, so the reverse insertion order
    is a perfect elimination order.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    for v in range(1, n):
        w = rng.randrange(v)
        clique = [w]
        for z in sorted(adj[w]):
            if rng.random() < density and all(z in adj[y] for y in clique):
                clique.append(z)
        for y in clique:
            adj[v].add(y)
            adj[y].add(v)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return _shuffle(Graph(n, edges), rng)


def planted_cluster(n: int, s: int, rng: random.Random, classes: int = 2) -> Graph:
    """Cluster graph on ``s..n-1`` joined to a deletion set ``0..s-1``.

    Every clique splits into up to ``classes`` groups, each group seeing its
    own random subset of ``S``, so twin classes tend to be large.  Each
    clique touches ``S``; leftover components are joined by one edge from
    the component of vertex 0.  With ``s = 0`` the rest is one clique.
    """
    if n <= s:
        raise TooSmall("need at least one vertex outside S")
    rest = list(range(s, n))
    cliques = [rest]
    if s:
        cuts = sorted(rng.sample(range(1, len(rest)), min(len(rest) - 1, rng.randint(0, 2))))
        cliques = [rest[a:b] for a, b in zip([0, *cuts], [*cuts, len(rest)])]
    edges = [e for c in cliques for e in combinations(c, 2)]
    edges += [e for e in combinations(range(s), 2) if rng.random() < 0.5]
    for c in cliques:
        groups = min(len(c), rng.randint(1, classes))
        for gi in range(groups):
            nbrs = [x for x in range(s) if rng.random() < 0.5]
            if s and gi == 0 and not nbrs:
                nbrs = [rng.randrange(s)]
            edges += [(x, v) for v in c[gi::groups] for x in nbrs]
    g = Graph(n, edges)
    comps = connected_components(g)
    # join stray components through S so the cluster part stays intact
    links = [(min(comps[0]), min(c)) for c in comps[1:]]
    return g.add_edges(links)


def gen_random(cls: str, n: int, density: float = 0.5, seed: int = 0) -> Graph:
    if n < 1:
        raise TooSmall("n must be positive")
    rng = random.Random(seed)
    if cls == "any":
        return random_connected(n, density, rng)
    if cls == "split":
        return random_split(n, density, rng)
    if cls == "block_split":
        return random_split(n, density, rng, block=True)
    if cls == "chordal":
        return random_chordal(n, density, rng)
    raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}")


# ---------------------------------------------------------------------------
# hardness pipeline


def bipartition(g: Graph, s: int) -> tuple[frozenset[int], frozenset[int]]:
    """Two-colouring with ``s`` on the first side; raises NotBipartite."""
    colour = [-1] * g.n
    for start in [s, *range(g.n)]:
        if colour[start] >= 0:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    raise NotBipartite(f"odd cycle through edge {x}-{y}")
    side = frozenset(v for v in range(g.n) if colour[v] == 0)
    return side, frozenset(range(g.n)) - side


def _induced_cycle_at_least(g: Graph, length: int) -> list[int] | None:
    """Some induced cycle with at least ``length`` vertices (exhaustive)."""
    adj = g.adj

    def grow(path, on_path):
        last = path[-1]
        for y in sorted(adj[last]):
            if y < path[0] or y in on_path:
                continue
            inner = adj[y] & on_path
            if y in adj[path[0]] and inner == {last, path[0]} and len(path) + 1 >= length:
                return path + [y]
            if inner == {last}:
                found = grow(path + [y], on_path | {y})
                if found:
                    return found
        return None

    for v in range(g.n):
        found = grow([v], {v})
        if found:
            return found
    return None


def is_chordal_bipartite(g: Graph) -> bool:
    try:
        bipartition(g, 0 if g.n else 0)
    except NotBipartite:
        return False
    return _induced_cycle_at_least(g, 6) is None


@dataclass
class HardnessInstance:
    H: Graph
    g_prime: Graph
    g_double_prime: Graph
    U: frozenset[int]
    V: frozenset[int]
    s: int
    t: int
    s_prime: int
    s_double_prime: int
    pendants: dict[int, list[int]] = field(default_factory=dict)

    def metadata(self) -> dict:
        return {
            "U": sorted(self.U),
            "V": sorted(self.V),
            "s": self.s,
            "t": self.t,
            "s_prime": self.s_prime,
            "s_double_prime": self.s_double_prime,
            "pendants": {str(k): v for k, v in sorted(self.pendants.items())},
            "order": self.H.n,
        }


def gen_hardness(g: Graph, s: int, t: int) -> HardnessInstance:
    """Build G', G'' and H from a bipartite graph with pendant ``s`` and ``t``.

    Vertex ids of ``g`` are kept; ``s' = n``, ``s'' = n + 1`` and pendants
    follow in increasing order of the vertex they hang from.
    """
    U, V = bipartition(g, s)
    if len(U) != len(V):
        raise UnequalParts(f"parts have sizes {len(U)} and {len(V)}")
    if t not in V:
        raise NotBipartite("s and t must lie on opposite sides")
    for name, v in (("s", s), ("t", t)):
        if g.degree(v) != 1:
            raise NotPendant(f"{name} = {v} has degree {g.degree(v)}")
    n = g.n
    sp, spp = n, n + 1
    edges = g.edges() + [(s, spp)] + [(sp, v) for v in sorted(V | {spp}) if v != t]
    g1 = Graph(n + 2, edges)
    g2 = g1.add_edges(combinations(sorted(U | {sp}), 2))
    pendants: dict[int, list[int]] = {}
    nxt = n + 2
    extra = []
    for v in sorted(U | V | {spp, sp}):
        if v == t:
            continue
        count = 2 if v == sp else 1
        pendants[v] = list(range(nxt, nxt + count))
        extra += [(v, w) for w in pendants[v]]
        nxt += count
    h = Graph(nxt, g2.edges() + extra)
    return HardnessInstance(h, g1, g2, U | {sp}, V | {spp}, s, t, sp, spp, pendants)


def gen_chordal_bipartite(half: int, density: float, rng: random.Random, tries: int = 1000) -> tuple[Graph, int, int]:
    """Connected chordal bipartite graph with ``|U| = |V| = half`` and pendant ``s``, ``t``.

    ``U = 0..half-1`` with ``s = 0``; ``V = half..2*half-1`` with
    ``t = 2*half-1``.  Candidates are sampled until one passes the checks.
    """
    if half < 2:
        raise TooSmall("need at least two vertices per side")
    U = list(range(half))
    V = list(range(half, 2 * half))
    s, t = U[0], V[-1]
    for _ in range(tries):
        edges = [(s, rng.choice(V[:-1]) if half > 1 else V[0]), (t, rng.choice(U[1:]))]
        for u in U[1:]:
            for v in V[:-1]:
                if rng.random() < density:
                    edges.append((u, v))
        g = Graph(2 * half, set(edges))
        if g.degree(s) == 1 and g.degree(t) == 1 and is_connected(g) and is_chordal_bipartite(g):
            return g, s, t
    raise TooSmall("no chordal bipartite instance found; raise density or tries")
