"""Simple undirected graphs, spanning-tree witnesses and the edge-list format.

Vertices are dense integers ``0..n-1``.  A :class:`Graph` never changes
after construction; every "modification" returns a new graph.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EdgeCountMismatch,
    EdgeNotInGraph,
    MalformedHeader,
    MalformedLine,
    SelfLoop,
    VertexOutOfRange,
)

INFINITE = math.inf


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "m", "_masks", "_key")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in sets)
        self.m = sum(len(s) for s in sets) // 2
        self._masks: tuple[int, ...] | None = None
        self._key: frozenset | None = None

    # -- construction helpers -------------------------------------------

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    # -- queries -----------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks."""
        if self._masks is None:
            self._masks = tuple(sum(1 << w for w in a) for a in self.adj)
        return self._masks

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(vs[j] in self.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(not (self.adj[v] & vs) for v in vs)

    # -- derived graphs ------------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph; returns it with the list mapping new ids to old ids."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u in order for v in self.adj[u] if v in index and u < v]
        return Graph(len(order), edges), order

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        drop = {frozenset(e) for e in edges}
        return Graph(self.n, (e for e in self.edges() if frozenset(e) not in drop))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return Graph(self.n, list(self.edges()) + list(edges))

    def remove_vertices(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        gone = set(vertices)
        return self.induced([v for v in range(self.n) if v not in gone])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def complement(self) -> Graph:
        return Graph(
            self.n,
            ((u, v) for u in range(self.n) for v in range(u + 1, self.n) if v not in self.adj[u]),
        )

    # -- identity ------------------------------------------------------------

    def _edge_key(self) -> frozenset:
        if self._key is None:
            self._key = frozenset(self.edges())
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edge_key() == other._edge_key()

    def __hash__(self) -> int:
        return hash((self.n, self._edge_key()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# distances and connectivity


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INFINITE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == INFINITE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return INFINITE not in bfs_distances(g, 0)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def diameter(g: Graph) -> float:
    """Largest BFS eccentricity; ``INFINITE`` for a disconnected graph.

    The empty graph and the single vertex have diameter 0.
    """
    best = 0
    for s in range(g.n):
        ecc = max(bfs_distances(g, s))
        if ecc == INFINITE:
            return INFINITE
        best = max(best, int(ecc))
    return best


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class TreeWitness:
    """Edge list claimed to be a spanning tree of an ``n``-vertex graph."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "edges", tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
        )

    @property
    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_spanning_tree(self) -> bool:
        if len(self.edges) != self.n - 1 or len(set(self.edges)) != len(self.edges):
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                return False
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def to_text(self) -> str:
        lines = [f"tree {len(self.edges)}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def parse_witness(text: str, n: int) -> TreeWitness:
    """Read the ``tree k`` / ``u v`` witness format written by :meth:`TreeWitness.to_text`."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0].split()[0] != "tree":
        raise MalformedHeader("witness must start with 'tree <edge count>'", 1)
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedLine(f"expected 'u v', got {ln!r}", i)
        edges.append((int(parts[0]), int(parts[1])))
    return TreeWitness(n, edges)


def verify_hist(g: Graph, t: TreeWitness) -> bool:
    """True iff ``t`` is a spanning tree of ``g`` with no vertex of degree 2.

    Raises :class:`EdgeNotInGraph` when the witness uses a non-edge.
    """
    for u, v in t.edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise EdgeNotInGraph(f"witness edge ({u}, {v}) is not an edge of the graph")
    if t.n != g.n or not t.is_spanning_tree():
        return False
    return 2 not in t.degrees


# ---------------------------------------------------------------------------
# edge-list format


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.

    Blank lines and lines starting with ``#`` are skipped.  Errors carry
    the 1-based line number of the offending line.
    """
    if isinstance(text, bytes):
        text = text.decode()
    rows = [
        (i, ln.strip())
        for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not rows:
        raise MalformedHeader("missing 'n m' header", 1)
    hline, header = rows[0]
    parts = header.split()
    try:
        n, m = (int(p) for p in parts)
    except ValueError:
        raise MalformedHeader(f"expected 'n m', got {header!r}", hline) from None
    if n < 0 or m < 0:
        raise MalformedHeader("n and m must be non-negative", hline)

    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, row in rows[1:]:
        parts = row.split()
        try:
            u, v = (int(p) for p in parts)
        except ValueError:
            raise MalformedLine(f"expected 'u v', got {row!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"vertex out of range 0..{n - 1} in {row!r}", lineno)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise EdgeCountMismatch(f"header announces {m} edges, found {len(edges)}", hline)
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
