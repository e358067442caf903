"""Integral flows with lower bounds (feasibility only).

Edges carry ``[low, high]`` bounds, ``high=None`` meaning unbounded.  The
classic reduction turns the lower bounds into node excesses, adds a
return arc ``sink -> source`` and asks a max-flow between a super source
and a super sink to saturate every excess arc.  Dinic's algorithm does
the max-flow; all capacities are integers, so the solution is integral.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


class Dinic:
    def __init__(self, n: int):
        self.n = n
        self.graph: list[list[list[int]]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, cap: int) -> list[int]:
        fwd = [v, cap, 0]
        rev = [u, 0, 0]
        fwd[2] = len(self.graph[v])
        rev[2] = len(self.graph[u])
        self.graph[u].append(fwd)
        self.graph[v].append(rev)
        return fwd

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v, cap, _ in self.graph[u]:
                if cap > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _push(self, u, t, f, level, it):
        if u == t:
            return f
        edges = self.graph[u]
        while it[u] < len(edges):
            e = edges[it[u]]
            v, cap, rev = e
            if cap > 0 and level[v] == level[u] + 1:
                d = self._push(v, t, min(f, cap), level, it)
                if d > 0:
                    e[1] -= d
                    self.graph[v][rev][1] += d
                    return d
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int, limit: int) -> int:
        total = 0
        while total < limit:
            level = self._levels(s, t)
            if level is None:
                break
            it = [0] * self.n
            while total < limit:
                f = self._push(s, t, limit - total, level, it)
                if f == 0:
                    break
                total += f
        return total


@dataclass
class BoundedFlow:
    """Network with lower/upper edge bounds; solve with :meth:`feasible`.

    A feasible flow conserves flow everywhere except ``source`` and
    ``sink`` and sends a non-negative total from ``source`` to ``sink``.
    """

    n: int
    source: int
    sink: int
    arcs: list[tuple[int, int, int, int | None]] = field(default_factory=list)

    def add(self, u: int, v: int, low: int = 0, high: int | None = None) -> int:
        if high is not None and high < low:
            raise ValueError("upper bound below lower bound")
        self.arcs.append((u, v, low, high))
        return len(self.arcs) - 1

    def feasible(self) -> list[int] | None:
        """Flow value per arc of some feasible flow, or None."""
        big = 1 + sum(low + (high or 0) for _, _, low, high in self.arcs)
        sup, sdn = self.n, self.n + 1
        net = Dinic(self.n + 2)
        excess = [0] * self.n
        handles = []
        for u, v, low, high in self.arcs:
            cap = (big if high is None else high) - low
            handles.append(net.add_edge(u, v, cap))
            excess[v] += low
            excess[u] -= low
        net.add_edge(self.sink, self.source, big)
        need = 0
        for v, ex in enumerate(excess):
            if ex > 0:
                net.add_edge(sup, v, ex)
                need += ex
            elif ex < 0:
                net.add_edge(v, sdn, -ex)
        if net.max_flow(sup, sdn, need) < need:
            return None
        out = []
        for (u, v, low, high), fwd in zip(self.arcs, handles):
            cap = (big if high is None else high) - low
            out.append(low + cap - fwd[1])
        return out
