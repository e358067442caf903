"""Exact subset dynamic program over degree classes.

``C[S][S1][S2]`` is true when ``G[S]`` has a spanning tree whose leaves are
exactly ``S1``, whose degree-2 vertices are exactly ``S2`` and whose other
vertices have degree at least 3.  A state packs one base-4 digit per vertex
into an integer::

    0 = not in S, 1 = in S1, 2 = in S2, 3 = in S with degree >= 3

Removing a leaf ``j`` and lowering the class of its tree neighbour ``k``
only ever lowers digits, so every predecessor of a state has a smaller
index and a single increasing sweep fills the table.  The table itself is
a packed bit array of ``4**n`` bits.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numba
import numpy as np

from .errors import Disconnected, TooLarge
from .graph import Graph, TreeWitness, is_connected
from .verdict import Verdict

log = logging.getLogger(__name__)

OUT, LEAF, DEG2, DEG3 = 0, 1, 2, 3
DEFAULT_MAX_N = 16
_CHUNK = 1 << 22


@numba.njit(cache=True)
def _get(bits, idx):
    return (bits[idx >> 3] >> (idx & 7)) & 1


@numba.njit(cache=True)
def _fill_range(n, indptr, indices, bits, lo, hi):
    low = np.int64(0)
    for v in range(n):
        low |= np.int64(1) << (2 * v)
    for idx in range(lo, hi):
        leaves = idx & ~(idx >> 1) & low
        if leaves == 0:
            continue
        members = (idx | (idx >> 1)) & low
        members &= members - 1
        members &= members - 1
        if members == 0:
            continue
        t = 0
        while not (leaves >> t) & 1:
            t += 2
        j = t >> 1
        base = idx - (np.int64(1) << t)
        hit = False
        for p in range(indptr[j], indptr[j + 1]):
            k = indices[p]
            dk = (idx >> (2 * k)) & 3
            if dk == 2:
                if _get(bits, base - (np.int64(1) << (2 * k))):
                    hit = True
                    break
            elif dk == 3:
                if _get(bits, base - (np.int64(1) << (2 * k))) or _get(bits, base):
                    hit = True
                    break
        if hit:
            bits[idx >> 3] |= np.uint8(1 << (idx & 7))


def encode(n: int, s1: Iterable[int] = (), s2: Iterable[int] = (), s3: Iterable[int] = ()) -> int:
    """Index of the state with the given leaf, degree-2 and degree>=3 sets."""
    idx = 0
    for digit, part in ((LEAF, s1), (DEG2, s2), (DEG3, s3)):
        for v in part:
            idx += digit << (2 * v)
    return idx


def decode(n: int, idx: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Inverse of :func:`encode`: returns ``(S, S1, S2)``."""
    s, s1, s2 = set(), set(), set()
    for v in range(n):
        d = (idx >> (2 * v)) & 3
        if d:
            s.add(v)
            if d == LEAF:
                s1.add(v)
            elif d == DEG2:
                s2.add(v)
    return frozenset(s), frozenset(s1), frozenset(s2)


@dataclass
class DPTable:
    """Completed degree-class table for one graph."""

    graph: Graph
    bits: np.ndarray

    @property
    def n(self) -> int:
        return self.graph.n

    def get_index(self, idx: int) -> bool:
        return bool((self.bits[idx >> 3] >> (idx & 7)) & 1)

    def get(self, s: Iterable[int], s1: Iterable[int], s2: Iterable[int]) -> bool:
        s, s1, s2 = set(s), set(s1), set(s2)
        if not (s1 <= s and s2 <= s) or s1 & s2:
            raise ValueError("S1 and S2 must be disjoint subsets of S")
        return self.get_index(encode(self.n, s1, s2, s - s1 - s2))

    def true_states(self) -> np.ndarray:
        """Indices of all true states, in increasing order."""
        flags = np.unpackbits(self.bits, bitorder="little")[: 4**self.n]
        return np.flatnonzero(flags)

    def predecessors(self, idx: int) -> list[tuple[int, int, int]]:
        """True predecessor states ``(pred_idx, leaf, neighbour)`` under the minimal leaf."""
        n = self.n
        digits = [(idx >> (2 * v)) & 3 for v in range(n)]
        j = digits.index(LEAF)
        base = idx - (1 << (2 * j))
        out = []
        for k in sorted(self.graph.adj[j]):
            if digits[k] == DEG2:
                cands = [base - (1 << (2 * k))]
            elif digits[k] == DEG3:
                cands = [base - (1 << (2 * k)), base]
            else:
                continue
            for p in cands:
                if self.get_index(p):
                    out.append((p, j, k))
        return out

    def reconstruct(self, idx: int) -> list[tuple[int, int]]:
        """Edges of a spanning tree of ``G[S]`` realising the true state ``idx``."""
        if not self.get_index(idx):
            raise ValueError("state is not realisable")
        edges = []
        while True:
            members = [v for v in range(self.n) if (idx >> (2 * v)) & 3]
            if len(members) == 2:
                edges.append((members[0], members[1]))
                return edges
            pred, j, k = self.predecessors(idx)[0]
            edges.append((j, k))
            idx = pred


def build_dp(
    g: Graph,
    max_n: int = DEFAULT_MAX_N,
    progress: Callable[[float], None] | None = None,
) -> DPTable:
    """Fill the degree-class table for ``g``.

    Memory is ``4**n / 8`` bytes (32 MiB at n = 14, 512 MiB at n = 16).
    """
    n = g.n
    if n > max_n:
        raise TooLarge(n, max_n)
    total = 4**n
    bits = np.zeros(max(1, (total + 7) // 8), dtype=np.uint8)
    for u, v in g.edges():
        idx = (1 << (2 * u)) + (1 << (2 * v))
        bits[idx >> 3] |= np.uint8(1 << (idx & 7))
    indptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        indptr[v + 1] = indptr[v] + g.degree(v)
    indices = np.array([w for v in range(n) for w in sorted(g.adj[v])], dtype=np.int64)
    if n >= 3:
        for lo in range(0, total, _CHUNK):
            hi = min(total, lo + _CHUNK)
            _fill_range(n, indptr, indices, bits, lo, hi)
            if progress is not None:
                progress(hi / total)
    return DPTable(g, bits)


def degree_class_feasible(
    g: Graph,
    s: Iterable[int],
    m1: Iterable[int],
    m2: Iterable[int],
    table: DPTable | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> bool:
    """Does ``G[S]`` have a spanning tree with leaf set ``M1`` and degree-2 set ``M2``?"""
    if table is None:
        table = build_dp(g, max_n)
    return table.get(s, m1, m2)


def hist_states(table: DPTable) -> list[frozenset[int]]:
    """All leaf sets ``S1`` with ``C[V][S1][{}]`` true."""
    n = table.n
    full = encode(n, s3=range(n))
    found = []
    for mask in range(1 << n):
        idx = full - sum(2 << (2 * v) for v in range(n) if mask >> v & 1)
        if table.get_index(idx):
            found.append(frozenset(v for v in range(n) if mask >> v & 1))
    return found


def decide_exact(g: Graph, max_n: int = DEFAULT_MAX_N, progress=None) -> Verdict:
    """Decide HIST existence by the subset DP and rebuild a witness."""
    n = g.n
    if n > max_n:
        raise TooLarge(n, max_n)
    if not is_connected(g):
        raise Disconnected("a disconnected graph has no spanning tree")
    if n == 1:
        return Verdict.yes("exact", TreeWitness(1, []))
    if n == 2:
        return Verdict.yes("exact", TreeWitness(2, g.edges()))
    table = build_dp(g, max_n, progress)
    leaf_sets = hist_states(table)
    if not leaf_sets:
        return Verdict.no("exact", "ExhaustiveDP", n=n)
    threshold = math.ceil(n / 2)
    for s1 in leaf_sets:
        if len(s1) < threshold:
            raise AssertionError(f"HIST with {len(s1)} leaves below the bound {threshold}")
    s1 = min(leaf_sets, key=lambda s: (len(s), sorted(s)))
    idx = encode(n, s1, (), set(range(n)) - s1)
    return Verdict.yes("exact", TreeWitness(n, table.reconstruct(idx)))
