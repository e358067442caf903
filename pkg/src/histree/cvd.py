"""Cluster vertex deletion and the twin-class size reduction.

If ``G - S`` is a disjoint union of cliques, each clique splits into
classes of true twins (same neighbours in ``S``).  A class with at least
``l + |S| + 3`` vertices, ``l`` being the number of classes in its
clique, can lose vertices down to ``l + |S| + 1`` without changing
whether a HIST exists.  Deleted vertices come back as leaves of one
surviving twin, whose degree then grows by at least two.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

from .errors import BudgetExceeded, InvalidDecomposition, KernelUndecided
from .graph import Graph, TreeWitness, connected_components, is_connected, verify_hist
from .verdict import Certificate, Verdict

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 12
DEFAULT_MAX_NODES = 200_000


def find_induced_p3(g: Graph, alive: set[int]) -> tuple[int, int, int] | None:
    """``(a, v, b)`` with ``a - v - b`` induced inside ``alive``."""
    for v in sorted(alive):
        nb = sorted(g.adj[v] & alive)
        for i, a in enumerate(nb):
            missing = (set(nb[i + 1 :]) - g.adj[a])
            if missing:
                return a, v, min(missing)
    return None


def cluster_vertex_deletion(
    g: Graph, budget: int, max_nodes: int = DEFAULT_MAX_NODES
) -> frozenset[int] | None:
    """Some ``S`` with ``|S| <= budget`` and ``G - S`` a cluster graph, or None.

    Branches three ways on an induced P3.  ``max_nodes`` caps the search
    tree; hitting the cap also returns None.
    """
    nodes = 0

    def search(alive: set[int], chosen: list[int], left: int):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            return None
        p3 = find_induced_p3(g, alive)
        if p3 is None:
            return frozenset(chosen)
        if left == 0:
            return None
        for x in p3:
            alive.discard(x)
            chosen.append(x)
            found = search(alive, chosen, left - 1)
            chosen.pop()
            alive.add(x)
            if found is not None:
                return found
        return None

    return search(set(range(g.n)), [], budget)


def minimum_cvd(g: Graph, max_budget: int = DEFAULT_BUDGET, max_nodes: int = DEFAULT_MAX_NODES) -> frozenset[int] | None:
    """Iterative deepening over budgets ``0..max_budget``."""
    for b in range(max_budget + 1):
        s = cluster_vertex_deletion(g, b, max_nodes)
        if s is not None:
            return s
    return None


@dataclass(frozen=True)
class CvdDecomposition:
    S: frozenset[int]
    cliques: tuple[frozenset[int], ...]
    twin_classes: tuple[tuple[frozenset[int], ...], ...]

    def validate(self, g: Graph) -> None:
        rest = set(range(g.n)) - self.S
        covered = set().union(*self.cliques) if self.cliques else set()
        if covered != rest:
            raise InvalidDecomposition("cliques do not cover V - S")
        for c, classes in zip(self.cliques, self.twin_classes):
            if not g.is_clique(c):
                raise InvalidDecomposition(f"{sorted(c)} is not a clique")
            if any(g.adj[v] & rest - c for v in c):
                raise InvalidDecomposition(f"clique {sorted(c)} has an outside neighbour in V - S")
            if set().union(*classes) != c:
                raise InvalidDecomposition("twin classes do not cover their clique")
            for m in classes:
                sig = {frozenset(g.adj[v] & self.S) for v in m}
                if len(sig) != 1:
                    raise InvalidDecomposition(f"class {sorted(m)} mixes S-neighbourhoods")
            sigs = [frozenset(g.adj[min(m)] & self.S) for m in classes]
            if len(set(sigs)) != len(sigs):
                raise InvalidDecomposition("two classes share an S-neighbourhood")


def decompose(g: Graph, s) -> CvdDecomposition:
    s = frozenset(s)
    rest = [v for v in range(g.n) if v not in s]
    sub, ids = g.induced(rest)
    cliques = []
    classes = []
    for comp in connected_components(sub):
        c = frozenset(ids[i] for i in comp)
        groups: dict[frozenset[int], set[int]] = {}
        for v in sorted(c):
            groups.setdefault(frozenset(g.adj[v] & s), set()).add(v)
        cliques.append(c)
        classes.append(tuple(sorted((frozenset(m) for m in groups.values()), key=min)))
    order = sorted(range(len(cliques)), key=lambda i: min(cliques[i]))
    d = CvdDecomposition(s, tuple(cliques[i] for i in order), tuple(classes[i] for i in order))
    d.validate(g)
    return d


def kernel_clique_bound(s: int) -> int:
    return 2**s * (2**s + 3 + s) + s


@dataclass
class Kernel:
    graph: Graph
    mapping: dict[int, int]  # old id -> new id, for surviving vertices
    decomposition: CvdDecomposition  # in new ids
    removed: list[tuple[int, list[int]]] = field(default_factory=list)  # (kept twin, deleted) in old ids

    @property
    def shrunk(self) -> bool:
        return bool(self.removed)


def kernelize(g: Graph, d: CvdDecomposition) -> Kernel:
    d.validate(g)
    s = len(d.S)
    deleted: set[int] = set()
    removed = []
    changed = True
    while changed:
        changed = False
        for classes in d.twin_classes:
            alive_classes = [sorted(m - deleted) for m in classes]
            alive_classes = [m for m in alive_classes if m]
            l = len(alive_classes)
            for m in alive_classes:
                if len(m) >= l + s + 3:
                    keep = l + s + 1
                    gone = m[keep:]
                    deleted.update(gone)
                    removed.append((m[0], gone))
                    changed = True
    survivors = [v for v in range(g.n) if v not in deleted]
    sub, ids = g.induced(survivors)
    mapping = {old: new for new, old in enumerate(ids)}
    nd = CvdDecomposition(
        frozenset(mapping[v] for v in d.S),
        tuple(frozenset(mapping[v] for v in c if v in mapping) for c in d.cliques),
        tuple(
            tuple(frozenset(mapping[v] for v in m if v in mapping) for m in classes if m - deleted)
            for classes in d.twin_classes
        ),
    )
    return Kernel(sub, mapping, nd, removed)


def lift_witness(g: Graph, kernel: Kernel, w: TreeWitness) -> TreeWitness:
    """Map a kernel HIST back to ``g``; each deleted batch hangs from one twin."""
    back = {new: old for old, new in kernel.mapping.items()}
    edges = [(back[a], back[b]) for a, b in w.edges]
    for keeper, gone in kernel.removed:
        edges += [(keeper, x) for x in gone]
    return TreeWitness(g.n, edges)


def decide_via_kernel(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    decide: Callable[[Graph], Verdict] | None = None,
    s: frozenset[int] | None = None,
) -> Verdict:
    """Kernelise, decide the kernel with ``decide`` and lift the answer."""
    if not is_connected(g):
        return Verdict.no("cvd", "Disconnected", n=g.n)
    if s is None:
        s = minimum_cvd(g, budget)
        if s is None:
            raise BudgetExceeded(f"no cluster deletion set of size <= {budget} found")
    d = decompose(g, s)
    kernel = kernelize(g, d)
    if decide is None:
        from .dispatch import dispatch_auto

        decide = dispatch_auto
    v = decide(kernel.graph)
    info = {
        "S": sorted(d.S),
        "kernel_n": kernel.graph.n,
        "kernel_m": kernel.graph.m,
        "kernel_method": v.method,
    }
    if v.is_no:
        return Verdict.no("cvd", "KernelNo", **info, kernel_certificate=v.certificate.to_dict())
    if not v.is_yes:
        raise KernelUndecided(v.reason or "kernel could not be decided")
    lifted = lift_witness(g, kernel, v.witness)
    if not verify_hist(g, lifted):
        raise AssertionError("lifted kernel witness failed verification")
    return Verdict.yes("cvd", lifted, Certificate("KernelLift", info))
