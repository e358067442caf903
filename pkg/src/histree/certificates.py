"""Independent re-checks of NO certificates.

Each checker re-evaluates the named condition from the certificate
parameters and the graph alone, without calling the decider that
produced it.  Certificates that only record an exhaustive search return
None from :func:`check_certificate`.
"""

from __future__ import annotations

from itertools import combinations
from typing import Any, Callable

from .graph import Graph
from .verdict import Certificate

EXHAUSTIVE = frozenset({"ExhaustiveDP", "SpanningTreeEnumeration", "ModularExhaustive", "KernelNo"})


def _components(g: Graph) -> int:
    seen = [False] * g.n
    count = 0
    for start in range(g.n):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return count


def _clique(g: Graph, vs) -> bool:
    return all(b in g.adj[a] for a, b in combinations(vs, 2))


def _independent(g: Graph, vs) -> bool:
    return not any(b in g.adj[a] for a, b in combinations(vs, 2))


def _edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def _a_edges(x: int, ys, us) -> set[frozenset[int]]:
    edges = {frozenset(p) for p in combinations(ys, 2)}
    for y, part in zip(ys, us):
        for u in part:
            edges |= {frozenset((x, u)), frozenset((y, u))}
    return edges


def _is_a(g: Graph, x: int, ys, us) -> bool:
    if not ys or any(len(part) == 0 for part in us):
        return False
    verts = [x, *ys, *(u for part in us for u in part)]
    if sorted(verts) != list(range(g.n)):
        return False
    return _a_edges(x, ys, us) == _edge_set(g)


def _as_a(g: Graph) -> tuple[int, list[int], list[set[int]]] | None:
    """Any hub ``x`` that exhibits ``g`` as an A-family graph."""
    for x in range(g.n):
        ys = [y for y in range(g.n) if y != x and y not in g.adj[x]]
        us = [set(g.adj[y] & g.adj[x]) for y in ys]
        if _is_a(g, x, ys, us):
            return x, ys, us
    return None


# ---------------------------------------------------------------------------
# per-kind checkers


def _empty(g, p):
    return g.n == 0


def _disconnected(g, p):
    return g.n > 0 and _components(g) > 1


def _tree_two(g, p):
    twos = list(p.get("vertices", []))
    return g.m == g.n - 1 and _components(g) == 1 and bool(twos) and all(g.degree(v) == 2 for v in twos)


def _k3(g, p):
    return g.n == 3 and g.m == 3


def _split_ok(g, c, i) -> bool:
    return c | i == set(range(g.n)) and not c & i and _clique(g, c) and _independent(g, i)


def _block_split_few_good(g, p):
    c = set(p["clique"])
    i = set(range(g.n)) - c
    if not _split_ok(g, c, i) or any(g.degree(w) > 1 for w in i):
        return False
    good = {u for u in c if g.degree(u) != len(c)}
    return good == set(p["good"]) and len(good) < 2


def _split1(g, p):
    c, i = set(p["clique"]), set(p["independent"])
    if not _split_ok(g, c, i):
        return False
    return all(len(g.adj[u] & i) == 1 for u in c) and len(c) - len(i) == 1


def _split2(g, p):
    c, i, U = set(p["clique"]), set(p["independent"]), set(p["U"])
    if not _split_ok(g, c, i):
        return False
    ni = {u: frozenset(g.adj[u] & i) for u in c}
    if U != {u for u in c if len(ni[u]) == 2} or len(U) < 2:
        return False
    if any(len(ni[u]) not in (1, 2) for u in c):
        return False
    if len({ni[u] for u in U}) != len(U):
        return False
    if any(g.degree(w) != 1 for u in c - U for w in ni[u]):
        return False
    return set.intersection(*(set(ni[u]) for u in U)) == {p["v_star"]}


def _dominating_clique(g, c) -> bool:
    covered = set(c).union(*(g.adj[u] for u in c))
    return bool(c) and _clique(g, c) and covered == set(range(g.n))


def _chordal1(g, p):
    c = set(p["clique"])
    if not _dominating_clique(g, c):
        return False
    out = {u: g.adj[u] - c for u in c}
    ustar = p["u_star"]
    if len(out[ustar]) < 3:
        return False
    return all(len(out[u]) == 1 and all(g.degree(w) == 1 for w in out[u]) for u in c if u != ustar)


def _chordal2(g, p):
    c, U = set(p["clique"]), set(p["U"])
    if not _dominating_clique(g, c):
        return False
    out = {u: frozenset(g.adj[u] - c) for u in c}
    if any(len(out[u]) not in (1, 2) for u in c) or U != {u for u in c if len(out[u]) == 2}:
        return False
    if any(g.degree(w) != 1 for u in c - U for w in out[u]):
        return False
    case = p["case"]
    if case == "a":
        return len(U) == 1
    common = set.intersection(*(set(out[u]) for u in U)) if U else set()
    if case == "b":
        return len(U) == 2 and common == {p["v_star"]}
    if case == "c":
        cbar = set(range(g.n)) - c
        inner = sum(1 for a, b in g.edges() if a in cbar and b in cbar)
        return len(U) >= 3 and len({out[u] for u in U}) == len(U) and common == {p["v_star"]} and inner == 1
    return False


def _diameter_two(g, p):
    if p.get("family") == "A":
        ys = list(p["y"])
        us = [set(part) for part in p["U"]]
        return (
            _is_a(g, p["x"], ys, us)
            and len(ys) == p["k"]
            and sorted(map(len, us)) == sorted(p["p"])
        )
    if p.get("family") == "B":
        a, b = p["extra_edge"]
        if b not in g.adj[a] or g.n != p["n"]:
            return False
        found = _as_a(g.remove_edges([(a, b)]))
        if found is None:
            return False
        _, ys, us = found
        sizes = sorted(len(part) for part in us)
        return len(ys) == 2 and sizes == sorted([2, g.n - 5]) and any(part == {a, b} for part in us)
    return False


CHECKERS: dict[str, Callable[[Graph, dict], bool]] = {
    "EmptyGraph": _empty,
    "Disconnected": _disconnected,
    "TreeWithDegreeTwo": _tree_two,
    "CompleteOrderThree": _k3,
    "BlockSplitFewGood": _block_split_few_good,
    "SplitCondition1": _split1,
    "SplitCondition2": _split2,
    "ChordalD3Condition1": _chordal1,
    "ChordalD3Condition2": _chordal2,
    "DiameterTwoFamily": _diameter_two,
}


def check_certificate(g: Graph, cert: Certificate | dict[str, Any]) -> bool | None:
    """True if the certificate holds for ``g``, False if not, None if not checkable."""
    if isinstance(cert, Certificate):
        kind, params = cert.kind, cert.params
    else:
        kind, params = cert["kind"], cert.get("params", {})
    if kind in EXHAUSTIVE:
        return None
    checker = CHECKERS.get(kind)
    if checker is None:
        raise KeyError(f"no checker for certificate kind {kind!r}")
    try:
        return bool(checker(g, params))
    except (KeyError, TypeError, IndexError):
        return False
