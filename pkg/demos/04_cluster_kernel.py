"""Shrinking big twin classes around a cluster deletion set.

A hub joined to several cliques has cluster deletion number one.  Large
twin classes can be cut down to l + |S| + 1 vertices without changing
the answer; the deleted vertices come back as leaves of one twin.
"""

from itertools import combinations

from histree.cvd import decide_via_kernel, decompose, kernelize, kernel_clique_bound, minimum_cvd
from histree.exact import decide_exact
from histree.graph import Graph, verify_hist


def hub_with_cliques(sizes):
    edges, nxt = [], 1
    for s in sizes:
        block = range(nxt, nxt + s)
        edges += list(combinations(block, 2)) + [(0, v) for v in block]
        nxt += s
    return Graph(nxt, edges)


for sizes in [(9,), (7, 2), (8, 1, 1)]:
    g = hub_with_cliques(sizes)
    s = minimum_cvd(g)
    k = kernelize(g, decompose(g, s))
    v = decide_via_kernel(g, s=s)
    print(f"cliques {sizes}: n={g.n}, S={sorted(s)}, kernel n={k.graph.n} (bound {kernel_clique_bound(len(s))})")
    print(f"  removed (keeper, deleted): {k.removed}")
    print(f"  kernel answer lifted: {v.answer.value}, exact on the original: {decide_exact(g).answer.value}")
    if v.is_yes:
        print(f"  lifted tree verifies: {verify_hist(g, v.witness)}")

print("\nK20 with S empty collapses to a single edge")
k = kernelize(Graph.complete(20), decompose(Graph.complete(20), frozenset()))
print(f"  kernel: n={k.graph.n} m={k.graph.m}")
