"""Deciding through a modular partition.

The quotient graph has one vertex per module.  A tree on the quotient
fixes which modules need pendants; an assignment problem then decides
where the remaining module members hang.  This instance needs the one
self pendant a non-independent module may keep for itself.
"""

from histree.exact import decide_exact
from histree.graph import Graph, verify_hist
from histree.modular import decide_modular, maximal_modules

edges = [
    (0, 1), (0, 4), (0, 5), (0, 7), (1, 2), (1, 3), (1, 5), (1, 6), (1, 7), (2, 3), (2, 4), (2, 5),
    (2, 6), (2, 7), (3, 4), (3, 5), (3, 7), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
]
g = Graph(8, edges)
print("root-level modules:", [sorted(m) for m in maximal_modules(g)])
v = decide_modular(g)
cert = v.certificate.params
print("partition used:", cert["partition"]["modules"], "with M0 =", cert["partition"]["m0"])
print("assignment x:", cert["x"])
print("self pendant inside modules:", cert["self_pendant_modules"])
print("tree:", list(v.witness.edges), "valid:", verify_hist(g, v.witness))
print("exact DP agrees:", decide_exact(g).answer.value)
