"""Split graphs: good vertices, the two NO conditions and the constructions.

In a block-split graph (every independent vertex has degree at most one)
a clique vertex is good when its pendant count is not exactly one.  Two
good vertices are necessary and sufficient for a HIST.  General split
graphs reduce to that case by deleting edges.
"""

from itertools import combinations

from histree.classes import classify_good_bad, split_partition
from histree.graph import Graph
from histree.oracle import oracle_hist
from histree.poly import decide_block_split, decide_split


def clique_plus(c, extra, n):
    return Graph(n, list(combinations(range(c), 2)) + extra)


print("Block-split graphs")
for name, g in [
    ("triangle, two pendants on 0", clique_plus(3, [(0, 3), (0, 4)], 5)),
    ("net: one pendant per corner", clique_plus(3, [(0, 3), (1, 4), (2, 5)], 6)),
    ("K4 plus one pendant each", clique_plus(4, [(i, i + 4) for i in range(4)], 8)),
]:
    p = split_partition(g)
    q = {u: x.value for u, x in classify_good_bad(g, p).items()}
    v = decide_block_split(g, p)
    print(f"  {name}: {q} -> {v.answer.value}")

print("\nSplit graphs that are not block-split")
cases = [
    ("condition 1", clique_plus(3, [(0, 3), (1, 3), (2, 4)], 5)),
    ("condition 2", clique_plus(3, [(0, 3), (0, 4), (1, 3), (1, 5), (2, 6)], 7)),
    ("a vertex with no pendant", clique_plus(3, [(0, 3), (0, 4), (1, 3)], 5)),
]
for name, g in cases:
    v = decide_split(g)
    extra = v.certificate.kind if v.is_no else f"route {v.certificate.params['route']}, tree {list(v.witness.edges)}"
    print(f"  {name}: {v.answer.value} ({extra}); oracle says {oracle_hist(g).answer.value}")
