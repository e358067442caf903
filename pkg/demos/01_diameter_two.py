"""Diameter-two graphs: the two exceptional families and everything else.

Every graph of diameter at most two with ten or more vertices has a HIST
unless it belongs to the A family or is B_n.  This walk-through builds
members of both families, shows the recovered parameters, and contrasts
them with the Petersen graph.
"""

import networkx as nx

from histree.certificates import check_certificate
from histree.generators import gen_A, gen_B
from histree.graph import Graph, diameter
from histree.oracle import oracle_hist
from histree.poly import decide_diameter2

print("A(2, 5): hub 0, clique y = 1, 2, then the two classes")
a = gen_A([2, 5])
v = decide_diameter2(a)
print(f"  n={a.n} m={a.m} diameter={diameter(a)} -> {v.answer.value}")
print(f"  certificate {v.certificate.kind} p={v.certificate.params['p']} x={v.certificate.params['x']}")
print(f"  independent re-check: {check_certificate(a, v.certificate)}")
print(f"  brute force agrees: {oracle_hist(a).answer.value}")

print("\nRelabelling does not hide the family")
perm = [7, 3, 9, 0, 5, 1, 8, 2, 6, 4]
v = decide_diameter2(a.relabel(perm))
print(f"  relabelled A(2, 5) -> {v.answer.value}, hub now {v.certificate.params['x']}")

print("\nB_n adds one edge inside the two-vertex class")
for n in (10, 12, 14):
    b = gen_B(n)
    v = decide_diameter2(b)
    print(f"  B_{n}: {v.answer.value}, extra edge {v.certificate.params['extra_edge']}")

print("\nThe Petersen graph has diameter two and is in neither family")
pet = Graph(10, nx.petersen_graph().edges())
v = decide_diameter2(pet)
print(f"  -> {v.answer.value}; witness degrees {sorted(v.witness.degrees)}")
