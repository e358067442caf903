"""From a Hamiltonian path question to a HIST question.

Start with a chordal bipartite graph whose sides have equal size and whose
vertices s and t are pendant.  Adding s' and s'' gives G'; making one side
a clique gives G''; hanging pendants gives H.  H has a HIST exactly when
G' has a Hamiltonian path from s' to t.
"""

import random

from histree.classes import is_chordal
from histree.generators import gen_chordal_bipartite, gen_hardness
from histree.graph import Graph, diameter
from histree.oracle import hamiltonian_path, oracle_hist

ladder = Graph(6, [(0, 3), (1, 3), (1, 4), (2, 4), (2, 5)])
inst = gen_hardness(ladder, 0, 5)
print("Ladder with U = {0, 1, 2}, V = {3, 4, 5}, s = 0, t = 5")
print(f"  |V(H)| = {inst.H.n} (4|U| + 4 = {4 * 3 + 4}), chordal={is_chordal(inst.H)}, diameter={diameter(inst.H)}")
path = hamiltonian_path(inst.g_prime, inst.s_prime, inst.t)
print(f"  s'-t Hamiltonian path in G': {path}")
print(f"  HIST in H: {oracle_hist(inst.H, max_n=inst.H.n).answer.value}")

print("\nRandom instances")
rng = random.Random(3)
for half in (3, 4, 5):
    for _ in range(3):
        g, s, t = gen_chordal_bipartite(half, 0.5, rng)
        inst = gen_hardness(g, s, t)
        hist = oracle_hist(inst.H, max_n=inst.H.n).is_yes
        ham = hamiltonian_path(inst.g_prime, inst.s_prime, t) is not None
        print(f"  |U|={half} n(H)={inst.H.n}: HIST={hist} path={ham}")
