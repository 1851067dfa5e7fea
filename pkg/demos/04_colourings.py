"""
Colourings, cliques and tuple colourings
========================================
"""

from hprod import CircInstance, Graph, GraphFamily, circ_h, complete_graph, cycle_graph, otimes_h, OtimesInstance
from hprod import invariants as inv
from hprod import solvers

# C5 with K_n over one vertex, K2 over the next, 2K1 elsewhere
for n in (3, 4, 5):
    fam = GraphFamily((complete_graph(n), complete_graph(2), Graph(2)))
    inst = CircInstance(cycle_graph(5), fam, (0, 1, 2, 2, 2))
    chi = solvers.chromatic_number(circ_h(inst).graph)[0]
    print(f"n={n}: chi={chi}, upper bound {inv.chi_circ_upper(inst)}")

# only the chromatic numbers of the members matter
c5_pt = CircInstance(complete_graph(2), GraphFamily((cycle_graph(5), Graph(1))), (0, 1))
red = inv.reduce_to_complete_fibers(c5_pt)
print("chi before/after reduction:",
      solvers.chromatic_number(circ_h(c5_pt).graph)[0], solvers.chromatic_number(circ_h(red).graph)[0])

# an assignment reaching the clique bound
fam = GraphFamily((Graph(3, frozenset({(0, 1)})), Graph(3, frozenset({(1, 2), (0, 2)}))))
h, k = inv.clique_realizing_assignment(complete_graph(3), fam)
print("clique target", k, "achieved", solvers.clique_number(otimes_h(OtimesInstance(complete_graph(3), fam, h)).graph)[0])

# tuple colourings and Kneser graphs
petersen = inv.kneser_graph([2], 5)
print("K({2},5):", petersen.order, "vertices,", petersen.size, "edges")
tc = inv.h_tuple_chromatic(cycle_graph(5), [2] * 5)
print("2-tuple chromatic number of C5:", tc.value, [sorted(s) for s in tc.witness.colors_per_vertex])
