"""
Invariants, bounds and witnesses
================================

Exact values come from small branch-and-bound solvers; every bound from the
theory is reported next to them.
"""

from hprod import CircInstance, Graph, GraphFamily, OtimesInstance, circ_h, complete_graph, cycle_graph, otimes_h
from hprod import connectivity as conn
from hprod import invariants as inv
from hprod import solvers

c4 = OtimesInstance.constant(cycle_graph(4), cycle_graph(4))
g = otimes_h(c4).graph
rep = inv.exact(g, "gamma")
lb = inv.gamma_otimes_lower(c4)
print("gamma", rep.value, "dominating set", rep.witness, "lower bounds", lb)

# the dominating set built from total dominating sets of the factors
De = {e: (0, 1, 2) for e in c4.base.edges}
Be = {e: (0, 2) for e in c4.base.edges}
x = inv.dominating_set_construct(c4, (0, 1), De, (0, 1), Be)
print("constructed X has", len(x), "vertices; dominates:", solvers.dominates(g, x))

# independence number of a lexicographic-type product, straight from the factors
lex = CircInstance(cycle_graph(5), GraphFamily((complete_graph(2), Graph(3))), (0, 1, 0, 1, 0))
a = inv.alpha_circ(lex)
print("alpha formula", a.value, "exact", solvers.independence_number(circ_h(lex).graph)[0])

# vertex and edge connectivity formulas
k = CircInstance.constant(cycle_graph(4), complete_graph(2))
print("kappa", conn.kappa_circ(k), solvers.kappa_exact(circ_h(k).graph)[0])
print("lambda", conn.lambda_circ(k), solvers.lambda_exact(circ_h(k).graph)[0])
