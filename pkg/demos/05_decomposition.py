"""
Searching for decompositions
============================

Given a graph and a block count k, look for k equal blocks and bijections
between them that exhibit the graph as a generalized direct product.
"""

from hprod import Graph, GraphFamily, OtimesInstance, cycle_graph, decompose, otimes_h
from hprod.structure import is_reconstruction_isomorphic

f1 = Graph(4, frozenset({(0, 2), (1, 3)}))
f2 = Graph(4, frozenset({(0, 3), (1, 2)}))
two_hex = otimes_h(OtimesInstance(cycle_graph(3), GraphFamily((f1, f2)), {(0, 1): 0, (1, 2): 0, (0, 2): 1})).graph

# the same 12-vertex graph factors in several ways
for k in (2, 3, 4, 6):
    stats = {}
    dec = decompose(two_hex, k, stats=stats)
    print(f"k={k}: H edges {sorted(dec.base.edges)}, {len(dec.family)} members, "
          f"rebuilt={is_reconstruction_isomorphic(two_hex, dec)}, nodes={stats['nodes']}")

# a triangle has no loopless decomposition into singletons, but does with loops
print(decompose(cycle_graph(3), 3))
print(decompose(cycle_graph(3), 3, loops=True).family)
