"""
Deciding connectivity without building the product
==================================================

With connected members, the product is connected exactly when the base or
the union of the assigned members is nonbipartite. For arbitrary members the
fiber-set intersection graph answers the same question.
"""

from hprod import GraphFamily, OtimesInstance, cycle_graph, otimes_h, path_graph, star_graph, Graph
from hprod import connectivity as conn

# bipartite base, bipartite members: two components, and we get one of them
square = OtimesInstance.constant(cycle_graph(4), path_graph(4))
v = conn.predict_otimes_connectivity(square)
print("C4 x P4:", v.connected, v.component_count, "witness", v.witness)
print("BFS agrees:", conn.bfs_verdict(otimes_h(square).graph).component_count)

# an odd member on a single edge is enough
tri = Graph(4, frozenset({(0, 1), (1, 2), (0, 2), (2, 3)}))
h = {e: 0 for e in cycle_graph(4).edges}
h[(0, 1)] = 1
mixed = OtimesInstance(cycle_graph(4), GraphFamily((path_graph(4), tri)), h)
print("one odd member:", conn.predict_otimes_connectivity(mixed).connected)
print("certificate:", conn.sufficient_connectivity_check(mixed))

# perfect matchings over a triangle: nonbipartite everywhere, still four pieces
f1 = Graph(4, frozenset({(0, 2), (1, 3)}))
f2 = Graph(4, frozenset({(0, 1), (2, 3)}))
f3 = Graph(4, frozenset({(0, 3), (1, 2)}))
four = OtimesInstance(cycle_graph(3), GraphFamily((f1, f2, f3)), {(0, 1): 0, (1, 2): 1, (0, 2): 2})
print("fiber family route:", conn.otimes_connected_via_family(four))

# star base: stable-set partitions of the members decide it
two_k2 = Graph(4, frozenset({(0, 1), (2, 3)}))
star = OtimesInstance(star_graph(3), GraphFamily((two_k2, path_graph(4), two_k2)),
                      {(0, 1): 0, (0, 2): 1, (0, 3): 2})
print("partition witness:", conn.predict_disconnection_via_partitions(star))
