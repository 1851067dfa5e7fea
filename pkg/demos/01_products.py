"""
Building generalized products
=============================

A generalized direct product picks, for every edge of the base graph, one
member of a family of graphs on a shared vertex set. The lexicographic
variant picks a member for every base vertex instead.
"""

from hprod import (CircInstance, Graph, GraphFamily, OtimesInstance, circ_h, components,
                   cycle_graph, direct_product, otimes_h, serialize_instance)

# three perfect matchings of K4 on vertices 0..3
f1 = Graph(4, frozenset({(0, 2), (1, 3)}))
f2 = Graph(4, frozenset({(0, 1), (2, 3)}))
f3 = Graph(4, frozenset({(0, 3), (1, 2)}))
fam = GraphFamily((f1, f2, f3))

# one matching per triangle edge
inst = OtimesInstance(cycle_graph(3), fam, {(0, 1): 0, (1, 2): 1, (0, 2): 2})
p = otimes_h(inst)
print("order", p.graph.order, "size", p.graph.size)
print("components", components(p.graph).blocks)

# vertex (a, x) lives at index a * |V| + x
print("(1, 2) ->", p.index(1, 2), "; 6 ->", p.pair(6))

# a constant assignment gives back the ordinary direct product
same = OtimesInstance.constant(cycle_graph(3), f1)
print("constant == direct product:", otimes_h(same).graph == direct_product(cycle_graph(3), f1).graph)

# lexicographic flavour: fibers may have different sizes
k2, k2k1 = Graph(2, frozenset({(0, 1)})), Graph(3, frozenset({(0, 1)}))
lex = CircInstance(cycle_graph(3), GraphFamily((k2, k2k1)), (0, 0, 1))
print("circ_h order", circ_h(lex).graph.order)

# instances serialize to canonical JSON
print(serialize_instance(inst), end="")
