"""Generalized direct (otimes_h) and lexicographic (circ_h) graph products."""
from .exceptions import ConditionViolation, GuardError, HypothesisError, InstanceError
from .family import CircInstance, GraphFamily, OtimesInstance, local_union, sigma_gamma, union_graph
from .graph import (Graph, Partition, complete_graph, components, cycle_graph, disjoint_union,
                    empty_graph, is_isomorphic, path_graph, star_graph, stable_partition)
from .io import parse_instance, serialize_instance
from .product import (ProductGraph, circ_h, direct_product, lex_product, min_degree_circ, otimes_h,
                      product_degree)
from .structure import Decomposition, check_decomposition, decompose

__all__ = [
    "CircInstance", "ConditionViolation", "Decomposition", "Graph", "GraphFamily", "GuardError",
    "HypothesisError", "InstanceError", "OtimesInstance", "Partition", "ProductGraph",
    "check_decomposition", "circ_h", "complete_graph", "components", "cycle_graph", "decompose",
    "direct_product", "disjoint_union", "empty_graph", "is_isomorphic", "lex_product",
    "local_union", "min_degree_circ", "otimes_h", "parse_instance", "path_graph", "product_degree",
    "serialize_instance", "sigma_gamma", "stable_partition", "star_graph", "union_graph",
]
__version__ = "0.1.0"
