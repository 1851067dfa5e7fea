"""Direct, lexicographic, and the two generalized products.

Vertex layout is part of the contract:

* direct / otimes_h: pair ``(a, x)`` lives at ``a * |V| + x``;
* lexicographic / circ_h: fibers are laid out in base-vertex order, each
  starting at the prefix sum of the earlier fiber sizes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate

from .exceptions import HypothesisError
from .family import CircInstance, OtimesInstance
from .graph import Graph, _canon

KINDS = ("direct", "lexicographic", "otimes_h", "circ_h")


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    kind: str
    index_map: tuple[tuple[int, int], ...]

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {pair: i for i, pair in enumerate(self.index_map)}

    def index(self, a: int, x: int) -> int:
        try:
            return self._index[(a, x)]
        except KeyError:
            raise ValueError(f"({a}, {x}) is not a vertex of this product") from None

    def pair(self, v: int) -> tuple[int, int]:
        return self.index_map[v]

    def fiber(self, a: int) -> list[int]:
        """Product vertices above base vertex ``a``."""
        return [i for i, (b, _) in enumerate(self.index_map) if b == a]

    def inner_fiber(self, x: int) -> list[int]:
        """Product vertices with inner coordinate ``x`` (the G-fiber G_x)."""
        return [i for i, (_, y) in enumerate(self.index_map) if y == x]


def _row_major(n_base: int, n_inner: int) -> tuple[tuple[int, int], ...]:
    return tuple((a, x) for a in range(n_base) for x in range(n_inner))


def direct_product(g: Graph, h: Graph) -> ProductGraph:
    m = h.order
    pairs = _row_major(g.order, m)
    edges = set()
    # straight from the definition, over all vertex pairs
    for i, (a, x) in enumerate(pairs):
        for j in range(i, len(pairs)):
            b, y = pairs[j]
            if g.has_edge(a, b) and h.has_edge(x, y):
                edges.add((i, j))
    loops = g.allows_loops and h.allows_loops
    return ProductGraph(Graph(len(pairs), frozenset(edges), loops), "direct", pairs)


def lex_product(g: Graph, h: Graph) -> ProductGraph:
    pairs = _row_major(g.order, h.order)
    edges = set()
    for i, (a, x) in enumerate(pairs):
        for j in range(i, len(pairs)):
            b, y = pairs[j]
            if g.has_edge(a, b) or (a == b and h.has_edge(x, y)):
                edges.add((i, j))
    loops = g.allows_loops or h.allows_loops
    return ProductGraph(Graph(len(pairs), frozenset(edges), loops), "lexicographic", pairs)


def otimes_h(inst: OtimesInstance) -> ProductGraph:
    g, m = inst.base, inst.inner_order
    edges = set()
    for (a, b), idx in inst.h.items():
        for x, y in inst.family[idx].edges:
            edges.add(_canon(a * m + x, b * m + y))
            edges.add(_canon(a * m + y, b * m + x))
    loops = g.allows_loops and any(f.allows_loops for f in inst.family)
    return ProductGraph(Graph(g.order * m, frozenset(edges), loops), "otimes_h",
                        _row_major(g.order, m))


def circ_offsets(inst: CircInstance) -> list[int]:
    sizes = [inst.member(a).order for a in inst.base.vertices]
    return [0] + list(accumulate(sizes))


def circ_h(inst: CircInstance) -> ProductGraph:
    g = inst.base
    off = circ_offsets(inst)
    pairs = tuple((a, x) for a in g.vertices for x in range(inst.member(a).order))
    edges = set()
    for a, b in g.edges:
        for i in range(off[a], off[a + 1]):
            for j in range(off[b], off[b + 1]):
                edges.add(_canon(i, j))
    for a in g.vertices:
        o = off[a]
        edges.update((o + x, o + y) for x, y in inst.member(a).edges)
    loops = g.allows_loops or any(f.allows_loops for f in inst.family)
    return ProductGraph(Graph(len(pairs), frozenset(edges), loops), "circ_h", pairs)


def product_degree(p: ProductGraph, inst, a: int, x: int) -> int:
    """Degree of ``(a, x)`` from the factor data alone."""
    p.index(a, x)
    g = inst.base
    if isinstance(inst, OtimesInstance):
        return sum(inst.member(a, b).degree(x) for b in g.neighbors(a))
    if isinstance(inst, CircInstance):
        return (sum(inst.member(b).order for b in g.neighbors(a) if b != a)
                + inst.member(a).degree(x))
    raise TypeError("expected an OtimesInstance or CircInstance")


def degree_mismatches(p: ProductGraph, inst) -> list[tuple[int, int, int, int]]:
    """Vertices where the degree formula disagrees with the built graph.

    Each entry is ``(a, x, formula, actual)``; an empty list means agreement.
    """
    bad = []
    for v, (a, x) in enumerate(p.index_map):
        f = product_degree(p, inst, a, x)
        d = p.graph.degree(v)
        if f != d:
            bad.append((a, x, f, d))
    return bad


def min_degree_circ(inst: CircInstance) -> int:
    """Minimum degree of the circ_h product when all members share one order."""
    n = inst.inner_order
    if n is None:
        raise HypothesisError("minimum-degree formula needs members on a common vertex set")
    g = inst.base
    if g.order < 2:
        raise HypothesisError("minimum-degree formula needs a nontrivial base")
    delta = g.min_degree()
    return delta * n + min(inst.member(v).min_degree() for v in g.vertices
                           if g.degree(v) == delta)
