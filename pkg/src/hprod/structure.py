"""Associativity rewrites and the search for nontrivial otimes_h-decompositions.

The rewrites keep vertex indices untouched: flattening ``((alpha, a), x)``
and ``(alpha, (a, x))`` under the row-major / prefix-sum layouts gives the
same integer, so both sides are compared edge-for-edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .exceptions import ConditionViolation, GuardError
from .family import CircInstance, GraphFamily, OtimesInstance
from .graph import Graph, _canon, is_isomorphic, is_isomorphism
from .product import circ_h, direct_product, lex_product, otimes_h

DECOMPOSE_GUARD = 12


# -- associativity -------------------------------------------------------------

def assoc_otimes_left(g: Graph, inner: OtimesInstance) -> OtimesInstance:
    """G x (H x_h F)  ->  (G x H) x_h' F with h'((al,a)(be,b)) = h(ab)."""
    H, nh = inner.base, inner.base.order
    base = direct_product(g, H).graph
    h = {}
    for u, v in base.edges:
        (_, a), (_, b) = divmod(u, nh), divmod(v, nh)
        h[(u, v)] = inner.h[_canon(a, b)]
    return OtimesInstance(base, inner.family, h)


def assoc_otimes_right(g: Graph, H: Graph, inst: OtimesInstance) -> tuple[GraphFamily, dict]:
    """(G x H) x_h F  ->  G x_h' F' where F' collects H x_{h_ab} F per base edge.

    Needs h((al,a)(be,b)) == h((al,b)(be,a)); otherwise raises
    ConditionViolation carrying ``(alpha, beta, a, b)``.
    """
    nh = H.order
    if inst.base != direct_product(g, H).graph:
        raise ValueError("instance base is not the direct product of g and H")
    members, h_prime = [], {}
    for al, be in g.edge_list():
        local = {}
        for a, b in H.edge_list():
            e1 = _canon(al * nh + a, be * nh + b)
            e2 = _canon(al * nh + b, be * nh + a)
            if inst.h[e1] != inst.h[e2]:
                raise ConditionViolation("assignment is not symmetric across the factors",
                                         (al, be, a, b))
            local[(a, b)] = inst.h[e1]
        h_prime[(al, be)] = len(members)
        members.append(otimes_h(OtimesInstance(H, inst.family, local)).graph)
    if not members:
        # edgeless G: any placeholder member on the right vertex set will do
        members.append(Graph(nh * inst.inner_order))
    return GraphFamily(tuple(members)), h_prime


def assoc_circ_left(g: Graph, inner: CircInstance) -> CircInstance:
    """G o (H o_h F)  ->  (G o H) o_h' F with h'(al, a) = h(a)."""
    H = inner.base
    base = lex_product(g, H).graph
    return CircInstance(base, inner.family, tuple(inner.h[v % H.order] for v in base.vertices))


def assoc_circ_right(g: Graph, H: Graph, inst: CircInstance) -> tuple[GraphFamily, tuple[int, ...]]:
    """(G o H) o_h F  ->  G o_h' F' with F'[al] = H o_{h_al} F."""
    nh = H.order
    if inst.base != lex_product(g, H).graph:
        raise ValueError("instance base is not the lexicographic product of g and H")
    members = []
    for al in g.vertices:
        local = inst.h[al * nh:(al + 1) * nh]
        members.append(circ_h(CircInstance(H, inst.family, local)).graph)
    if not members:
        members.append(Graph(0))
    return GraphFamily(tuple(members)), tuple(range(g.order))


# -- decompositions ------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    base: Graph
    family: GraphFamily
    h: dict
    blocks: tuple[tuple[int, ...], ...]
    bijections: tuple[tuple[int, ...], ...]   # bijections[i][s] = phi_i(blocks[0][s])

    @property
    def instance(self) -> OtimesInstance:
        return OtimesInstance(self.base, self.family, self.h)

    def vertex_map(self) -> tuple[int, ...]:
        """Input vertex v -> product index of (a_i, phi_i^{-1}(v))."""
        l = len(self.blocks[0])
        out = {}
        for i, phi in enumerate(self.bijections):
            for s, v in enumerate(phi):
                out[v] = i * l + s
        return tuple(out[v] for v in range(len(out)))


def _violation(g: Graph, phis, loops: bool):
    """First failure of the decomposition conditions, or None."""
    k, l = len(phis), len(phis[0])
    for i in range(k):
        for j in range(i, k):
            for s in range(l):
                if not loops and g.has_edge(phis[i][s], phis[j][s]):
                    return ("loop", i, j, s, s)
                for t in range(s + 1, l):
                    if g.has_edge(phis[i][s], phis[j][t]) != g.has_edge(phis[i][t], phis[j][s]):
                        return ("symmetry", i, j, s, t)
    if not loops:
        for i, phi in enumerate(phis):
            for s, t in combinations(range(l), 2):
                if g.has_edge(phi[s], phi[t]):
                    return ("independence", i, i, s, t)
    return None


def check_decomposition(g: Graph, blocks: Sequence[Sequence[int]],
                        bijections: Sequence[Sequence[int]], loops: bool = False) -> Decomposition:
    """Validate blocks + bijections and build H, the members F_ij, and h.

    ``bijections[i][s]`` is the image of ``blocks[0][s]`` in block i. Raises
    ConditionViolation with ``(kind, i, j, s, t)`` when a condition fails.
    """
    blocks = tuple(tuple(b) for b in blocks)
    phis = tuple(tuple(p) for p in bijections)
    k = len(blocks)
    if k < 2:
        raise ValueError("a nontrivial decomposition needs at least two blocks")
    l = len(blocks[0])
    if any(len(b) != l for b in blocks):
        raise ValueError("blocks must have equal size")
    if sorted(v for b in blocks for v in b) != list(range(g.order)):
        raise ValueError("blocks must partition the vertex set")
    if len(phis) != k or any(sorted(p) != sorted(b) for p, b in zip(phis, blocks)):
        raise ValueError("bijections[i] must enumerate block i")
    if g.has_loops:
        raise ValueError("input graph must be loopless")
    bad = _violation(g, phis, loops)
    if bad is not None:
        raise ConditionViolation(f"decomposition condition fails: {bad[0]}", bad)

    where = {v: i for i, b in enumerate(blocks) for v in b}
    h_edges = set()
    for u, v in g.edges:
        h_edges.add(_canon(where[u], where[v]))
    H = Graph(k, frozenset(h_edges), allows_loops=loops)
    members, h = [], {}
    for i, j in sorted(h_edges):
        f_edges = {(s, t) for s in range(l) for t in range(l)
                   if g.has_edge(phis[i][s], phis[j][t])}
        f = Graph(l, frozenset(f_edges), allows_loops=loops)
        h[(i, j)] = len(members)
        members.append(f)
    if not members:
        members.append(Graph(l))
    dec = Decomposition(H, GraphFamily(tuple(members)), h, blocks, phis)
    rebuilt = otimes_h(dec.instance).graph
    if not is_isomorphism(g, rebuilt, dec.vertex_map()):
        raise AssertionError("reconstruction does not match the input")
    return dec


def decompose(g: Graph, k: int, loops: bool = False, guard: int = DECOMPOSE_GUARD,
              stats: Optional[dict] = None) -> Optional[Decomposition]:
    """Exhaustive search for a decomposition into ``k`` equal blocks.

    Block 1 holds vertex 0 and phi_1 is the identity (any solution can be
    rewritten that way); every later block holds the smallest unused vertex.
    Returns the first hit in that order, or None. Pass a dict as ``stats``
    to receive the number of search nodes and first blocks tried.
    """
    n = g.order
    if n > guard:
        raise GuardError(f"decomposition search limited to {guard} vertices")
    if k < 2 or n % k:
        raise ValueError(f"k={k} must be at least 2 and divide the order {n}")
    if g.has_loops:
        raise ValueError("input graph must be loopless")
    l = n // k
    adj = g.has_edge
    stats = {} if stats is None else stats
    stats.update(nodes=0, first_blocks=0)

    def fits(phis, cur, s, w) -> bool:
        # cur[:s] already placed in the block under construction, w is phi(u_s)
        stats["nodes"] += 1
        if not loops:
            if any(adj(w, cur[t]) for t in range(s)):
                return False
            if any(adj(w, p[s]) for p in phis):
                return False
        # condition against every finished block; within one block it is vacuous
        for p in phis:
            for t in range(s):
                if adj(w, p[t]) != adj(cur[t], p[s]):
                    return False
        return True

    def grow(phis, free) -> Optional[tuple]:
        if not free:
            return phis
        anchor = min(free)
        cur = [None] * l

        def place(s, avail, have_anchor):
            if s == l:
                if not have_anchor:
                    return None
                return grow(phis + (tuple(cur),), avail)
            # anchor must still fit in the remaining slots
            for w in sorted(avail):
                if not have_anchor and w != anchor and l - s == 1:
                    continue
                if fits(phis, cur, s, w):
                    cur[s] = w
                    found = place(s + 1, avail - {w}, have_anchor or w == anchor)
                    if found is not None:
                        return found
            cur[s] = None
            return None

        return place(0, free, False)

    others = list(range(1, n))
    for rest in combinations(others, l - 1):
        first = (0,) + rest
        if not loops and any(adj(u, v) for u, v in combinations(first, 2)):
            continue
        stats["first_blocks"] += 1
        found = grow((first,), frozenset(range(n)) - set(first))
        if found is not None:
            blocks = [tuple(sorted(p)) for p in found]
            return check_decomposition(g, blocks, found, loops)
    return None


def is_reconstruction_isomorphic(g: Graph, dec: Decomposition) -> bool:
    """Independent check via backtracking isomorphism (no use of the map)."""
    rebuilt = otimes_h(dec.instance).graph
    return is_isomorphic(g, rebuilt, guard=max(16, g.order)) is not None
