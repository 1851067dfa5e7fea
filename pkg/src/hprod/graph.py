"""Finite graphs on dense integer vertices, plus the handful of structural
queries every other module leans on (components, 2-colourings, isomorphism).

Vertices are always ``0..order-1``. Edges are stored as ``(u, v)`` with
``u <= v``; ``(v, v)`` is a loop and is only legal when ``allows_loops``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .exceptions import GuardError

ISOMORPHISM_GUARD = 16


def _canon(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset = field(default_factory=frozenset)
    allows_loops: bool = False

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        canon = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge {u}-{v} out of range for order {self.order}")
            if u == v and not self.allows_loops:
                raise ValueError(f"loop at {u} but loops are not allowed")
            canon.add(_canon(u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    # -- adjacency ---------------------------------------------------------

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitset."""
        out = []
        for nbrs in self.adjacency:
            m = 0
            for w in nbrs:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @property
    def vertices(self) -> range:
        return range(self.order)

    @property
    def size(self) -> int:
        return len(self.edges)

    def min_degree(self) -> int:
        if self.order == 0:
            raise ValueError("empty graph has no minimum degree")
        return min(len(a) for a in self.adjacency)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree_sequence(self) -> list[int]:
        return sorted(len(a) for a in self.adjacency)

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def is_complete(self) -> bool:
        n = self.order
        return sum(1 for u, v in self.edges if u != v) == n * (n - 1) // 2

    def is_connected(self) -> bool:
        return len(components(self).blocks) <= 1

    def is_bipartite(self) -> bool:
        return all(b is not None for b in components(self).bipartitions)

    def complement(self) -> "Graph":
        edges = {(u, v) for u, v in combinations(range(self.order), 2)
                 if not self.has_edge(u, v)}
        return Graph(self.order, frozenset(edges))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.order, frozenset((perm[u], perm[v]) for u, v in self.edges),
                     self.allows_loops)

    def with_loops(self) -> "Graph":
        return Graph(self.order, self.edges, True)

    def __repr__(self):
        loops = ", loops" if self.allows_loops else ""
        return f"Graph({self.order}, {self.edge_list()}{loops})"


# -- small named graphs ------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = set()
    offset = 0
    loops = False
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.order
        loops = loops or g.allows_loops
    return Graph(offset, frozenset(edges), loops)


# -- components ----------------------------------------------------------------

@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components; ``bipartitions[i]`` is ``(V1, V2)`` or None.

    V1 is always the side holding the block's smallest vertex.
    """

    blocks: tuple[tuple[int, ...], ...]
    bipartitions: tuple[Optional[tuple[tuple[int, ...], tuple[int, ...]]], ...]

    def component_of(self) -> list[int]:
        n = sum(len(b) for b in self.blocks)
        label = [0] * n
        for i, b in enumerate(self.blocks):
            for v in b:
                label[v] = i
        return label


def components(g: Graph) -> ComponentDecomposition:
    colour = [-1] * g.order
    blocks = []
    parts = []
    for s in range(g.order):
        if colour[s] != -1:
            continue
        colour[s] = 0
        seen = [s]
        bip = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    seen.append(w)
                    queue.append(w)
                elif colour[w] == colour[u]:
                    # catches loops too: w == u
                    bip = False
        seen.sort()
        blocks.append(tuple(seen))
        if bip:
            # s is the smallest vertex of its block and has colour 0
            parts.append((tuple(v for v in seen if colour[v] == 0),
                          tuple(v for v in seen if colour[v] == 1)))
        else:
            parts.append(None)
    return ComponentDecomposition(tuple(blocks), tuple(parts))


def count_components(g: Graph) -> int:
    return len(components(g).blocks)


@dataclass(frozen=True)
class Partition:
    """A partition of ``{0..ground_size-1}`` into nonempty blocks."""

    ground_size: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(set(b))) for b in self.blocks)
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("partition blocks must be nonempty")
            for x in b:
                if not 0 <= x < self.ground_size:
                    raise ValueError(f"element {x} outside ground set")
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen.add(x)
        if len(seen) != self.ground_size:
            raise ValueError("blocks do not cover the ground set")
        object.__setattr__(self, "blocks", blocks)


def stable_partition(f: Graph) -> Partition:
    """Split bipartite components into their two stable sets, keep the rest whole."""
    dec = components(f)
    blocks = []
    for block, bip in zip(dec.blocks, dec.bipartitions):
        if bip is None:
            blocks.append(block)
        else:
            blocks.extend(side for side in bip if side)
    return Partition(f.order, tuple(blocks))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(verts)}
    edges = frozenset((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos)
    return Graph(len(verts), edges, g.allows_loops)


# -- isomorphism ---------------------------------------------------------------

def is_isomorphic(g: Graph, h: Graph, guard: int = ISOMORPHISM_GUARD) -> Optional[tuple[int, ...]]:
    """Return the lexicographically least isomorphism ``g -> h`` or None.

    Plain ordered backtracking; raises GuardError above ``guard`` vertices.
    """
    if max(g.order, h.order) > guard:
        raise GuardError(f"isomorphism search limited to {guard} vertices")
    if g.order != h.order or g.size != h.size or g.degree_sequence() != h.degree_sequence():
        return None
    gl = [g.has_edge(v, v) for v in g.vertices]
    hl = [h.has_edge(v, v) for v in h.vertices]
    if sorted(gl) != sorted(hl):
        return None
    n = g.order
    gdeg = [g.degree(v) for v in g.vertices]
    hdeg = [h.degree(v) for v in h.vertices]
    gadj, hadj = g.adjacency, h.adjacency
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or hdeg[w] != gdeg[v] or hl[w] != gl[v]:
                continue
            if any((u in gadj[v]) != (image[u] in hadj[w]) for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            used[w] = False
        image[v] = -1
        return False

    return tuple(image) if extend(0) else None


def is_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    """Check that ``mapping`` carries the edges of g exactly onto those of h."""
    if g.order != h.order or sorted(mapping) != list(range(h.order)):
        return False
    return {_canon(mapping[u], mapping[v]) for u, v in g.edges} == set(h.edges)
