"""Graph families, assignments, and the instances the two products are built from."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .graph import Graph, _canon


@dataclass(frozen=True)
class GraphFamily:
    members: tuple[Graph, ...]

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise ValueError("a family needs at least one member")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i: int) -> Graph:
        return self.members[i]

    def __iter__(self):
        return iter(self.members)

    @property
    def shared_inner_order(self) -> Optional[int]:
        orders = {m.order for m in self.members}
        return orders.pop() if len(orders) == 1 else None


def _edge_map(base: Graph, h: Mapping) -> dict[tuple[int, int], int]:
    out = {}
    for e, idx in h.items():
        key = _canon(*e)
        if key in out and out[key] != idx:
            raise ValueError(f"edge {key[0]}-{key[1]} assigned twice")
        out[key] = int(idx)
    return out


@dataclass(frozen=True, eq=True)
class OtimesInstance:
    """Base graph, family on a common vertex set, and ``h: E(base) -> index``."""

    base: Graph
    family: GraphFamily
    h: Mapping[tuple[int, int], int] = field(hash=False)

    def __post_init__(self):
        if not isinstance(self.family, GraphFamily):
            object.__setattr__(self, "family", GraphFamily(tuple(self.family)))
        if self.family.shared_inner_order is None:
            raise ValueError("otimes family members must share one vertex set")
        h = _edge_map(self.base, self.h)
        for e in self.base.edges:
            if e not in h:
                raise ValueError(f"assignment missing edge {e[0]}-{e[1]}")
        for e, idx in h.items():
            if e not in self.base.edges:
                raise ValueError(f"assignment names non-edge {e[0]}-{e[1]}")
            if not 0 <= idx < len(self.family):
                raise ValueError(f"member index {idx} out of range")
        object.__setattr__(self, "h", dict(sorted(h.items())))

    @property
    def inner_order(self) -> int:
        return self.family.shared_inner_order

    def member(self, a: int, b: int) -> Graph:
        return self.family[self.h[_canon(a, b)]]

    @classmethod
    def constant(cls, base: Graph, member: Graph) -> "OtimesInstance":
        return cls(base, GraphFamily((member,)), {e: 0 for e in base.edges})


@dataclass(frozen=True, eq=True)
class CircInstance:
    """Base graph, family (orders may differ), and ``h: V(base) -> index``."""

    base: Graph
    family: GraphFamily
    h: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.family, GraphFamily):
            object.__setattr__(self, "family", GraphFamily(tuple(self.family)))
        h = tuple(int(i) for i in self.h)
        if len(h) != self.base.order:
            raise ValueError(f"assignment covers {len(h)} of {self.base.order} vertices")
        for v, idx in enumerate(h):
            if not 0 <= idx < len(self.family):
                raise ValueError(f"vertex {v}: member index {idx} out of range")
        object.__setattr__(self, "h", h)

    def member(self, a: int) -> Graph:
        return self.family[self.h[a]]

    @property
    def inner_order(self) -> Optional[int]:
        return self.family.shared_inner_order

    @classmethod
    def constant(cls, base: Graph, member: Graph) -> "CircInstance":
        return cls(base, GraphFamily((member,)), (0,) * base.order)

    @classmethod
    def from_members(cls, base: Graph, members: Sequence[Graph]) -> "CircInstance":
        """One family member per base vertex, in vertex order."""
        return cls(base, GraphFamily(tuple(members)), tuple(range(base.order)))


def _union(order: int, graphs, loops: bool) -> Graph:
    edges = set()
    for g in graphs:
        edges |= g.edges
    return Graph(order, frozenset(edges), loops)


def union_graph(inst: OtimesInstance) -> Graph:
    """h(G): the inner graph carrying every edge used by some base edge."""
    used = [inst.family[i] for i in sorted(set(inst.h.values()))]
    return _union(inst.inner_order, used, any(m.allows_loops for m in inst.family))


def local_union(inst: OtimesInstance, a: int) -> Graph:
    """h(G^a): like union_graph, restricted to base edges at ``a``."""
    if not 0 <= a < inst.base.order:
        raise ValueError(f"base vertex {a} out of range")
    used = [inst.member(a, b) for b in sorted(inst.base.neighbors(a))]
    return _union(inst.inner_order, used, any(m.allows_loops for m in inst.family))


def sigma_gamma(fam: GraphFamily) -> Graph:
    n = fam.shared_inner_order
    if n is None:
        raise ValueError("family members do not share a vertex set")
    return _union(n, fam.members, any(m.allows_loops for m in fam))
