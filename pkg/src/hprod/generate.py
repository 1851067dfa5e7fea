"""Seeded random instances.

The generator is SplitMix64 with its standard constants, so a seed produces
the same instance on any platform and in any implementation that follows
the same draw order:

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out = z ^ (z >> 31)                       (all mod 2**64)

``below(n) = out % n``; ``random() = (out >> 11) / 2**53``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .family import CircInstance, GraphFamily, OtimesInstance
from .graph import Graph, components

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next() % n

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, xs: list) -> list:
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]
        return xs

    def choice(self, xs):
        return xs[self.below(len(xs))]


def _span(r: Union[int, tuple[int, int]]) -> tuple[int, int]:
    return (r, r) if isinstance(r, int) else tuple(r)


def random_graph(rng: SplitMix64, n: int, density: float, connected: bool = False,
                 min_degree: int = 0, nonbipartite: bool = False) -> Graph:
    """G(n, p) plus repairs: a spanning tree, pendant fixes, a triangle."""
    if min_degree not in (0, 1):
        raise ValueError("min_degree must be 0 or 1")
    if density <= 0 and ((connected and n >= 2) or min_degree or nonbipartite):
        raise ValueError("density 0 cannot meet the requested constraints")
    if min_degree and n < 2:
        raise ValueError("min_degree 1 needs at least 2 vertices")
    if nonbipartite and n < 3:
        raise ValueError("a nonbipartite graph needs at least 3 vertices")
    edges = {e for e in combinations(range(n), 2) if rng.random() < density}
    if connected and n >= 2:
        order = rng.shuffle(list(range(n)))
        for i in range(1, n):
            u, v = order[rng.below(i)], order[i]
            edges.add((min(u, v), max(u, v)))
    if min_degree:
        for v in range(n):
            if not any(v in e for e in edges):
                w = rng.below(n - 1)
                w = w + 1 if w >= v else w
                edges.add((min(v, w), max(v, w)))
    g = Graph(n, frozenset(edges))
    if nonbipartite and all(b is not None for b in components(g).bipartitions):
        tri = sorted(rng.shuffle(list(range(n)))[:3])
        edges |= set(combinations(tri, 2))
        g = Graph(n, frozenset(edges))
    return g


@dataclass(frozen=True)
class RandomParams:
    kind: str = "otimes"
    base_order: Union[int, tuple[int, int]] = (2, 5)
    inner_order: Union[int, tuple[int, int]] = (2, 4)
    edge_density: float = 0.5
    family_size: Union[int, tuple[int, int]] = (1, 3)
    base_connected: bool = True
    member_connected: bool = False
    member_min_degree: int = 0
    nonbipartite_rate: float = 0.0
    shared_order: bool = True      # circ only; otimes always shares
    surjective: bool = False       # drop members h never uses

    def __post_init__(self):
        if self.kind not in ("otimes", "circ"):
            raise ValueError("kind must be 'otimes' or 'circ'")
        if not 0.0 <= self.edge_density <= 1.0:
            raise ValueError("edge_density must lie in [0, 1]")
        if not 0.0 <= self.nonbipartite_rate <= 1.0:
            raise ValueError("nonbipartite_rate must lie in [0, 1]")
        for name in ("base_order", "inner_order", "family_size"):
            lo, hi = _span(getattr(self, name))
            if lo > hi or lo < (1 if name != "base_order" else 1):
                raise ValueError(f"{name}: bad range {lo}..{hi}")


def random_instance(seed: int, params: Optional[RandomParams] = None):
    params = params or RandomParams()
    rng = SplitMix64(seed)
    p = params.edge_density
    n = rng.randint(*_span(params.base_order))
    base = random_graph(rng, n, p, connected=params.base_connected)
    k = rng.randint(*_span(params.family_size))
    shared = params.kind == "otimes" or params.shared_order
    m = rng.randint(*_span(params.inner_order))
    members = []
    for _ in range(k):
        mi = m if shared else rng.randint(*_span(params.inner_order))
        nonbip = (mi >= 3 and params.nonbipartite_rate > 0
                  and rng.random() < params.nonbipartite_rate)
        members.append(random_graph(rng, mi, p, connected=params.member_connected,
                                    min_degree=params.member_min_degree, nonbipartite=nonbip))
    if params.kind == "otimes":
        keys = base.edge_list()
    else:
        keys = list(base.vertices)
    picks = [rng.below(k) for _ in keys]
    if params.surjective:
        used = sorted(set(picks), key=picks.index)
        members = [members[i] for i in used] or members[:1]
        picks = [used.index(i) for i in picks]
    fam = GraphFamily(tuple(members))
    if params.kind == "otimes":
        return OtimesInstance(base, fam, dict(zip(keys, picks)))
    return CircInstance(base, fam, tuple(picks))
