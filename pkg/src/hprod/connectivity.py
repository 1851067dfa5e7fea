"""Connectivity of the generalized products.

Three routes decide whether an otimes_h product is connected without building
it: the bipartiteness criterion (connected members), the fiber-set
intersection graph (any members), and the partition criterion (nonbipartite
components, or a star base). All of them are checked against plain BFS on
the constructed product in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exceptions import HypothesisError
from .family import CircInstance, OtimesInstance, union_graph
from .graph import Graph, Partition, components, count_components, stable_partition
from .product import min_degree_circ
from .solvers import kappa_exact, lambda_exact


@dataclass(frozen=True)
class SetFamily:
    """Labelled vertex sets over ``{0..ground_size-1}``."""

    ground_size: int
    sets: tuple[tuple[object, frozenset], ...]

    def __post_init__(self):
        labels = set()
        for label, s in self.sets:
            if not s:
                raise ValueError(f"set {label!r} is empty")
            if label in labels:
                raise ValueError(f"duplicate label {label!r}")
            labels.add(label)
            if any(not 0 <= v < self.ground_size for v in s):
                raise ValueError(f"set {label!r} leaves the ground set")

    def __len__(self):
        return len(self.sets)


@dataclass(frozen=True)
class ConnectivityVerdict:
    connected: bool
    component_count: int
    witness: object = None

    def __post_init__(self):
        if self.component_count < 1:
            raise ValueError("component_count must be at least 1")
        if self.connected != (self.component_count == 1):
            raise ValueError("connected must agree with component_count")


def bfs_verdict(g: Graph) -> ConnectivityVerdict:
    n = count_components(g)
    return ConnectivityVerdict(n <= 1, max(n, 1), "BFS")


def _require_connected_base(g: Graph):
    if g.order < 2 or count_components(g) != 1:
        raise HypothesisError("base graph must be nontrivial and connected")


# -- main criterion ------------------------------------------------------------

def predict_otimes_connectivity(inst: OtimesInstance) -> ConnectivityVerdict:
    """Connected iff the base or h(G) is nonbipartite (connected members only).

    When both are bipartite the witness is the vertex set of one of the two
    components, ``(A x C) u (B x D)``.
    """
    g = inst.base
    _require_connected_base(g)
    for idx in sorted(set(inst.h.values())):
        f = inst.family[idx]
        if f.order < 2 or count_components(f) != 1:
            raise HypothesisError(f"member {idx} is not a nontrivial connected graph")
    hg = union_graph(inst)
    gdec, hdec = components(g), components(hg)
    gbip, hbip = gdec.bipartitions[0], hdec.bipartitions[0]
    if gbip is None or hbip is None:
        return ConnectivityVerdict(True, 1, "nonbipartite factor")
    m = inst.inner_order
    (A, B), (C, D) = gbip, hbip
    side = sorted([a * m + x for a in A for x in C] + [b * m + y for b in B for y in D])
    return ConnectivityVerdict(False, 2, tuple(side))


# -- sufficient conditions -----------------------------------------------------

@dataclass(frozen=True)
class ConnectivityCertificate:
    lemma: str            # "one-edge" or "two-edge"
    edges: tuple          # (e,) or (ab, bc)
    case: Optional[str] = None   # "i" / "ii" for the two-edge lemma


def sufficient_connectivity_check(inst: OtimesInstance) -> Optional[ConnectivityCertificate]:
    """Return a certificate when one of the two sufficient lemmas applies."""
    g = inst.base
    _require_connected_base(g)
    for idx in sorted(set(inst.h.values())):
        f = inst.family[idx]
        if f.order == 0 or f.min_degree() < 1:
            raise HypothesisError(f"member {idx} has an isolated vertex")

    decs = {e: components(inst.family[i]) for e, i in inst.h.items()}
    for e in inst.h:
        d = decs[e]
        if len(d.blocks) == 1 and d.bipartitions[0] is None:
            return ConnectivityCertificate("one-edge", (e,))

    for b in g.vertices:
        nbrs = sorted(g.neighbors(b) - {b})
        for a in nbrs:
            ab = (min(a, b), max(a, b))
            dab = decs[ab]
            if len(dab.blocks) != 1 or dab.bipartitions[0] is None:
                continue
            V1, V2 = (set(s) for s in dab.bipartitions[0])
            for c in nbrs:
                if c == a:
                    continue
                bc = (min(b, c), max(b, c))
                for block, bip in zip(decs[bc].blocks, decs[bc].bipartitions):
                    if bip is None:
                        if V1 & set(block) and V2 & set(block):
                            return ConnectivityCertificate("two-edge", (ab, bc), "i")
                    elif any(V1 & set(s) and V2 & set(s) for s in bip):
                        return ConnectivityCertificate("two-edge", (ab, bc), "ii")
    return None


# -- fiber sets and intersection graphs ----------------------------------------

def fiber_sets(inst: OtimesInstance) -> SetFamily:
    """The family of sets S_a(C) over ordered base incidences and components C.

    Labels are ``((min(a,b), max(a,b)), component_index, a)``. A lone vertex
    is a bipartite component with an empty second side, so it contributes a
    singleton on each orientation.
    """
    g, m = inst.base, inst.inner_order
    sets = []
    for a in g.vertices:
        for b in sorted(g.neighbors(a)):
            e = (min(a, b), max(a, b))
            dec = components(inst.member(a, b))
            for ci, (block, bip) in enumerate(zip(dec.blocks, dec.bipartitions)):
                if bip is None:
                    s = {a * m + x for x in block} | {b * m + x for x in block}
                else:
                    s = {a * m + x for x in bip[0]} | {b * m + y for y in bip[1]}
                sets.append(((e, ci, a), frozenset(s)))
    return SetFamily(g.order * m, tuple(sets))


def intersection_graph(fam: SetFamily) -> Graph:
    """One vertex per labelled set, adjacent when the sets meet."""
    # bucket by element rather than comparing all pairs
    holders: dict[int, list[int]] = {}
    for i, (_, s) in enumerate(fam.sets):
        for v in s:
            holders.setdefault(v, []).append(i)
    edges = set()
    for idx in holders.values():
        for p in range(len(idx)):
            for q in range(p + 1, len(idx)):
                edges.add((idx[p], idx[q]))
    return Graph(len(fam.sets), frozenset(edges))


def otimes_connected_via_family(inst: OtimesInstance) -> ConnectivityVerdict:
    _require_connected_base(inst.base)
    fam = fiber_sets(inst)
    dec = components(intersection_graph(fam))
    n = len(dec.blocks)
    if n == 1:
        return ConnectivityVerdict(True, 1, None)
    # witness: the product vertices covered by the first intersection component
    covered = set()
    for i in dec.blocks[0]:
        covered |= fam.sets[i][1]
    return ConnectivityVerdict(False, n, tuple(sorted(covered)))


# -- partitions ----------------------------------------------------------------

def partition_disconnection_witness(parts: Sequence[Partition]) -> Optional[tuple]:
    """Subfamilies with one common proper union, if the blocks' intersection
    graph is disconnected; None otherwise.

    The witness is read off the intersection component holding the first
    block of the first partition.
    """
    if not parts:
        raise ValueError("need at least one partition")
    n = parts[0].ground_size
    if n < 1 or any(p.ground_size != n for p in parts):
        raise ValueError("partitions must share one nonempty ground set")
    labels, sets = [], []
    for i, p in enumerate(parts):
        for j, block in enumerate(p.blocks):
            labels.append((i, j))
            sets.append(((i, j), frozenset(block)))
    dec = components(intersection_graph(SetFamily(n, tuple(sets))))
    if len(dec.blocks) == 1:
        return None
    chosen = dec.blocks[dec.component_of()[0]]
    grouped = [[] for _ in parts]
    for k in chosen:
        i, j = labels[k]
        grouped[i].append(parts[i].blocks[j])
    return tuple(tuple(g) for g in grouped)


def is_star(g: Graph) -> bool:
    n = g.order
    if n < 2 or g.size != n - 1 or g.has_loops:
        return False
    return any(g.degree(v) == n - 1 for v in g.vertices)


def predict_disconnection_via_partitions(inst: OtimesInstance) -> Optional[tuple]:
    """Disconnection witness from stable-set partitions, or None if connected.

    Applies when every component of every assigned member is nonbipartite,
    or when the base is a star and ``h`` hits every family member.
    """
    g = inst.base
    _require_connected_base(g)
    used = sorted(set(inst.h.values()))
    all_nonbip = all(b is None for i in used for b in components(inst.family[i]).bipartitions)
    if all_nonbip:
        parts = [stable_partition(inst.family[inst.h[e]]) for e in sorted(inst.h)]
    elif is_star(g) and len(used) == len(inst.family):
        if any(f.min_degree() < 1 for f in inst.family):
            raise HypothesisError("star criterion needs members without isolated vertices")
        parts = [stable_partition(f) for f in inst.family]
    else:
        raise HypothesisError("needs all-nonbipartite components or a star base with onto h")
    return partition_disconnection_witness(parts)


# -- circ_h connectivity formulas --------------------------------------------

def kappa_circ(inst: CircInstance) -> int:
    g = inst.base
    m = inst.inner_order
    if m is None:
        raise HypothesisError("connectivity formula needs members on a common vertex set")
    if g.order < 1 or count_components(g) != 1:
        raise HypothesisError("base graph must be connected")
    if g.is_complete():
        return (g.order - 1) * m + min(kappa_exact(inst.member(v))[0] for v in g.vertices)
    return kappa_exact(g)[0] * m


def lambda_circ(inst: CircInstance) -> int:
    g = inst.base
    m = inst.inner_order
    if m is None:
        raise HypothesisError("edge-connectivity formula needs members on a common vertex set")
    if g.order < 2 or count_components(g) != 1:
        raise HypothesisError("base graph must be connected of order at least 2")
    if m < 2:
        raise HypothesisError("members must be nontrivial")
    return min(lambda_exact(g)[0] * m * m, min_degree_circ(inst))
