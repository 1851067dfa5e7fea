"""Invariants of the generalized products: exact values, bounds, and the
constructive results (clique-realizing assignments, dominating sets, tuple
colourings)."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, NamedTuple, Optional

from .family import CircInstance, GraphFamily, OtimesInstance, local_union, sigma_gamma, union_graph
from .graph import Graph, _canon, complete_graph
from .product import circ_h, circ_offsets
from . import solvers

INVARIANTS = ("alpha", "omega", "chi", "gamma", "gamma_t", "kappa", "lambda", "chi_h")


@dataclass(frozen=True)
class Bound:
    name: str
    value: int
    satisfied: Optional[bool] = None
    hypotheses_met: bool = True


@dataclass
class InvariantReport:
    invariant: str
    value: int
    witness: object = None
    bounds: list[Bound] = field(default_factory=list)
    hypotheses_met: bool = True

    def check_bound(self, name: str, value: int, kind: str, hypotheses_met: bool = True) -> Bound:
        """Record ``value`` as a lower (``kind='lower'``) or upper bound."""
        ok = self.value >= value if kind == "lower" else self.value <= value
        b = Bound(name, value, ok, hypotheses_met)
        self.bounds.append(b)
        return b


_EXACT = {
    "alpha": solvers.independence_number,
    "omega": solvers.clique_number,
    "chi": solvers.chromatic_number,
    "gamma": solvers.domination_number,
    "gamma_t": solvers.total_domination_number,
}


def exact(g: Graph, which: str, guard: Optional[int] = None) -> InvariantReport:
    if which in _EXACT:
        value, witness = _EXACT[which](g, guard=guard)
    elif which == "kappa":
        value, witness = solvers.kappa_exact(g)
    elif which == "lambda":
        value, witness = solvers.lambda_exact(g)
    else:
        raise ValueError(f"unknown invariant {which!r}")
    return InvariantReport(which, value, witness)


def _value(g: Graph, which: str) -> int:
    return _EXACT[which](g, guard=max(g.order, solvers.GUARDS[which]))[0]


# -- independence --------------------------------------------------------------

def alpha_otimes_lower(inst: OtimesInstance) -> int:
    m = inst.inner_order
    return max(_value(inst.base, "alpha") * m, _value(union_graph(inst), "alpha") * inst.base.order)


def alpha_circ(inst: CircInstance) -> InvariantReport:
    """Independence number of the circ_h product from the factors alone.

    Maximum over independent base sets S of the summed member independence
    numbers; witness is the corresponding product vertex set.
    """
    g = inst.base
    member_alpha = [solvers.independence_number(inst.member(a), guard=max(24, inst.member(a).order))
                    for a in g.vertices]
    value, base_set = solvers.max_weight_independent_set(g, [w for w, _ in member_alpha])
    off = circ_offsets(inst)
    witness = tuple(off[a] + x for a in base_set for x in member_alpha[a][1])
    return InvariantReport("alpha", value, witness, hypotheses_met=g.order >= 2)


# -- domination ----------------------------------------------------------------

class GammaLowerBounds(NamedTuple):
    local: int        # gamma(G) + min_a gamma(h(G^a)) - 1
    union: int        # gamma(G) + gamma(h(G)) - 1


def gamma_otimes_lower(inst: OtimesInstance) -> GammaLowerBounds:
    g = inst.base
    gg = _value(g, "gamma")
    local = min(_value(local_union(inst, a), "gamma") for a in g.vertices)
    return GammaLowerBounds(gg + local - 1, gg + _value(union_graph(inst), "gamma") - 1)


def gamma_otimes_upper(inst: OtimesInstance, f: Graph) -> int:
    """3 gamma(G) gamma(F) for a spanning subgraph F common to all used members."""
    if f.order != inst.inner_order:
        raise ValueError("F must live on the shared inner vertex set")
    for idx in sorted(set(inst.h.values())):
        missing = f.edges - inst.family[idx].edges
        if missing:
            u, v = min(missing)
            raise ValueError(f"F edge {u}-{v} is missing from member {idx}")
    return 3 * _value(inst.base, "gamma") * _value(f, "gamma")


def dominating_set_construct(inst: OtimesInstance, D, D_e: Mapping, A, B_e: Mapping) -> tuple[int, ...]:
    """Build (A x U D_e) u (D x U B_e) after validating every input set."""
    g, m = inst.base, inst.inner_order
    D, A = set(D), set(A)
    if not solvers.totally_dominates(g, D):
        raise ValueError("D is not a total dominating set of the base")
    if not A <= D or not solvers.dominates(g, A):
        raise ValueError("A must be a dominating subset of D")
    De = {_canon(*e): set(s) for e, s in D_e.items()}
    Be = {_canon(*e): set(s) for e, s in B_e.items()}
    for e in g.edges:
        f = inst.member(*e)
        if e not in De or not solvers.totally_dominates(f, De[e]):
            raise ValueError(f"D_e for edge {e[0]}-{e[1]} is not totally dominating")
        if e not in Be or not Be[e] <= De[e] or not solvers.dominates(f, Be[e]):
            raise ValueError(f"B_e for edge {e[0]}-{e[1]} must be a dominating subset of D_e")
    d_union = set().union(*De.values()) if De else set()
    b_union = set().union(*Be.values()) if Be else set()
    x = {a * m + v for a in A for v in d_union} | {a * m + v for a in D for v in b_union}
    return tuple(sorted(x))


def gamma_circ_upper(inst: CircInstance) -> tuple[int, tuple[int, ...]]:
    """Cheapest base dominating set, each vertex weighted by gamma of its member."""
    g = inst.base
    weight = [_value(inst.member(a), "gamma") for a in g.vertices]
    best, best_set = None, None
    for size in range(1, g.order + 1):
        # every weight is at least 1
        if best is not None and size >= best:
            break
        for d in combinations(g.vertices, size):
            if solvers.dominates(g, d):
                w = sum(weight[a] for a in d)
                if best is None or w < best:
                    best, best_set = w, d
    return best, best_set


# -- colouring and cliques -----------------------------------------------------

def chi_omega_otimes_bounds(inst: OtimesInstance) -> tuple[int, int]:
    hg = union_graph(inst)
    chi = min(_value(inst.base, "chi"), _value(hg, "chi"))
    omega = min(_value(inst.base, "omega"), _value(hg, "omega"))
    return chi, omega


def clique_realizing_assignment(g: Graph, fam: GraphFamily) -> tuple[dict, int]:
    """An assignment whose product reaches min(omega(G), omega(union of family))."""
    sg = sigma_gamma(fam)
    wg, cg = solvers.clique_number(g, guard=max(24, g.order))
    ws, cs = solvers.clique_number(sg, guard=max(24, sg.order))
    k = min(wg, ws)
    a, x = cg[:k], cs[:k]
    h = {e: 0 for e in g.edges}
    for i, j in combinations(range(k), 2):
        pair = _canon(x[i], x[j])
        idx = next((t for t, f in enumerate(fam) if pair in f.edges), None)
        if idx is None:
            raise AssertionError(f"no member carries {pair}, yet it is an edge of the union")
        h[_canon(a[i], a[j])] = idx
    return h, k


def chi_circ_upper(inst: CircInstance) -> int:
    g = inst.base
    return _value(g, "chi") * max(_value(inst.member(v), "chi") for v in g.vertices)


def reduce_to_complete_fibers(inst: CircInstance) -> CircInstance:
    """Swap each member for the complete graph on chi(member) vertices."""
    chis = [_value(inst.member(v), "chi") for v in inst.base.vertices]
    sizes = sorted(set(chis))
    fam = GraphFamily(tuple(complete_graph(s) for s in sizes))
    return CircInstance(inst.base, fam, tuple(sizes.index(c) for c in chis))


def complete_fiber_instance(g: Graph, demands) -> CircInstance:
    """circ_h instance placing K_{demands[v]} over each base vertex."""
    demands = list(demands)
    sizes = sorted(set(demands))
    fam = GraphFamily(tuple(complete_graph(s) for s in sizes))
    return CircInstance(g, fam, tuple(sizes.index(d) for d in demands))


# -- Kneser graphs and tuple colourings ----------------------------------------

def kneser_subsets(demands, s: int) -> list[frozenset]:
    """All r-subsets of range(s) for each distinct demand r, in colex order."""
    rs = sorted(set(demands))
    for r in rs:
        if r < 1:
            raise ValueError("demands must be positive")
        if r > s:
            raise ValueError(f"demand {r} exceeds palette size {s}")
    subsets = [frozenset(c) for r in rs for c in combinations(range(s), r)]
    return sorted(subsets, key=lambda c: sum(1 << i for i in c))


def kneser_graph(demands, s: int) -> Graph:
    subs = kneser_subsets(demands, s)
    edges = {(i, j) for i, j in combinations(range(len(subs)), 2) if not subs[i] & subs[j]}
    return Graph(len(subs), frozenset(edges))


@dataclass(frozen=True)
class TupleColoring:
    colors_per_vertex: tuple[frozenset, ...]
    palette_size: int

    def is_valid(self, g: Graph, demands) -> bool:
        sets = self.colors_per_vertex
        return (len(sets) == g.order
                and all(len(sets[v]) == demands[v] for v in g.vertices)
                and all(c < self.palette_size for s in sets for c in s)
                and all(not (sets[u] & sets[v]) for u, v in g.edges))


def _tuple_colouring(g: Graph, demands, s: int):
    n = g.order
    sets = [0] * n

    def place(v: int, used: int) -> bool:
        if v == n:
            return True
        d = demands[v]
        forbidden = 0
        for w in g.adjacency[v]:
            if w < v:
                forbidden |= sets[w]
        old = [c for c in range(used) if not forbidden >> c & 1]
        # unused colours are interchangeable, so new ones are taken as a prefix
        for t in range(max(0, d - len(old)), min(d, s - used) + 1):
            new = sum(1 << c for c in range(used, used + t))
            for pick in combinations(old, d - t):
                sets[v] = new | sum(1 << c for c in pick)
                if place(v + 1, used + t):
                    return True
        sets[v] = 0
        return False

    if not place(0, 0):
        return None
    return TupleColoring(tuple(frozenset(solvers._bits(m)) for m in sets), s)


def h_tuple_chromatic(g: Graph, demands, guard: int = 12) -> InvariantReport:
    """Smallest palette admitting a tuple colouring with ``demands[v]`` colours at v."""
    if g.order > guard:
        raise solvers.GuardError(f"tuple colouring limited to {guard} vertices")
    if g.has_loops:
        raise ValueError("tuple colouring expects a loopless graph")
    demands = list(demands)
    if len(demands) != g.order or any(d < 1 for d in demands):
        raise ValueError("need one positive demand per vertex")
    if g.order == 0:
        return InvariantReport("chi_h", 0, TupleColoring((), 0))
    lower = max([max(demands)] + [demands[u] + demands[v] for u, v in g.edges])
    for s in range(lower, sum(demands) + 1):
        tc = _tuple_colouring(g, demands, s)
        if tc is not None:
            return InvariantReport("chi_h", s, tc)
    raise AssertionError("unreachable: sum of demands always suffices")


def tuple_to_product_colouring(g: Graph, demands, tc: TupleColoring) -> tuple[int, ...]:
    """Colour the complete-fiber product: the x-th vertex over a gets the
    x-th smallest colour of a's tuple."""
    colour = []
    for v in g.vertices:
        cs = sorted(tc.colors_per_vertex[v])
        if len(cs) != demands[v]:
            raise ValueError(f"vertex {v} carries {len(cs)} colours, demand {demands[v]}")
        colour.extend(cs)
    return tuple(colour)


def product_to_tuple_colouring(g: Graph, demands, colour) -> TupleColoring:
    """Read a tuple colouring off a proper colouring of the complete-fiber product."""
    inst = complete_fiber_instance(g, demands)
    off = circ_offsets(inst)
    sets = tuple(frozenset(colour[off[a]:off[a + 1]]) for a in g.vertices)
    return TupleColoring(sets, max(colour, default=-1) + 1)
