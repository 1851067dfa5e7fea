"""Seeded theorem-verification suites.

Each suite maps a seed to one :class:`VerifyReport`. A report is
``confirmed`` when every applicable check passed, ``hypothesis-unmet`` when
the generated instance falls outside the statement being checked, and
``VIOLATION`` otherwise; violations carry the instance document so they can
be replayed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from . import connectivity as conn
from . import invariants as inv
from . import solvers
from . import structure
from .exceptions import HypothesisError
from .family import CircInstance, GraphFamily, OtimesInstance, sigma_gamma
from .generate import RandomParams, SplitMix64, random_graph, random_instance
from .graph import (Graph, Partition, complete_graph, components, count_components,
                    disjoint_union, is_isomorphic, star_graph)
from .io import graph_to_obj, instance_to_obj
from .product import (circ_h, degree_mismatches, direct_product, lex_product,
                      min_degree_circ, otimes_h)

CONFIRMED = "confirmed"
UNMET = "hypothesis-unmet"
VIOLATION = "VIOLATION"

DENSITIES = (0.2, 0.35, 0.5, 0.7)


@dataclass
class VerifyReport:
    theorem: str
    source: str
    status: str
    details: dict = field(default_factory=dict)

    def to_obj(self) -> dict:
        return {"theorem": self.theorem, "source": self.source,
                "status": self.status, "details": self.details}


class _Check:
    def __init__(self, suite: str, seed: int):
        self.suite, self.seed = suite, seed
        self.problems: list[str] = []
        self.details: dict = {}
        self.document = None
        self.unmet = False

    def expect(self, ok: bool, msg: str):
        if not ok:
            self.problems.append(msg)

    def degrees(self, p, inst):
        bad = degree_mismatches(p, inst)
        self.expect(not bad, f"degree formula mismatch at {bad[:3]}")
        self.details["degree_checks"] = self.details.get("degree_checks", 0) + p.graph.order
        if isinstance(inst, CircInstance) and inst.inner_order is not None and inst.base.order >= 2:
            self.expect(min_degree_circ(inst) == p.graph.min_degree(), "minimum-degree formula mismatch")

    def report(self) -> VerifyReport:
        if self.problems:
            status = VIOLATION
            self.details["problems"] = self.problems
            if self.document is not None:
                self.details["instance"] = self.document
        elif self.unmet:
            status = UNMET
        else:
            status = CONFIRMED
        return VerifyReport(self.suite, f"seed={self.seed}", status, self.details)


def _bfs(g: Graph):
    return conn.bfs_verdict(g)


def _doc(inst):
    return instance_to_obj(inst)


# -- connectivity suites ---------------------------------------------------------

def suite_weichsel(seed: int) -> VerifyReport:
    ck = _Check("weichsel", seed)
    rng = SplitMix64(seed)
    p = DENSITIES[seed % 4]
    G = random_graph(rng, rng.randint(2, 5), p, connected=True)
    H = random_graph(rng, rng.randint(2, 5), p, connected=True)
    inst = OtimesInstance.constant(G, H)
    ck.document = _doc(inst)
    prod = direct_product(G, H)
    n = count_components(prod.graph)
    gb, hb = G.is_bipartite(), H.is_bipartite()
    ck.expect((n == 1) == (not (gb and hb)), "connectivity differs from 'some factor nonbipartite'")
    if gb and hb:
        ck.expect(n == 2, f"bipartite x bipartite gave {n} components")
    ck.degrees(prod, inst)
    if hb:
        V1, V2 = components(H).bipartitions[0]
        k2 = direct_product(complete_graph(2), H)
        m = H.order
        expected = sorted([sorted([x for x in V1] + [m + y for y in V2]),
                           sorted([x for x in V2] + [m + y for y in V1])])
        got = sorted(list(b) for b in components(k2.graph).blocks)
        ck.expect(got == expected, "K2 x H components are not the two oriented sides")
    ck.details.update(components=n, base_bipartite=gb, inner_bipartite=hb)
    return ck.report()


def suite_otimes_connectivity(seed: int) -> VerifyReport:
    ck = _Check("otimes-connectivity", seed)
    params = RandomParams("otimes", base_order=(2, 6), inner_order=(2, 5),
                          edge_density=DENSITIES[seed % 4], member_connected=True,
                          nonbipartite_rate=0.0 if seed % 3 else 0.5)
    inst = random_instance(seed, params)
    ck.document = _doc(inst)
    prod = otimes_h(inst)
    ck.degrees(prod, inst)
    bfs = _bfs(prod.graph)
    pred = conn.predict_otimes_connectivity(inst)
    ck.expect(pred.connected == bfs.connected, "predicted connectivity differs from BFS")
    ck.expect(pred.component_count == bfs.component_count,
              f"predicted {pred.component_count} components, BFS found {bfs.component_count}")
    if not pred.connected:
        blocks = {tuple(b) for b in components(prod.graph).blocks}
        ck.expect(tuple(pred.witness) in blocks, "witness is not a component of the product")
    ck.details.update(connected=bfs.connected)
    return ck.report()


def suite_fiber_family(seed: int, min_degree: int = 1) -> VerifyReport:
    ck = _Check("fiber-family" if min_degree else "fiber-family-isolated", seed)
    params = RandomParams("otimes", base_order=(2, 6), inner_order=(2, 5),
                          edge_density=DENSITIES[seed % 4] * 0.6,
                          member_min_degree=min_degree, family_size=(1, 3))
    inst = random_instance(seed, params)
    ck.document = _doc(inst)
    prod = otimes_h(inst)
    ck.degrees(prod, inst)
    bfs = _bfs(prod.graph)
    got = conn.otimes_connected_via_family(inst)
    ck.expect(got.connected == bfs.connected, "intersection-graph verdict differs from BFS")
    ck.expect(got.component_count == bfs.component_count,
              f"intersection graph has {got.component_count} components, product {bfs.component_count}")
    ck.details.update(connected=bfs.connected)
    return ck.report()


def suite_sufficient(seed: int) -> VerifyReport:
    ck = _Check("sufficient", seed)
    params = RandomParams("otimes", base_order=(2, 6), inner_order=(2, 5),
                          edge_density=DENSITIES[seed % 4] * 0.7, member_min_degree=1)
    inst = random_instance(seed, params)
    ck.document = _doc(inst)
    cert = conn.sufficient_connectivity_check(inst)
    prod = otimes_h(inst)
    ck.degrees(prod, inst)
    if cert is not None:
        ck.expect(_bfs(prod.graph).connected, f"certificate {cert} but product is disconnected")
    ck.details.update(certificate=None if cert is None else [cert.lemma, cert.case])
    return ck.report()


def random_partition(rng: SplitMix64, n: int) -> Partition:
    labels = [rng.below(n) for _ in range(n)]
    groups: dict[int, list[int]] = {}
    for x, lab in enumerate(labels):
        groups.setdefault(lab, []).append(x)
    return Partition(n, tuple(groups[k] for k in sorted(groups)))


def partition_witness_exists_bruteforce(parts) -> bool:
    """Is some proper nonempty subset a union of blocks in every partition?"""
    n = parts[0].ground_size
    for mask in range(1, (1 << n) - 1):
        ok = True
        for p in parts:
            for b in p.blocks:
                inside = sum(1 for x in b if mask >> x & 1)
                if inside not in (0, len(b)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def witness_satisfies_condition(parts, witness) -> bool:
    n = parts[0].ground_size
    unions = []
    for p, sub in zip(parts, witness):
        if not sub:
            return False
        if any(tuple(b) not in p.blocks for b in sub):
            return False
        unions.append(frozenset(x for b in sub for x in b))
    return len(set(unions)) == 1 and len(unions[0]) < n


def suite_partitions(seed: int) -> VerifyReport:
    ck = _Check("partitions", seed)
    rng = SplitMix64(seed)
    n = rng.randint(1, 6)
    parts = [random_partition(rng, n) for _ in range(rng.randint(1, 3))]
    ck.document = {"ground_size": n, "partitions": [[list(b) for b in p.blocks] for p in parts]}
    blocks = [frozenset(b) for p in parts for b in p.blocks]
    edges = {(i, j) for i, j in combinations(range(len(blocks)), 2) if blocks[i] & blocks[j]}
    disconnected = count_components(Graph(len(blocks), frozenset(edges))) > 1
    wit = conn.partition_disconnection_witness(parts)
    ck.expect((wit is not None) == disconnected, "witness existence differs from disconnection")
    ck.expect((wit is not None) == partition_witness_exists_bruteforce(parts),
              "witness existence differs from exhaustive subfamily search")
    if wit is not None:
        ck.expect(witness_satisfies_condition(parts, wit), "witness fails the equal proper union condition")
    ck.details.update(disconnected=disconnected)
    return ck.report()


def _nonbipartite_pieces(rng: SplitMix64, m: int) -> Graph:
    """A graph on m vertices all of whose components are nonbipartite."""
    sizes = []
    left = m
    while left >= 6 and rng.below(2):
        s = rng.randint(3, left - 3)
        sizes.append(s)
        left -= s
    sizes.append(left)
    pieces = [random_graph(rng, s, 0.5, connected=True, nonbipartite=True) for s in sizes]
    g = disjoint_union(*pieces)
    return g.relabel(rng.shuffle(list(range(m))))


def suite_partition_criteria(seed: int) -> VerifyReport:
    ck = _Check("partition-criteria", seed)
    rng = SplitMix64(seed)
    if seed % 2 == 0:
        # every component of every member nonbipartite
        base = random_graph(rng, rng.randint(2, 5), 0.5, connected=True)
        m = rng.randint(3, 7)
        fam = [_nonbipartite_pieces(rng, m) for _ in range(rng.randint(1, 3))]
        if rng.below(3) == 0:
            fam = [fam[0]] * len(fam)
        h = {e: rng.below(len(fam)) for e in base.edge_list()}
    else:
        base = star_graph(rng.randint(1, 4))
        m = rng.randint(2, 5)
        k = rng.randint(1, base.size)
        fam = [random_graph(rng, m, 0.4, min_degree=1) for _ in range(k)]
        order = rng.shuffle(list(range(base.size)))
        picks = [0] * base.size
        for pos, slot in enumerate(order):
            picks[slot] = pos if pos < k else rng.below(k)
        h = dict(zip(base.edge_list(), picks))
    inst = OtimesInstance(base, GraphFamily(tuple(fam)), h)
    ck.document = _doc(inst)
    wit = conn.predict_disconnection_via_partitions(inst)
    prod = otimes_h(inst)
    ck.degrees(prod, inst)
    bfs = _bfs(prod.graph)
    ck.expect((wit is not None) == (not bfs.connected), "partition criterion disagrees with BFS")
    ck.details.update(case="A" if seed % 2 == 0 else "B", connected=bfs.connected)
    return ck.report()


def suite_kappa_circ(seed: int) -> VerifyReport:
    ck = _Check("kappa-circ", seed)
    rng = SplitMix64(seed)
    n = rng.randint(2, 5)
    base = complete_graph(n) if seed % 4 == 0 else random_graph(rng, n, DENSITIES[seed % 4], connected=True)
    m = rng.randint(2, 4)
    fam = GraphFamily(tuple(random_graph(rng, m, DENSITIES[(seed // 4) % 4])
                            for _ in range(rng.randint(1, 3))))
    inst = CircInstance(base, fam, tuple(rng.below(len(fam)) for _ in range(n)))
    ck.document = _doc(inst)
    prod = circ_h(inst)
    ck.degrees(prod, inst)
    k_formula, k_exact = conn.kappa_circ(inst), solvers.kappa_exact(prod.graph)[0]
    l_formula, l_exact = conn.lambda_circ(inst), solvers.lambda_exact(prod.graph)[0]
    ck.expect(k_formula == k_exact, f"kappa formula {k_formula} != exact {k_exact}")
    ck.expect(l_formula == l_exact, f"lambda formula {l_formula} != exact {l_exact}")
    ck.details.update(kappa=k_exact, lam=l_exact)
    return ck.report()


# -- invariant suites ------------------------------------------------------------

def _circ_params(seed: int, **kw) -> RandomParams:
    base = dict(kind="circ", base_order=(2, 5), inner_order=(1, 4), shared_order=False,
                base_connected=False, edge_density=DENSITIES[seed % 4])
    base.update(kw)
    return RandomParams(**base)


def _otimes_params(seed: int, **kw) -> RandomParams:
    base = dict(kind="otimes", base_order=(2, 5), inner_order=(2, 4), base_connected=False,
                edge_density=DENSITIES[seed % 4])
    base.update(kw)
    return RandomParams(**base)


def suite_alpha_circ(seed: int) -> VerifyReport:
    ck = _Check("alpha-circ", seed)
    inst = random_instance(seed, _circ_params(seed))
    ck.document = _doc(inst)
    prod = circ_h(inst)
    ck.degrees(prod, inst)
    rep = inv.alpha_circ(inst)
    exact = solvers.independence_number(prod.graph)[0]
    ck.expect(rep.value == exact, f"alpha formula {rep.value} != exact {exact}")
    w = set(rep.witness)
    ck.expect(len(w) == rep.value and not any(u in w and v in w for u, v in prod.graph.edges),
              "alpha witness is not an independent set of the claimed size")
    ck.details.update(alpha=exact)
    return ck.report()


def suite_alpha_otimes(seed: int) -> VerifyReport:
    ck = _Check("alpha-otimes", seed)
    inst = random_instance(seed, _otimes_params(seed))
    ck.document = _doc(inst)
    prod = otimes_h(inst)
    ck.degrees(prod, inst)
    bound, exact = inv.alpha_otimes_lower(inst), solvers.independence_number(prod.graph)[0]
    ck.expect(exact >= bound, f"alpha {exact} below lower bound {bound}")
    ck.details.update(alpha=exact, bound=bound)
    return ck.report()


def _trim(g: Graph, s, keep: Callable) -> tuple:
    """Drop vertices from s in index order while ``keep(g, rest)`` holds."""
    s = list(s)
    for v in list(s):
        rest = [u for u in s if u != v]
        if rest and keep(g, rest):
            s = rest
    return tuple(s)


def _common_subgraph(rng: SplitMix64, inst: OtimesInstance, thin: bool) -> Graph:
    used = [inst.family[i] for i in sorted(set(inst.h.values()))] or list(inst.family)
    common = frozenset.intersection(*(f.edges for f in used))
    if thin:
        common = frozenset(e for e in sorted(common) if rng.below(2))
    return Graph(inst.inner_order, common)


def suite_domination(seed: int) -> VerifyReport:
    ck = _Check("domination", seed)
    rng = SplitMix64(seed ^ 0x5EED)
    inst = random_instance(seed, _otimes_params(seed, member_min_degree=seed % 2,
                                                base_connected=bool(seed % 2)))
    ck.document = _doc(inst)
    g, prod = inst.base, otimes_h(inst)
    pg = prod.graph
    ck.degrees(prod, inst)
    gamma = solvers.domination_number(pg)[0]
    lower = inv.gamma_otimes_lower(inst)
    ck.expect(lower.local >= lower.union, "local-union bound below union bound")
    ck.expect(gamma >= lower.local, f"gamma {gamma} below bound {lower.local}")
    skipped = []
    if pg.min_degree() >= 1:
        gamma_t = solvers.total_domination_number(pg)[0]
        ck.expect(gamma_t >= lower.local, f"gamma_t {gamma_t} below bound {lower.local}")
    else:
        skipped.append("gamma_t")
    used = [inst.family[i] for i in set(inst.h.values())]
    if g.size and g.min_degree() >= 1 and all(f.min_degree() >= 1 for f in used):
        D = solvers.total_domination_number(g)[1]
        A = _trim(g, D, solvers.dominates)
        De, Be = {}, {}
        for e in g.edge_list():
            f = inst.member(*e)
            De[e] = solvers.total_domination_number(f)[1]
            Be[e] = _trim(f, De[e], solvers.dominates)
        X = inv.dominating_set_construct(inst, D, De, A, Be)
        ck.expect(solvers.dominates(pg, X), "constructed X does not dominate the product")
        ck.expect(gamma <= len(X), "gamma exceeds |X|")
    else:
        skipped.append("construction")
    F = _common_subgraph(rng, inst, thin=bool(seed % 3 == 0))
    upper = inv.gamma_otimes_upper(inst, F)
    isolated = g.min_degree() < 1 or F.min_degree() < 1
    ck.expect(gamma <= upper, f"gamma {gamma} above 3 gamma(G) gamma(F) = {upper}"
              + (" (a factor has isolated vertices)" if isolated else ""))
    ck.details.update(gamma=gamma, lower=list(lower), upper=upper, skipped=skipped,
                      isolated_factor=isolated)
    return ck.report()


def suite_gamma_circ(seed: int) -> VerifyReport:
    ck = _Check("gamma-circ", seed)
    inst = random_instance(seed, _circ_params(seed))
    ck.document = _doc(inst)
    prod = circ_h(inst)
    ck.degrees(prod, inst)
    gamma = solvers.domination_number(prod.graph)[0]
    bound, _ = inv.gamma_circ_upper(inst)
    ck.expect(gamma <= bound, f"gamma {gamma} above bound {bound}")
    ck.details.update(gamma=gamma, bound=bound)
    return ck.report()


def suite_chromatic_otimes(seed: int) -> VerifyReport:
    ck = _Check("chromatic-otimes", seed)
    inst = random_instance(seed, _otimes_params(seed))
    ck.document = _doc(inst)
    prod = otimes_h(inst)
    ck.degrees(prod, inst)
    pg = prod.graph
    chi_b, omega_b = inv.chi_omega_otimes_bounds(inst)
    chi, omega = solvers.chromatic_number(pg)[0], solvers.clique_number(pg)[0]
    ck.expect(chi <= chi_b, f"chi {chi} above bound {chi_b}")
    ck.expect(omega <= omega_b, f"omega {omega} above bound {omega_b}")
    ck.details.update(chi=chi, omega=omega)
    return ck.report()


def suite_geller_sahl(seed: int) -> VerifyReport:
    ck = _Check("geller-sahl", seed)
    inst = random_instance(seed, _circ_params(seed, inner_order=(1, 5)))
    ck.document = _doc(inst)
    prod = circ_h(inst)
    ck.degrees(prod, inst)
    reduced = inv.reduce_to_complete_fibers(inst)
    rprod = circ_h(reduced)
    ck.degrees(rprod, reduced)
    a = solvers.chromatic_number(prod.graph, guard=25)[0]
    b = solvers.chromatic_number(rprod.graph, guard=25)[0]
    ck.expect(a == b, f"chi {a} != chi of complete-fiber reduction {b}")
    upper = inv.chi_circ_upper(inst)
    ck.expect(a <= upper, f"chi {a} above chi(G) max chi(h(v)) = {upper}")
    ck.details.update(chi=a, upper=upper)
    return ck.report()


def _random_family(rng: SplitMix64, seed: int) -> GraphFamily:
    m = rng.randint(2, 5)
    return GraphFamily(tuple(random_graph(rng, m, DENSITIES[seed % 4])
                             for _ in range(rng.randint(1, 3))))


def suite_clique_realization(seed: int) -> VerifyReport:
    ck = _Check("clique-realization", seed)
    rng = SplitMix64(seed)
    g = random_graph(rng, rng.randint(2, 6), DENSITIES[(seed // 4) % 4])
    fam = _random_family(rng, seed)
    h, k = inv.clique_realizing_assignment(g, fam)
    inst = OtimesInstance(g, fam, h)
    ck.document = _doc(inst)
    prod = otimes_h(inst)
    ck.degrees(prod, inst)
    pg = prod.graph
    omega = solvers.clique_number(pg, guard=30)[0]
    target = min(solvers.clique_number(g)[0], solvers.clique_number(sigma_gamma(fam))[0])
    ck.expect(k == target, f"k={k} but min(omega(G), omega(sum)) = {target}")
    ck.expect(omega == k, f"omega of product {omega} != {k}")
    ck.details.update(omega=omega)
    return ck.report()


def suite_clique_chromatic(seed: int) -> VerifyReport:
    ck = _Check("clique-chromatic", seed)
    rng = SplitMix64(seed)
    fam = _random_family(rng, seed)
    n = solvers.clique_number(sigma_gamma(fam))[0]
    g = complete_graph(n)
    h, k = inv.clique_realizing_assignment(g, fam)
    inst = OtimesInstance(g, fam, h)
    ck.document = _doc(inst)
    prod = otimes_h(inst)
    ck.degrees(prod, inst)
    chi = solvers.chromatic_number(prod.graph, guard=25)[0]
    ck.expect(k == n and chi == n, f"chi(K_{n} x_h F) = {chi}, expected {n}")
    ck.details.update(n=n, chi=chi)
    return ck.report()


def suite_tuple_colouring(seed: int) -> VerifyReport:
    ck = _Check("tuple-colouring", seed)
    rng = SplitMix64(seed)
    g = random_graph(rng, rng.randint(1, 6), DENSITIES[seed % 4])
    demands = [1] * g.order if seed % 5 == 0 else [rng.randint(1, 3) for _ in g.vertices]
    ck.document = {"graph": graph_to_obj(g), "demands": demands}
    rep = inv.h_tuple_chromatic(g, demands)
    ck.expect(rep.witness.is_valid(g, demands), "tuple colouring is invalid")
    cf = inv.complete_fiber_instance(g, demands)
    prod = circ_h(cf)
    ck.degrees(prod, cf)
    pg = prod.graph
    chi, col = solvers.chromatic_number(pg)
    ck.expect(rep.value == chi, f"chi_h {rep.value} != chi of complete-fiber product {chi}")
    forward = inv.tuple_to_product_colouring(g, demands, rep.witness)
    ck.expect(solvers.is_proper_colouring(pg, forward), "tuple colouring does not lift to the product")
    back = inv.product_to_tuple_colouring(g, demands, col)
    ck.expect(back.is_valid(g, demands) and back.palette_size == chi,
              "product colouring does not give a tuple colouring")
    if all(d == 1 for d in demands):
        ck.expect(rep.value == solvers.chromatic_number(g)[0], "unit demands do not reproduce chi")
    ck.details.update(chi_h=rep.value)
    return ck.report()


def suite_monotonicity(seed: int) -> VerifyReport:
    ck = _Check("monotonicity", seed)
    rng = SplitMix64(seed)
    inst = random_instance(seed, _otimes_params(seed))
    ck.document = _doc(inst)
    idx = rng.below(len(inst.family))
    f = inst.family[idx]
    missing = [e for e in combinations(range(f.order), 2) if e not in f.edges]
    if not missing:
        ck.unmet = True
        return ck.report()
    bigger = Graph(f.order, f.edges | {rng.choice(missing)})
    fam = list(inst.family)
    fam[idx] = bigger
    inst2 = OtimesInstance(inst.base, GraphFamily(tuple(fam)), inst.h)
    q1, q2 = otimes_h(inst), otimes_h(inst2)
    ck.degrees(q1, inst)
    ck.degrees(q2, inst2)
    p1, p2 = q1.graph, q2.graph
    ck.expect(p1.edges <= p2.edges, "product edges are not monotone")
    ck.expect(solvers.chromatic_number(p2)[0] >= solvers.chromatic_number(p1)[0], "chi decreased")
    ck.expect(solvers.clique_number(p2)[0] >= solvers.clique_number(p1)[0], "omega decreased")
    ck.expect(solvers.independence_number(p2)[0] <= solvers.independence_number(p1)[0], "alpha increased")
    return ck.report()


# -- structural suites -------------------------------------------------------------

def suite_assoc_otimes_left(seed: int) -> VerifyReport:
    ck = _Check("assoc-otimes-left", seed)
    rng = SplitMix64(seed)
    g = random_graph(rng, rng.randint(1, 3), 0.6)
    inner = random_instance(seed, RandomParams("otimes", base_order=(1, 3), inner_order=(1, 3),
                                               base_connected=False, edge_density=0.6))
    ck.document = {"g": graph_to_obj(g), "inner": _doc(inner)}
    left = direct_product(g, otimes_h(inner).graph).graph
    rewritten = structure.assoc_otimes_left(g, inner)
    rp = otimes_h(rewritten)
    ck.degrees(rp, rewritten)
    right = rp.graph
    ck.expect(left.order == right.order and left.edges == right.edges, "flattened edge sets differ")
    return ck.report()


def random_symmetric_assignment(rng: SplitMix64, g: Graph, H: Graph, k: int) -> dict:
    nh = H.order
    base = direct_product(g, H).graph
    h = {}
    for u, v in base.edge_list():
        if (u, v) in h:
            continue
        (al, a), (be, b) = divmod(u, nh), divmod(v, nh)
        mu, mv = al * nh + b, be * nh + a
        mirror = (min(mu, mv), max(mu, mv))
        h[(u, v)] = h[mirror] = rng.below(k)
    return h


def suite_assoc_otimes_right(seed: int) -> VerifyReport:
    ck = _Check("assoc-otimes-right", seed)
    rng = SplitMix64(seed)
    g = random_graph(rng, rng.randint(1, 3), 0.6)
    H = random_graph(rng, rng.randint(1, 3), 0.6)
    m = rng.randint(1, 3)
    fam = GraphFamily(tuple(random_graph(rng, m, 0.5) for _ in range(rng.randint(1, 3))))
    base = direct_product(g, H).graph
    inst = OtimesInstance(base, fam, random_symmetric_assignment(rng, g, H, len(fam)))
    ck.document = {"g": graph_to_obj(g), "H": graph_to_obj(H), "inst": _doc(inst)}
    fam2, h2 = structure.assoc_otimes_right(g, H, inst)
    lp = otimes_h(inst)
    ck.degrees(lp, inst)
    left = lp.graph
    right = otimes_h(OtimesInstance(g, fam2, h2)).graph
    ck.expect(left.order == right.order and left.edges == right.edges, "flattened edge sets differ")
    return ck.report()


def _circ_members(rng: SplitMix64):
    return GraphFamily(tuple(random_graph(rng, rng.randint(1, 3), 0.5)
                             for _ in range(rng.randint(1, 3))))


def suite_assoc_circ_left(seed: int) -> VerifyReport:
    ck = _Check("assoc-circ-left", seed)
    rng = SplitMix64(seed)
    g = random_graph(rng, rng.randint(1, 3), 0.6)
    H = random_graph(rng, rng.randint(1, 3), 0.6)
    fam = _circ_members(rng)
    inner = CircInstance(H, fam, tuple(rng.below(len(fam)) for _ in H.vertices))
    ck.document = {"g": graph_to_obj(g), "inner": _doc(inner)}
    left = lex_product(g, circ_h(inner).graph).graph
    rewritten = structure.assoc_circ_left(g, inner)
    rp = circ_h(rewritten)
    ck.degrees(rp, rewritten)
    right = rp.graph
    ck.expect(left.order == right.order and left.edges == right.edges, "flattened edge sets differ")
    return ck.report()


def suite_assoc_circ_right(seed: int) -> VerifyReport:
    ck = _Check("assoc-circ-right", seed)
    rng = SplitMix64(seed)
    g = random_graph(rng, rng.randint(1, 3), 0.6)
    H = random_graph(rng, rng.randint(1, 3), 0.6)
    fam = _circ_members(rng)
    base = lex_product(g, H).graph
    inst = CircInstance(base, fam, tuple(rng.below(len(fam)) for _ in base.vertices))
    ck.document = {"g": graph_to_obj(g), "H": graph_to_obj(H), "inst": _doc(inst)}
    fam2, h2 = structure.assoc_circ_right(g, H, inst)
    lp = circ_h(inst)
    ck.degrees(lp, inst)
    left = lp.graph
    right = circ_h(CircInstance(g, fam2, h2)).graph
    ck.expect(left.order == right.order and left.edges == right.edges, "flattened edge sets differ")
    return ck.report()


def suite_decomposition(seed: int) -> VerifyReport:
    ck = _Check("decomposition", seed)
    inst = random_instance(seed, RandomParams("otimes", base_order=(2, 3), inner_order=(2, 4),
                                              base_connected=False,
                                              edge_density=DENSITIES[seed % 4]))
    ck.document = _doc(inst)
    prod = otimes_h(inst)
    ck.degrees(prod, inst)
    pg = prod.graph
    k, m = inst.base.order, inst.inner_order
    blocks = [tuple(range(a * m, (a + 1) * m)) for a in range(k)]
    natural = structure.check_decomposition(pg, blocks, blocks)
    ck.expect(structure.is_reconstruction_isomorphic(pg, natural), "natural blocks do not rebuild the product")
    found = structure.decompose(pg, k)
    ck.expect(found is not None, "search missed the natural decomposition")
    if found is not None:
        ck.expect(structure._violation(pg, found.bijections, False) is None, "returned decomposition breaks condition")
        ck.expect(structure.is_reconstruction_isomorphic(pg, found), "reconstruction is not isomorphic")
    return ck.report()


SUITES: dict[str, tuple[Callable[[int], VerifyReport], range]] = {
    "weichsel": (suite_weichsel, range(1, 201)),
    "otimes-connectivity": (suite_otimes_connectivity, range(1, 1001)),
    "fiber-family": (suite_fiber_family, range(1, 1001)),
    "fiber-family-isolated": (lambda s: suite_fiber_family(s, min_degree=0), range(1, 501)),
    "sufficient": (suite_sufficient, range(1, 1001)),
    "partitions": (suite_partitions, range(1, 501)),
    "partition-criteria": (suite_partition_criteria, range(1, 301)),
    "kappa-circ": (suite_kappa_circ, range(1, 301)),
    "alpha-circ": (suite_alpha_circ, range(1, 301)),
    "alpha-otimes": (suite_alpha_otimes, range(1, 501)),
    "domination": (suite_domination, range(1, 301)),
    "gamma-circ": (suite_gamma_circ, range(1, 301)),
    "chromatic-otimes": (suite_chromatic_otimes, range(1, 201)),
    "geller-sahl": (suite_geller_sahl, range(1, 201)),
    "clique-realization": (suite_clique_realization, range(1, 101)),
    "clique-chromatic": (suite_clique_chromatic, range(1, 51)),
    "tuple-colouring": (suite_tuple_colouring, range(1, 101)),
    "monotonicity": (suite_monotonicity, range(1, 101)),
    "assoc-otimes-left": (suite_assoc_otimes_left, range(1, 101)),
    "assoc-otimes-right": (suite_assoc_otimes_right, range(1, 101)),
    "assoc-circ-left": (suite_assoc_circ_left, range(1, 101)),
    "assoc-circ-right": (suite_assoc_circ_right, range(1, 101)),
    "decomposition": (suite_decomposition, range(1, 51)),
}


def verify(suite: str, seeds: Iterable[int] | None = None) -> list[VerifyReport]:
    """Run ``suite`` over ``seeds`` (its default range when omitted).

    Instances whose hypotheses fail are classified, never raised.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(sorted(SUITES))}")
    fn, default = SUITES[suite]
    out = []
    for seed in (default if seeds is None else seeds):
        try:
            out.append(fn(seed))
        except HypothesisError as exc:
            out.append(VerifyReport(suite, f"seed={seed}", UNMET, {"reason": str(exc)}))
    return out


def violations(reports: Iterable[VerifyReport]) -> list[VerifyReport]:
    return [r for r in reports if r.status == VIOLATION]
