import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from hprod import (CircInstance, Graph, GraphFamily, OtimesInstance, circ_h, complete_graph, cycle_graph,
                   otimes_h, path_graph, star_graph)
from hprod import invariants as inv
from hprod import solvers
from hprod.family import union_graph
from hprod.generate import RandomParams, random_instance

from conftest import c5_circ, graph, to_nx


def chi(g, guard=25):
    return solvers.chromatic_number(g, guard=guard)[0]


# -- independence ------------------------------------------------------------

def test_alpha_otimes_four_c3(four_c3):
    assert inv.alpha_otimes_lower(four_c3) == 4
    assert solvers.independence_number(otimes_h(four_c3).graph)[0] == 4


def test_alpha_otimes_two_edges():
    inst = OtimesInstance.constant(complete_graph(2), complete_graph(2))
    assert inv.alpha_otimes_lower(inst) == 2


def test_alpha_circ_path():
    fam = GraphFamily((complete_graph(2), Graph(2)))
    inst = CircInstance(path_graph(3), fam, (0, 1, 0))
    rep = inv.alpha_circ(inst)
    assert rep.value == 2 == solvers.independence_number(circ_h(inst).graph)[0]


def test_alpha_circ_edgeless_members():
    inst = CircInstance.constant(cycle_graph(5), Graph(3))
    assert inv.alpha_circ(inst).value == 3 * 2


def test_alpha_circ_flags_single_vertex_base():
    rep = inv.alpha_circ(CircInstance.constant(Graph(1), path_graph(3)))
    assert rep.value == 2 and not rep.hypotheses_met


# -- domination --------------------------------------------------------------

def test_gamma_lower_c4_squared():
    inst = OtimesInstance.constant(cycle_graph(4), cycle_graph(4))
    lb = inv.gamma_otimes_lower(inst)
    assert lb.local == lb.union == 3
    assert solvers.domination_number(otimes_h(inst).graph)[0] >= 3


def test_gamma_lower_k2():
    inst = OtimesInstance.constant(complete_graph(2), complete_graph(2))
    assert inv.gamma_otimes_lower(inst).local == 1
    assert solvers.domination_number(otimes_h(inst).graph)[0] == 2


def test_gamma_upper_common_path():
    p4 = path_graph(4)
    fam = GraphFamily((p4, Graph(4, p4.edges | {(0, 2)}), Graph(4, p4.edges | {(0, 3)})))
    h = dict(zip(cycle_graph(4).edge_list(), [0, 1, 2, 0]))
    inst = OtimesInstance(cycle_graph(4), fam, h)
    bound = inv.gamma_otimes_upper(inst, p4)
    assert bound == 3 * 2 * 2
    assert solvers.domination_number(otimes_h(inst).graph)[0] <= bound


def test_gamma_upper_rejects_non_common_subgraph():
    inst = OtimesInstance.constant(complete_graph(2), path_graph(3))
    with pytest.raises(ValueError):
        inv.gamma_otimes_upper(inst, complete_graph(3))


def test_gamma_upper_fails_with_isolated_vertices():
    # K4 minus an edge over edgeless members: the product is 8 isolated vertices
    base = Graph(4, frozenset({(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)}))
    inst = OtimesInstance.constant(base, Graph(2))
    bound = inv.gamma_otimes_upper(inst, Graph(2))
    assert bound == 6
    assert solvers.domination_number(otimes_h(inst).graph)[0] == 8


def test_dominating_set_construct_c4():
    inst = OtimesInstance.constant(cycle_graph(4), cycle_graph(4))
    De = {e: (0, 1, 2) for e in inst.base.edges}
    Be = {e: (0, 2) for e in inst.base.edges}
    x = inv.dominating_set_construct(inst, (0, 1), De, (0, 1), Be)
    assert solvers.dominates(otimes_h(inst).graph, x)


def test_dominating_set_construct_k2():
    inst = OtimesInstance.constant(complete_graph(2), complete_graph(2))
    x = inv.dominating_set_construct(inst, (0, 1), {(0, 1): (0, 1)}, (0,), {(0, 1): (0,)})
    assert x == (0, 1, 2)
    assert solvers.dominates(otimes_h(inst).graph, x)


def test_dominating_set_construct_validates():
    inst = OtimesInstance.constant(cycle_graph(4), cycle_graph(4))
    De = {e: (0, 1, 2) for e in inst.base.edges}
    Be = {e: (0, 2) for e in inst.base.edges}
    with pytest.raises(ValueError):
        inv.dominating_set_construct(inst, (0, 1), De, (0,), Be)
    with pytest.raises(ValueError):
        inv.dominating_set_construct(inst, (0, 2), De, (0, 2), Be)


def test_gamma_circ_upper_heavy_ends():
    fam = GraphFamily((Graph(3), Graph(1)))
    inst = CircInstance(path_graph(3), fam, (0, 1, 0))
    value, d = inv.gamma_circ_upper(inst)
    assert (value, d) == (1, (1,))
    assert solvers.domination_number(circ_h(inst).graph)[0] == 1


def test_gamma_circ_upper_constant():
    inst = CircInstance.constant(cycle_graph(5), path_graph(4))
    value, _ = inv.gamma_circ_upper(inst)
    assert value == 2 * 2


# -- colouring and cliques -------------------------------------------------------

def test_k4_bound_attained(k4_attained):
    p = otimes_h(k4_attained).graph
    assert chi(p) == 3 == chi(union_graph(k4_attained))
    assert not nx.is_bipartite(to_nx(p))


def test_k4_bound_strict(k4_strict):
    p = otimes_h(k4_strict).graph
    assert union_graph(k4_strict).edges == complete_graph(4).edges
    assert chi(p) == 3
    # the explicit 3-colouring: rows a..d, columns x..t
    f = {(0, 0): 0, (1, 0): 0, (1, 2): 0, (2, 0): 0, (3, 2): 0,
         (0, 1): 1, (1, 1): 1, (1, 3): 1, (2, 1): 1, (3, 1): 1, (3, 3): 1,
         (0, 2): 2, (0, 3): 2, (2, 2): 2, (2, 3): 2, (3, 0): 2}
    colour = [f[divmod(v, 4)] for v in range(16)]
    assert solvers.is_proper_colouring(p, colour)
    assert p.has_edge(0 * 4 + 2, 1 * 4 + 1) and p.has_edge(1 * 4 + 1, 2 * 4 + 0) and p.has_edge(0 * 4 + 2, 2 * 4 + 0)


def test_omega_four_c3(four_c3):
    assert inv.chi_omega_otimes_bounds(four_c3)[1] == 3
    assert solvers.clique_number(otimes_h(four_c3).graph)[0] == 3


def test_clique_realizing_triangle():
    fam = GraphFamily((graph(3, (0, 1)), graph(3, (1, 2), (0, 2))))
    h, k = inv.clique_realizing_assignment(complete_graph(3), fam)
    assert k == 3
    p = otimes_h(OtimesInstance(complete_graph(3), fam, h)).graph
    assert solvers.clique_number(p)[0] == 3


def test_clique_realizing_singleton_family():
    h, k = inv.clique_realizing_assignment(cycle_graph(5), GraphFamily((complete_graph(4),)))
    assert k == 2


def test_chi_circ_c3_sharp(c3_circ):
    assert inv.chi_circ_upper(c3_circ) == 6
    assert chi(circ_h(c3_circ).graph) == 6


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_chi_circ_c5_gap(n):
    inst = c5_circ(n)
    assert inv.chi_circ_upper(inst) == 3 * n
    assert chi(circ_h(inst).graph) == n + 2


def test_geller_sahl_c5_join_point():
    inst = CircInstance(complete_graph(2), GraphFamily((cycle_graph(5), Graph(1))), (0, 1))
    red = inv.reduce_to_complete_fibers(inst)
    assert [red.member(v).order for v in range(2)] == [3, 1]
    assert chi(circ_h(inst).graph) == chi(circ_h(red).graph) == 4


def test_reduction_keeps_complete_members():
    inst = CircInstance(path_graph(3), GraphFamily((complete_graph(2), complete_graph(3))), (0, 1, 0))
    red = inv.reduce_to_complete_fibers(inst)
    assert circ_h(red).graph == circ_h(inst).graph


# -- Kneser and tuple colourings -----------------------------------------------

def test_kneser_singletons_is_triangle():
    assert inv.kneser_graph([1], 3).edges == complete_graph(3).edges


def test_kneser_petersen():
    k = inv.kneser_graph([2], 5)
    assert (k.order, k.size) == (10, 15)
    assert set(k.degree_sequence()) == {3}
    assert nx.is_isomorphic(to_nx(k), nx.petersen_graph())


def test_kneser_mixed_demands():
    subs = inv.kneser_subsets([2, 3], 5)
    k = inv.kneser_graph([2, 3], 5)
    assert k.order == 20
    for i, s in enumerate(subs):
        if len(s) == 3:
            assert k.degree(i) == 1
            (j,) = k.neighbors(i)
            assert subs[j] == frozenset(range(5)) - s


def test_kneser_colex_order():
    subs = inv.kneser_subsets([2], 4)
    assert [sorted(s) for s in subs[:3]] == [[0, 1], [0, 2], [1, 2]]


@pytest.mark.parametrize("g,demands,expected", [
    (cycle_graph(5), [2] * 5, 5),
    (star_graph(3), [2, 1, 1, 1], 3),
    (cycle_graph(5), [1] * 5, 3),
    (complete_graph(3), [1, 2, 3], 6),
])
def test_tuple_chromatic_examples(g, demands, expected):
    rep = inv.h_tuple_chromatic(g, demands)
    assert rep.value == expected and rep.witness.is_valid(g, demands)


def test_tuple_c5_doubles_is_c5_lex_k2():
    inst = CircInstance.constant(cycle_graph(5), complete_graph(2))
    assert chi(circ_h(inst).graph) == 5


def test_tuple_colouring_homomorphism_into_kneser():
    g, demands = cycle_graph(5), [2] * 5
    rep = inv.h_tuple_chromatic(g, demands)
    subs = inv.kneser_subsets(demands, rep.value)
    k = inv.kneser_graph(demands, rep.value)
    image = [subs.index(s) for s in rep.witness.colors_per_vertex]
    assert all(k.has_edge(image[u], image[v]) for u, v in g.edges)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5000))
def test_tuple_colouring_round_trips(seed):
    from hprod.generate import SplitMix64, random_graph
    rng = SplitMix64(seed)
    g = random_graph(rng, rng.randint(1, 5), 0.5)
    demands = [rng.randint(1, 3) for _ in range(g.order)]
    rep = inv.h_tuple_chromatic(g, demands)
    pg = circ_h(inv.complete_fiber_instance(g, demands)).graph
    col = inv.tuple_to_product_colouring(g, demands, rep.witness)
    assert solvers.is_proper_colouring(pg, col)
    back = inv.product_to_tuple_colouring(g, demands, col)
    assert back.is_valid(g, demands)


def test_tuple_chromatic_rejects_bad_demands():
    with pytest.raises(ValueError):
        inv.h_tuple_chromatic(complete_graph(2), [1])
    with pytest.raises(ValueError):
        inv.h_tuple_chromatic(complete_graph(2), [1, 0])


# -- reports ------------------------------------------------------------------

def test_report_bounds():
    rep = inv.exact(cycle_graph(5), "chi")
    assert rep.value == 3
    assert rep.check_bound("ub", 3, "upper").satisfied
    assert not rep.check_bound("lb", 4, "lower").satisfied
    with pytest.raises(ValueError):
        inv.exact(cycle_graph(5), "nope")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10_000))
def test_bounds_hold_on_random_instances(seed):
    inst = random_instance(seed, RandomParams("otimes", base_order=(2, 4), inner_order=(2, 4),
                                              base_connected=False))
    p = otimes_h(inst).graph
    c, w = inv.chi_omega_otimes_bounds(inst)
    assert chi(p) <= c and solvers.clique_number(p)[0] <= w
    assert solvers.independence_number(p)[0] >= inv.alpha_otimes_lower(inst)
