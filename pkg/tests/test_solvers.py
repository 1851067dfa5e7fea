import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from hprod import Graph, complete_graph, cycle_graph, otimes_h
from hprod import solvers
from hprod.exceptions import GuardError, HypothesisError

from conftest import graph, to_nx
from test_graph_core import graphs


def _brute_min(g, ok):
    for k in range(g.order + 1):
        for s in itertools.combinations(range(g.order), k):
            if ok(set(s)):
                return k
    return None


def _brute_chi(g):
    for k in range(1, g.order + 1):
        for col in itertools.product(range(k), repeat=g.order):
            if all(col[u] != col[v] for u, v in g.edges):
                return k
    return 0


def test_c5_values():
    c5 = cycle_graph(5)
    assert solvers.chromatic_number(c5)[0] == 3
    assert solvers.independence_number(c5)[0] == 2
    assert solvers.domination_number(c5)[0] == 2
    assert solvers.clique_number(c5)[0] == 2
    assert solvers.kappa_exact(c5)[0] == solvers.lambda_exact(c5)[0] == 2


def test_four_c3_alpha(four_c3):
    assert solvers.independence_number(otimes_h(four_c3).graph)[0] == 4


def test_total_domination_c4():
    assert solvers.total_domination_number(cycle_graph(4))[0] == 2
    with pytest.raises(HypothesisError):
        solvers.total_domination_number(graph(3, (0, 1)))


def test_connectivity_of_complete_and_diamond():
    assert solvers.kappa_exact(complete_graph(4))[0] == 3
    assert solvers.lambda_exact(complete_graph(4))[0] == 3
    diamond = graph(4, (0, 1), (0, 2), (0, 3), (1, 2), (1, 3))
    assert solvers.kappa_exact(diamond)[0] == 2 == solvers.lambda_exact(diamond)[0]


def test_guards():
    with pytest.raises(GuardError):
        solvers.chromatic_number(Graph(30))
    assert solvers.chromatic_number(Graph(30), guard=30)[0] == 1


@settings(max_examples=120, deadline=None)
@given(graphs(max_order=7))
def test_exact_values_against_brute_force(g):
    G = to_nx(g)
    w, clique = solvers.clique_number(g)
    assert w == max((len(c) for c in nx.find_cliques(G)), default=0)
    assert all(g.has_edge(u, v) for u, v in itertools.combinations(clique, 2))
    a, ind = solvers.independence_number(g)
    assert a == solvers.clique_number(g.complement())[0]
    assert len(ind) == a and not any(g.has_edge(u, v) for u, v in itertools.combinations(ind, 2))
    chi, col = solvers.chromatic_number(g)
    assert solvers.is_proper_colouring(g, col) and len(set(col)) == chi
    assert chi == _brute_chi(g)
    gam, dom = solvers.domination_number(g)
    assert solvers.dominates(g, dom) and len(dom) == gam
    assert gam == _brute_min(g, lambda s: solvers.dominates(g, s))
    if g.order and g.min_degree() >= 1:
        gt, tdom = solvers.total_domination_number(g)
        assert solvers.totally_dominates(g, tdom)
        assert gt == _brute_min(g, lambda s: solvers.totally_dominates(g, s))


@settings(max_examples=120, deadline=None)
@given(graphs(max_order=8))
def test_connectivity_routes_agree(g):
    G = to_nx(g)
    k_enum, k_flow = solvers.kappa_by_enumeration(g), solvers.kappa_by_flow(g)
    l_enum, l_flow = solvers.lambda_by_enumeration(g), solvers.lambda_by_flow(g)
    assert k_enum[0] == k_flow[0]
    assert l_enum[0] == l_flow[0]
    if g.order >= 2:
        assert k_enum[0] == nx.node_connectivity(G)
        assert l_enum[0] == nx.edge_connectivity(G)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=8))
def test_cut_witnesses_disconnect(g):
    if g.order < 2 or not nx.is_connected(to_nx(g)):
        return
    k, cut = solvers.kappa_by_flow(g)
    G = to_nx(g)
    if not g.is_complete():
        H = G.copy()
        H.remove_nodes_from(cut)
        assert len(cut) == k and not nx.is_connected(H)
    lam, ecut = solvers.lambda_by_flow(g)
    H = G.copy()
    H.remove_edges_from(ecut)
    assert len(ecut) == lam and not nx.is_connected(H)


def test_max_weight_independent_set():
    p3 = graph(3, (0, 1), (1, 2))
    assert solvers.max_weight_independent_set(p3, [1, 5, 1]) == (5, (1,))
    assert solvers.max_weight_independent_set(p3, [3, 5, 3])[0] == 6
