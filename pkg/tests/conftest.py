import networkx as nx
import pytest

from hprod import CircInstance, Graph, GraphFamily, OtimesInstance, complete_graph, cycle_graph

# x, y, z, t -> 0, 1, 2, 3 throughout
MATCHING_A = Graph(4, frozenset({(0, 2), (1, 3)}))
MATCHING_B = Graph(4, frozenset({(0, 1), (2, 3)}))
MATCHING_C = Graph(4, frozenset({(0, 3), (1, 2)}))


def graph(n, *edges, loops=False):
    return Graph(n, frozenset(edges), loops)


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.order))
    out.add_edges_from(g.edges)
    return out


@pytest.fixture
def four_c3():
    """C3 with the three perfect matchings of K4 assigned bijectively."""
    fam = GraphFamily((MATCHING_A, MATCHING_B, MATCHING_C))
    return OtimesInstance(cycle_graph(3), fam, {(0, 1): 0, (1, 2): 1, (0, 2): 2})


@pytest.fixture
def two_c6():
    fam = GraphFamily((MATCHING_A, MATCHING_C))
    return OtimesInstance(cycle_graph(3), fam, {(0, 1): 0, (1, 2): 0, (0, 2): 1})


@pytest.fixture
def k4_attained():
    f1 = graph(4, (0, 2), (1, 2), (2, 3))
    f2 = graph(4, (0, 1), (0, 2), (2, 3))
    h = {e: 0 for e in complete_graph(4).edges}
    h[(2, 3)] = 1
    return OtimesInstance(complete_graph(4), GraphFamily((f1, f2)), h)


@pytest.fixture
def k4_strict():
    f1 = graph(4, (0, 1), (1, 2), (2, 3))
    f2 = graph(4, (0, 2), (0, 3), (1, 3))
    h = {e: 0 for e in complete_graph(4).edges}
    h[(0, 2)] = 1   # the edge ac
    return OtimesInstance(complete_graph(4), GraphFamily((f1, f2)), h)


def c3_circ_instance() -> CircInstance:
    k2 = complete_graph(2)
    k2k1 = graph(3, (0, 1))
    return CircInstance(cycle_graph(3), GraphFamily((k2, k2k1)), (0, 0, 1))


@pytest.fixture
def c3_circ():
    return c3_circ_instance()


def c5_circ(n: int) -> CircInstance:
    fam = GraphFamily((complete_graph(n), complete_graph(2), Graph(2)))
    return CircInstance(cycle_graph(5), fam, (0, 1, 2, 2, 2))


# one line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
