"""Acceptance criteria 1-14, each at its stated size, tolerance and time limit.

Every criterion records one PASS/FAIL line; the lines are printed in the
terminal summary (and directly when run with ``-s``).
"""
import time

import networkx as nx

from hprod import complete_graph, components, cycle_graph, is_isomorphic, otimes_h, circ_h
from hprod import invariants as inv
from hprod import solvers, structure
from hprod.family import union_graph
from hprod.verify import SUITES, VIOLATION, verify

from conftest import ACCEPTANCE_LINES, c3_circ_instance, c5_circ, to_nx

_CACHE: dict = {}


def run(suite, seeds):
    key = (suite, seeds.start, seeds.stop)
    if key not in _CACHE:
        t = time.perf_counter()
        reports = verify(suite, seeds)
        _CACHE[key] = (reports, time.perf_counter() - t)
    return _CACHE[key]


def bad(reports):
    return [r for r in reports if r.status == VIOLATION]


def record(n, ok, detail):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _components_iso(g, target):
    out = []
    for block in components(g).blocks:
        sub = nx.relabel_nodes(to_nx(g).subgraph(block), {v: i for i, v in enumerate(block)})
        out.append(nx.is_isomorphic(sub, to_nx(target)))
    return out


def test_criterion_01_four_triangles(four_c3):
    t = time.perf_counter()
    p = otimes_h(four_c3).graph
    iso = _components_iso(p, cycle_graph(3))
    hg = union_graph(four_c3)
    base_ok = four_c3.base.is_connected() and not four_c3.base.is_bipartite()
    h_ok = hg.is_connected() and not hg.is_bipartite() and hg.edges == complete_graph(4).edges
    dt = time.perf_counter() - t
    ok = len(iso) == 4 and all(iso) and base_ok and h_ok and dt < 1
    record(1, ok, f"{len(iso)} components, all C3={all(iso)}, base/h(G) connected nonbipartite, {dt:.3f}s")


def test_criterion_02_two_hexagons_decompose(two_c6):
    t = time.perf_counter()
    p = otimes_h(two_c6).graph
    iso = _components_iso(p, cycle_graph(6))
    dec = structure.decompose(p, 3)
    rebuilt = dec is not None and structure.is_reconstruction_isomorphic(p, dec)
    dt = time.perf_counter() - t
    ok = len(iso) == 2 and all(iso) and rebuilt and dt < 10
    record(2, ok, f"{len(iso)} components C6={all(iso)}, k=3 decomposition rebuilt={rebuilt}, {dt:.3f}s")


def test_criterion_03_weichsel():
    reports, dt = run("weichsel", range(1, 201))
    record(3, not bad(reports), f"200 pairs, {len(bad(reports))} violations, {dt:.2f}s")


def test_criterion_04_main_connectivity():
    reports, dt = run("otimes-connectivity", range(1, 1001))
    record(4, not bad(reports) and dt < 30, f"1000 instances, {len(bad(reports))} violations, {dt:.2f}s")


def test_criterion_05_fiber_family():
    reports, dt = run("fiber-family", range(1, 1001))
    record(5, not bad(reports), f"1000 instances, {len(bad(reports))} violations, {dt:.2f}s")


def test_criterion_06_partitions():
    reports, dt = run("partitions", range(1, 501))
    record(6, not bad(reports), f"500 partition lists, {len(bad(reports))} violations, {dt:.2f}s")


def test_criterion_07_kappa_lambda_circ():
    reports, dt = run("kappa-circ", range(1, 301))
    record(7, not bad(reports) and dt < 60, f"300 instances, {len(bad(reports))} violations, {dt:.2f}s")


def test_criterion_08_alpha_circ():
    reports, dt = run("alpha-circ", range(1, 301))
    record(8, not bad(reports), f"300 instances, {len(bad(reports))} violations, {dt:.2f}s")


def test_criterion_09_domination():
    reports, dt = run("domination", range(1, 301))
    b = bad(reports)
    upper = [r for r in b if all("3 gamma(G) gamma(F)" in p for p in r.details["problems"])]
    detail = (f"300 instances, {len(b)} violations ({len(upper)} of the 3 gamma(G) gamma(F) upper bound, "
              f"{len(b) - len(upper)} elsewhere), {dt:.2f}s")
    if b:
        detail += f"; first {b[0].source}: {b[0].details['problems'][0]}"
    record(9, not b, detail)


def test_criterion_10_chromatic():
    k4a_inst = _k4(attained=True)
    k4s_inst = _k4(attained=False)
    k4a = solvers.chromatic_number(otimes_h(k4a_inst).graph)[0]
    k4s = solvers.chromatic_number(otimes_h(k4s_inst).graph)[0]
    c3 = solvers.chromatic_number(circ_h(c3_circ_instance()).graph)[0]
    c5 = c5_circ(4)
    c5_chi = solvers.chromatic_number(circ_h(c5).graph)[0]
    c5_ub = inv.chi_circ_upper(c5)
    worked = (k4a, k4s, c3, c5_chi, c5_ub) == (3, 3, 6, 6, 12) and c5_ub - c5_chi == 2 * (4 - 1)
    gs, _ = run("geller-sahl", range(1, 201))
    cc, _ = run("clique-chromatic", range(1, 51))
    ok = worked and not bad(gs) and not bad(cc)
    record(10, ok, f"worked values {(k4a, k4s, c3, c5_chi, c5_ub)}, Geller-Sahl violations {len(bad(gs))}/200, "
                   f"K_n violations {len(bad(cc))}/50")


def _k4(attained):
    from hprod import GraphFamily, OtimesInstance
    from conftest import graph
    if attained:
        fam = (graph(4, (0, 2), (1, 2), (2, 3)), graph(4, (0, 1), (0, 2), (2, 3)))
        odd = (2, 3)
    else:
        fam = (graph(4, (0, 1), (1, 2), (2, 3)), graph(4, (0, 2), (0, 3), (1, 3)))
        odd = (0, 2)
    h = {e: int(e == odd) for e in complete_graph(4).edges}
    return OtimesInstance(complete_graph(4), GraphFamily(fam), h)


def test_criterion_11_clique_realization():
    reports, dt = run("clique-realization", range(1, 101))
    record(11, not bad(reports), f"100 pairs, {len(bad(reports))} violations, {dt:.2f}s")


def test_criterion_12_kneser_tuple():
    k = inv.kneser_graph([2], 5)
    petersen = (k.order, k.size, set(k.degree_sequence())) == (10, 15, {3})
    reports, dt = run("tuple-colouring", range(1, 101))
    unit = [r for r in reports if r.source in {f"seed={s}" for s in range(5, 101, 5)}]
    ok = petersen and not bad(reports) and len(unit) == 20
    record(12, ok, f"Petersen={petersen}, 100 cases ({len(unit)} with unit demands), "
                   f"{len(bad(reports))} violations")


def test_criterion_13_associativity():
    counts = {}
    for suite in ("assoc-otimes-left", "assoc-otimes-right", "assoc-circ-left", "assoc-circ-right"):
        reports, _ = run(suite, range(1, 101))
        counts[suite] = len(bad(reports))
    record(13, not any(counts.values()), f"100 instances each, violations {counts}")


def test_criterion_14_degree_formulas():
    # every suite at its default size; the checks run inline in each
    checked, failures = 0, 0
    for suite, (_, seeds) in SUITES.items():
        reports, _ = run(suite, seeds)
        for r in reports:
            checked += r.details.get("degree_checks", 0)
            failures += sum("degree" in p for p in r.details.get("problems", []))
    record(14, failures == 0 and checked > 0,
           f"{checked} product vertices checked across {len(SUITES)} suites, {failures} mismatches")


if __name__ == "__main__":
    import pytest
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
