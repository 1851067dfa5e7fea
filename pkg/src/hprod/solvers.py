"""Exact small-graph solvers.

Every solver is deterministic: vertices are explored in index order and the
first optimum found is returned, so witnesses are reproducible. Size guards
raise :class:`GuardError` instead of silently running for hours.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .exceptions import GuardError, HypothesisError
from .graph import Graph, count_components

GUARDS = {"alpha": 24, "omega": 24, "chi": 20, "gamma": 20, "gamma_t": 20}
ENUMERATION_LIMIT = 12


def _check(g: Graph, which: str, guard: int | None):
    limit = GUARDS[which] if guard is None else guard
    if g.order > limit:
        raise GuardError(f"{which}: order {g.order} exceeds guard {limit}")
    if g.has_loops:
        raise ValueError(f"{which}: solver expects a loopless graph")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- cliques and independent sets ------------------------------------------

def _max_weight_clique(masks, weights, cand: int) -> tuple[int, list[int]]:
    best_w, best = -1, []
    chosen: list[int] = []
    unit = all(x == 1 for x in weights)

    def expand(P: int, w: int):
        nonlocal best_w, best
        bound = P.bit_count() if unit else sum(weights[v] for v in _bits(P))
        if w + bound <= best_w:
            return
        if not P:
            best_w, best = w, chosen[:]
            return
        v = (P & -P).bit_length() - 1
        chosen.append(v)
        expand(P & masks[v], w + weights[v])
        chosen.pop()
        expand(P & ~(1 << v), w)

    expand(cand, 0)
    return best_w, best


def clique_number(g: Graph, guard: int | None = None) -> tuple[int, tuple[int, ...]]:
    _check(g, "omega", guard)
    if g.order == 0:
        return 0, ()
    w, c = _max_weight_clique(g.masks, [1] * g.order, (1 << g.order) - 1)
    return w, tuple(c)


def independence_number(g: Graph, guard: int | None = None) -> tuple[int, tuple[int, ...]]:
    _check(g, "alpha", guard)
    if g.order == 0:
        return 0, ()
    full = (1 << g.order) - 1
    co = [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]
    w, s = _max_weight_clique(co, [1] * g.order, full)
    return w, tuple(s)


def max_weight_independent_set(g: Graph, weights) -> tuple[int, tuple[int, ...]]:
    """Maximum total weight over independent sets of ``g`` (weights >= 0)."""
    if g.has_loops:
        raise ValueError("expected a loopless graph")
    if g.order == 0:
        return 0, ()
    full = (1 << g.order) - 1
    co = [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]
    w, s = _max_weight_clique(co, list(weights), full)
    return w, tuple(s)


# -- colouring -----------------------------------------------------------------

def _k_colouring(g: Graph, k: int):
    n = g.order
    adj = g.adjacency
    colour = [-1] * n
    # forbidden[v][c] counts coloured neighbours of v carrying colour c
    forbidden = [[0] * k for _ in range(n)]
    sat = [0] * n

    def pick():
        best, key = -1, None
        for v in range(n):
            if colour[v] == -1:
                kv = (sat[v], len(adj[v]), -v)
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def assign(v, c, delta):
        for w in adj[v]:
            before = forbidden[w][c]
            forbidden[w][c] += delta
            if before == 0 and delta == 1:
                sat[w] += 1
            elif before == 1 and delta == -1:
                sat[w] -= 1

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        if sat[v] >= k:
            return False
        for c in range(min(k, used + 1)):
            if forbidden[v][c]:
                continue
            colour[v] = c
            assign(v, c, 1)
            if solve(done + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            colour[v] = -1
        return False

    return tuple(colour) if solve(0, 0) else None


def chromatic_number(g: Graph, guard: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number by iterative deepening from the clique bound."""
    _check(g, "chi", guard)
    if g.order == 0:
        return 0, ()
    lower = clique_number(g, guard=max(g.order, GUARDS["omega"]))[0]
    for k in range(lower, g.order + 1):
        col = _k_colouring(g, k)
        if col is not None:
            return k, col
    raise AssertionError("unreachable: n colours always suffice")


def is_proper_colouring(g: Graph, colour) -> bool:
    return all(colour[u] != colour[v] for u, v in g.edges)


# -- domination ----------------------------------------------------------------

def _dominate(need, choices, n: int, k: int):
    """Find a set of at most ``k`` vertices covering every bit of the target.

    ``need[v]`` is what choosing ``v`` covers; ``choices[u]`` lists who can
    cover ``u``. Branches on the lowest uncovered vertex.
    """
    full = (1 << n) - 1
    maxcover = max(m.bit_count() for m in need) if n else 0
    chosen: list[int] = []

    def search(covered: int, left: int) -> bool:
        missing = full & ~covered
        if not missing:
            return True
        if left == 0 or missing.bit_count() > left * maxcover:
            return False
        u = (missing & -missing).bit_length() - 1
        for v in choices[u]:
            if v in chosen:
                continue
            chosen.append(v)
            if search(covered | need[v], left - 1):
                return True
            chosen.pop()
        return False

    return tuple(sorted(chosen)) if search(0, k) else None


def domination_number(g: Graph, guard: int | None = None) -> tuple[int, tuple[int, ...]]:
    _check(g, "gamma", guard)
    n = g.order
    closed = [m | (1 << v) for v, m in enumerate(g.masks)]
    choices = [_bits(m) for m in closed]
    for k in range(n + 1):
        d = _dominate(closed, choices, n, k)
        if d is not None:
            return k, d
    raise AssertionError("unreachable")


def total_domination_number(g: Graph, guard: int | None = None) -> tuple[int, tuple[int, ...]]:
    _check(g, "gamma_t", guard)
    n = g.order
    if any(m == 0 for m in g.masks):
        raise HypothesisError("total domination is undefined with isolated vertices")
    choices = [_bits(m) for m in g.masks]
    for k in range(n + 1):
        d = _dominate(list(g.masks), choices, n, k)
        if d is not None:
            return k, d
    raise AssertionError("unreachable")


def dominates(g: Graph, s) -> bool:
    s = set(s)
    return all(v in s or g.adjacency[v] & s for v in g.vertices)


def totally_dominates(g: Graph, s) -> bool:
    s = set(s)
    return all(g.adjacency[v] & s for v in g.vertices)


# -- vertex and edge connectivity ----------------------------------------------

def _connected_without(g: Graph, removed: set) -> bool:
    rest = [v for v in g.vertices if v not in removed]
    if len(rest) <= 1:
        return True
    seen = {rest[0]}
    queue = deque([rest[0]])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen and w not in removed:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(rest)


def kappa_by_enumeration(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest separating vertex set, by size then lexicographic order."""
    n = g.order
    for s in range(max(n - 1, 0)):
        for cut in combinations(range(n), s):
            if not _connected_without(g, set(cut)):
                return s, cut
    # nothing separates: complete graph (or K1)
    return max(n - 1, 0), tuple(range(max(n - 1, 0)))


def lambda_by_enumeration(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Smallest edge cut over all vertex bipartitions (vertex 0 on the left)."""
    n = g.order
    if n <= 1:
        return 0, ()
    best = None
    others = list(range(1, n))
    for size in range(0, n - 1):
        for extra in combinations(others, size):
            left = {0, *extra}
            cut = tuple(sorted((u, v) for u, v in g.edges if (u in left) != (v in left)))
            if best is None or len(cut) < len(best):
                best = cut
    return len(best), best


def _flow_matrix(rows, cols, caps, size):
    return csr_matrix((np.asarray(caps, dtype=np.int32),
                       (np.asarray(rows, dtype=np.int32), np.asarray(cols, dtype=np.int32))),
                      shape=(size, size))


def _residual_reach(cap, flow, source: int) -> set[int]:
    residual = (cap - flow).tocsr()
    residual.eliminate_zeros()
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        start, end = residual.indptr[u], residual.indptr[u + 1]
        for w, c in zip(residual.indices[start:end], residual.data[start:end]):
            if c > 0 and w not in seen:
                seen.add(int(w))
                queue.append(int(w))
    return seen


def kappa_by_flow(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Vertex connectivity via Menger: local max-flows on the split graph."""
    n = g.order
    if n <= 1:
        return 0, ()
    if count_components(g) > 1:
        return 0, ()
    if g.is_complete():
        return n - 1, tuple(range(n - 1))
    big = n
    rows, cols, caps = [], [], []
    for v in g.vertices:
        rows.append(2 * v), cols.append(2 * v + 1), caps.append(1)
    for u, v in g.edges:
        if u == v:
            continue
        rows += [2 * u + 1, 2 * v + 1]
        cols += [2 * v, 2 * u]
        caps += [big, big]
    cap = _flow_matrix(rows, cols, caps, 2 * n)
    best, best_pair = n - 1, None
    # Even's scheme: some v_i with i <= kappa survives the minimum cut
    for i in range(n):
        if i > best:
            break
        for j in range(i + 1, n):
            if g.has_edge(i, j):
                continue
            res = maximum_flow(cap, 2 * i + 1, 2 * j)
            if res.flow_value < best:
                best, best_pair = res.flow_value, (i, j, res.flow)
    if best_pair is None:
        raise AssertionError("non-complete graph must have a nonadjacent pair")
    i, j, flow = best_pair
    reach = _residual_reach(cap, flow, 2 * i + 1)
    cut = tuple(v for v in g.vertices if 2 * v in reach and 2 * v + 1 not in reach)
    return int(best), cut


def lambda_by_flow(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    n = g.order
    if n <= 1:
        return 0, ()
    rows, cols = [], []
    for u, v in g.edges:
        if u != v:
            rows += [u, v]
            cols += [v, u]
    cap = _flow_matrix(rows, cols, [1] * len(rows), n)
    best, best_flow = None, None
    for t in range(1, n):
        res = maximum_flow(cap, 0, t)
        if best is None or res.flow_value < best:
            best, best_flow = res.flow_value, res.flow
    reach = _residual_reach(cap, best_flow, 0)
    cut = tuple(sorted((u, v) for u, v in g.edges if (u in reach) != (v in reach)))
    return int(best), cut


def kappa_exact(g: Graph) -> tuple[int, tuple[int, ...]]:
    if g.order <= ENUMERATION_LIMIT:
        return kappa_by_enumeration(g)
    return kappa_by_flow(g)


def lambda_exact(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    if g.order <= ENUMERATION_LIMIT:
        return lambda_by_enumeration(g)
    return lambda_by_flow(g)
