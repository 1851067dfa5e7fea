"""Instance documents (JSON) and the bare edge-list format.

Canonical JSON output sorts keys, edges and assignment entries, so
``serialize_instance(parse_instance(text))`` is byte-stable.

Document shape::

    {"kind": "otimes" | "circ",
     "base": {"order": n, "edges": [[u, v], ...], "loops": true?},
     "family": [graph, ...],
     "assignment": [["u-v", member], ...]     # otimes
                 | [["v", member], ...]}      # circ
"""
from __future__ import annotations

import json
from typing import Union

from .exceptions import InstanceError
from .family import CircInstance, GraphFamily, OtimesInstance
from .graph import Graph

Instance = Union[OtimesInstance, CircInstance]

_DOC_KEYS = {"kind", "base", "family", "assignment"}
_GRAPH_KEYS = {"order", "edges", "loops"}


def graph_to_obj(g: Graph) -> dict:
    obj = {"order": g.order, "edges": [list(e) for e in g.edge_list()]}
    if g.allows_loops:
        obj["loops"] = True
    return obj


def graph_from_obj(obj, where: str = "graph") -> Graph:
    if not isinstance(obj, dict):
        raise InstanceError(f"{where}: expected an object")
    extra = set(obj) - _GRAPH_KEYS
    if extra:
        raise InstanceError(f"{where}: unknown field(s) {sorted(extra)}")
    order = obj.get("order")
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise InstanceError(f"{where}.order: expected a non-negative integer")
    loops = obj.get("loops", False)
    if not isinstance(loops, bool):
        raise InstanceError(f"{where}.loops: expected a boolean")
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise InstanceError(f"{where}.edges: expected a list")
    pairs = []
    for i, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise InstanceError(f"{where}.edges[{i}]: expected [u, v]")
        pairs.append(tuple(e))
    if len({tuple(sorted(p)) for p in pairs}) != len(pairs):
        raise InstanceError(f"{where}.edges: duplicate edge")
    try:
        return Graph(order, frozenset(pairs), loops)
    except ValueError as exc:
        raise InstanceError(f"{where}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n"


def instance_to_obj(inst: Instance) -> dict:
    if isinstance(inst, OtimesInstance):
        kind = "otimes"
        assignment = [[f"{u}-{v}", i] for (u, v), i in sorted(inst.h.items())]
    elif isinstance(inst, CircInstance):
        kind = "circ"
        assignment = [[str(v), i] for v, i in enumerate(inst.h)]
    else:
        raise TypeError("expected an OtimesInstance or CircInstance")
    return {"kind": kind, "base": graph_to_obj(inst.base),
            "family": [graph_to_obj(f) for f in inst.family], "assignment": assignment}


def serialize_instance(inst: Instance) -> str:
    return _dump(instance_to_obj(inst))


def _parse_vertex(token, where: str) -> int:
    if not isinstance(token, str) or not token.isdigit():
        raise InstanceError(f"{where}: expected a vertex like \"3\"")
    return int(token)


def _parse_edge(token, where: str) -> tuple[int, int]:
    if not isinstance(token, str) or token.count("-") != 1:
        raise InstanceError(f"{where}: expected an edge like \"0-1\"")
    a, b = token.split("-")
    if not (a.isdigit() and b.isdigit()):
        raise InstanceError(f"{where}: expected an edge like \"0-1\"")
    u, v = int(a), int(b)
    return (u, v) if u <= v else (v, u)


def instance_from_obj(doc) -> Instance:
    if not isinstance(doc, dict):
        raise InstanceError("document: expected a JSON object")
    extra = set(doc) - _DOC_KEYS
    if extra:
        raise InstanceError(f"document: unknown field(s) {sorted(extra)}")
    missing = _DOC_KEYS - set(doc)
    if missing:
        raise InstanceError(f"document: missing field(s) {sorted(missing)}")
    kind = doc["kind"]
    if kind not in ("otimes", "circ"):
        raise InstanceError("kind: expected \"otimes\" or \"circ\"")
    base = graph_from_obj(doc["base"], "base")
    if not isinstance(doc["family"], list) or not doc["family"]:
        raise InstanceError("family: expected a nonempty list")
    members = tuple(graph_from_obj(f, f"family[{i}]") for i, f in enumerate(doc["family"]))
    entries = doc["assignment"]
    if not isinstance(entries, list):
        raise InstanceError("assignment: expected a list")
    table = {}
    for i, entry in enumerate(entries):
        where = f"assignment[{i}]"
        if not isinstance(entry, list) or len(entry) != 2:
            raise InstanceError(f"{where}: expected [key, member]")
        key, idx = entry
        if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < len(members):
            raise InstanceError(f"{where}: member index {idx!r} out of range")
        key = _parse_edge(key, where) if kind == "otimes" else _parse_vertex(key, where)
        if key in table:
            raise InstanceError(f"{where}: {key} assigned twice")
        table[key] = idx
    if kind == "otimes":
        for u, v in base.edge_list():
            if (u, v) not in table:
                raise InstanceError(f"assignment: edge {u}-{v} has no member")
        for u, v in table:
            if (u, v) not in base.edges:
                raise InstanceError(f"assignment: {u}-{v} is not an edge of the base")
        if len({m.order for m in members}) != 1:
            raise InstanceError("family: otimes members must share one order")
        return OtimesInstance(base, GraphFamily(members), table)
    for v in base.vertices:
        if v not in table:
            raise InstanceError(f"assignment: vertex {v} has no member")
    if any(v >= base.order for v in table):
        raise InstanceError("assignment: vertex out of range")
    return CircInstance(base, GraphFamily(members), tuple(table[v] for v in base.vertices))


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return instance_from_obj(doc)


# -- bare graphs ----------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """``n m [loops]`` on the first line, then ``m`` lines ``u v``."""
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise InstanceError("line 1: empty edge list")
    lineno, head = lines[0]
    loops = False
    if len(head) == 3 and head[2] == "loops":
        loops = True
        head = head[:2]
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise InstanceError(f"line {lineno}: expected 'n m [loops]'")
    n, m = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != m:
        raise InstanceError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for lineno, toks in body:
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise InstanceError(f"line {lineno}: expected 'u v'")
        edges.append((int(toks[0]), int(toks[1])))
    if len({tuple(sorted(e)) for e in edges}) != len(edges):
        raise InstanceError("duplicate edge")
    try:
        return Graph(n, frozenset(edges), loops)
    except ValueError as exc:
        raise InstanceError(str(exc)) from None


def format_edgelist(g: Graph) -> str:
    head = f"{g.order} {g.size}" + (" loops" if g.allows_loops else "")
    return "\n".join([head] + [f"{u} {v}" for u, v in g.edge_list()]) + "\n"


def parse_graph(text: str) -> Graph:
    """Accept either a JSON graph object or the edge-list format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return graph_from_obj(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InstanceError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_edgelist(text)


def dumps(obj) -> str:
    """Canonical JSON for any CLI output document."""
    return _dump(obj)
