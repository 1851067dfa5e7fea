"""Command-line front end.

stdout carries exactly one JSON document (or an edge list with
``--format edgelist``); diagnostics go to stderr. Exit status is 0 on
success, 1 when a checked statement is violated, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import connectivity as conn
from . import invariants as inv
from . import solvers
from .exceptions import GuardError, HypothesisError, InstanceError
from .family import CircInstance, OtimesInstance
from .generate import RandomParams, random_instance
from .graph import Graph, components
from .io import dumps, format_edgelist, graph_to_obj, instance_to_obj, parse_graph, parse_instance
from .product import circ_h, otimes_h
from .structure import decompose
from .verify import SUITES, VIOLATION, verify

log = logging.getLogger("hprod")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, loops: bool = False):
    """An instance document, or a bare graph (JSON object or edge list)."""
    text = _read(path)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        if isinstance(doc, dict) and "kind" in doc:
            return parse_instance(text)
    g = parse_graph(text)
    if loops and not g.allows_loops:
        g = g.with_loops()
    return g


def _build(obj):
    if isinstance(obj, OtimesInstance):
        return otimes_h(obj).graph
    if isinstance(obj, CircInstance):
        return circ_h(obj).graph
    return obj


def _emit(obj, fmt: str = "json"):
    if fmt == "edgelist" and isinstance(obj, Graph):
        sys.stdout.write(format_edgelist(obj))
    elif isinstance(obj, Graph):
        sys.stdout.write(dumps(graph_to_obj(obj)))
    else:
        sys.stdout.write(dumps(obj))


def _jsonable(x):
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(y) for y in x)
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "_asdict"):
        return _jsonable(x._asdict())
    if hasattr(x, "__dataclass_fields__"):
        return {k: _jsonable(getattr(x, k)) for k in x.__dataclass_fields__}
    return x


def _route(fn, *args):
    try:
        return _jsonable(fn(*args))
    except HypothesisError as exc:
        return {"hypothesis_unmet": str(exc)}


# -- verbs --------------------------------------------------------------------

def cmd_product(args) -> int:
    obj = _load(args.input)
    if isinstance(obj, Graph):
        raise UsageError("product needs an instance document")
    p = otimes_h(obj) if isinstance(obj, OtimesInstance) else circ_h(obj)
    if args.format == "edgelist":
        _emit(p.graph, "edgelist")
    else:
        doc = graph_to_obj(p.graph)
        doc["kind"] = p.kind
        doc["pairs"] = [list(pr) for pr in p.index_map]
        _emit(doc)
    return EXIT_OK


def _verdict_obj(v) -> dict:
    return {"connected": v.connected, "components": v.component_count, "witness": _jsonable(v.witness)}


def cmd_connect(args) -> int:
    obj = _load(args.input)
    g = _build(obj)
    dec = components(g)
    out = {"bfs": {"connected": len(dec.blocks) <= 1, "components": max(len(dec.blocks), 1),
                   "witness": list(dec.blocks[0]) if len(dec.blocks) > 1 else None}}
    status = EXIT_OK
    if isinstance(obj, OtimesInstance):
        routes = {}
        for name, fn in (("main", conn.predict_otimes_connectivity),
                         ("fiber_family", conn.otimes_connected_via_family)):
            try:
                v = fn(obj)
            except HypothesisError as exc:
                routes[name] = {"hypothesis_unmet": str(exc)}
                continue
            routes[name] = _verdict_obj(v)
            if v.connected != out["bfs"]["connected"]:
                status = EXIT_VIOLATION
        routes["sufficient"] = _route(conn.sufficient_connectivity_check, obj)
        try:
            w = conn.predict_disconnection_via_partitions(obj)
            routes["partitions"] = {"disconnected": w is not None, "witness": _jsonable(w)}
            if (w is None) != out["bfs"]["connected"]:
                status = EXIT_VIOLATION
        except HypothesisError as exc:
            routes["partitions"] = {"hypothesis_unmet": str(exc)}
        out["routes"] = routes
    _emit(out)
    return status


def _bounds_for(obj, which: str, rep: inv.InvariantReport):
    if isinstance(obj, OtimesInstance):
        if which == "alpha":
            rep.check_bound("lower", inv.alpha_otimes_lower(obj), "lower")
        elif which in ("gamma", "gamma_t"):
            lb = inv.gamma_otimes_lower(obj)
            rep.check_bound("lower_local_unions", lb.local, "lower")
            if which == "gamma":
                rep.check_bound("lower_union", lb.union, "lower")
                common = frozenset.intersection(*(obj.family[i].edges for i in set(obj.h.values()))) \
                    if obj.h else frozenset()
                f = Graph(obj.inner_order, common)
                ok = obj.base.min_degree() >= 1 and f.min_degree() >= 1
                rep.check_bound("upper_common_subgraph", inv.gamma_otimes_upper(obj, f), "upper", ok)
        elif which in ("chi", "omega"):
            chi_b, omega_b = inv.chi_omega_otimes_bounds(obj)
            rep.check_bound("upper", chi_b if which == "chi" else omega_b, "upper")
    elif isinstance(obj, CircInstance):
        if which == "alpha":
            f = inv.alpha_circ(obj)
            rep.check_bound("formula_lower", f.value, "lower", f.hypotheses_met)
            rep.check_bound("formula_upper", f.value, "upper", f.hypotheses_met)
        elif which == "gamma":
            rep.check_bound("upper", inv.gamma_circ_upper(obj)[0], "upper")
        elif which == "chi":
            rep.check_bound("upper", inv.chi_circ_upper(obj), "upper")


def cmd_invariant(args) -> int:
    obj = _load(args.input)
    if args.which == "chi_h":
        if not isinstance(obj, Graph):
            raise UsageError("chi_h takes a bare graph and --demands")
        if not args.demands:
            raise UsageError("chi_h needs --demands")
        demands = [int(t) for t in args.demands.split(",")]
        rep = inv.h_tuple_chromatic(obj, demands, guard=args.guard or 12)
        _emit({"invariant": "chi_h", "value": rep.value,
               "witness": [sorted(s) for s in rep.witness.colors_per_vertex]})
        return EXIT_OK
    g = _build(obj)
    rep = inv.exact(g, args.which, guard=args.guard)
    _bounds_for(obj, args.which, rep)
    _emit({"invariant": rep.invariant, "value": rep.value, "witness": _jsonable(rep.witness),
           "bounds": [_jsonable(b) for b in rep.bounds]})
    broken = [b for b in rep.bounds if b.hypotheses_met and b.satisfied is False]
    return EXIT_VIOLATION if broken else EXIT_OK


def _connectivity(args, which: str) -> int:
    obj = _load(args.input)
    g = _build(obj)
    value, witness = (solvers.kappa_exact if which == "kappa" else solvers.lambda_exact)(g)
    out = {"invariant": which, "value": value, "witness": _jsonable(witness)}
    status = EXIT_OK
    if isinstance(obj, CircInstance):
        formula = _route(conn.kappa_circ if which == "kappa" else conn.lambda_circ, obj)
        out["formula"] = formula
        if isinstance(formula, int) and formula != value:
            status = EXIT_VIOLATION
    _emit(out)
    return status


def cmd_decompose(args) -> int:
    g = _load(args.input)
    if not isinstance(g, Graph):
        g = _build(g)
    if args.k is None:
        raise UsageError("decompose needs --k")
    stats: dict = {}
    kw = {"guard": args.guard} if args.guard else {}
    dec = decompose(g, args.k, loops=args.loops, stats=stats, **kw)
    if dec is None:
        _emit({"result": "none", "k": args.k, "stats": stats})
        return EXIT_OK
    _emit({"result": "found", "k": args.k, "blocks": [list(b) for b in dec.blocks],
           "bijections": [list(p) for p in dec.bijections],
           "instance": instance_to_obj(dec.instance), "stats": stats})
    return EXIT_OK


def _seed_range(text: str):
    try:
        if ".." in text:
            a, b = text.split("..")
            return range(int(a), int(b) + 1)
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad seed range {text!r}; use A..B or a comma list") from None


def cmd_verify(args) -> int:
    if not args.suite:
        raise UsageError("verify needs --suite")
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(sorted(SUITES))}")
    seeds = None
    if args.seeds:
        seeds = _seed_range(args.seeds)
    elif args.seed is not None:
        seeds = [args.seed]
    reports = verify(args.suite, seeds)
    bad = sum(r.status == VIOLATION for r in reports)
    log.info("%s: %d reports, %d violations", args.suite, len(reports), bad)
    _emit([r.to_obj() for r in reports])
    return EXIT_VIOLATION if bad else EXIT_OK


def _span_arg(text):
    if text is None:
        return None
    if ".." in text:
        a, b = text.split("..")
        return (int(a), int(b))
    return int(text)


def cmd_gen(args) -> int:
    kw = {"kind": args.kind or "otimes"}
    for name in ("base_order", "inner_order", "family_size"):
        val = getattr(args, name)
        if val is not None:
            try:
                kw[name] = _span_arg(val)
            except ValueError:
                raise UsageError(f"--{name.replace('_', '-')}: expected N or A..B") from None
    if args.density is not None:
        kw["edge_density"] = args.density
    if args.min_degree is not None:
        kw["member_min_degree"] = args.min_degree
    if args.connected_members:
        kw["member_connected"] = True
    inst = random_instance(args.seed if args.seed is not None else 1, RandomParams(**kw))
    _emit(instance_to_obj(inst))
    return EXIT_OK


VERBS = {
    "product": cmd_product,
    "connect": cmd_connect,
    "invariant": cmd_invariant,
    "kappa": lambda a: _connectivity(a, "kappa"),
    "lambda": lambda a: _connectivity(a, "lambda"),
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "gen": cmd_gen,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hprod", description="Generalized direct and lexicographic graph products.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help, inp=True):
        s = sub.add_parser(name, help=help)
        if inp:
            s.add_argument("input", help="instance document or graph file ('-' for stdin)")
        s.add_argument("--guard", type=int, default=None, help="raise the exact-solver size limit")
        return s

    verb("product", "build the product graph").add_argument(
        "--format", choices=("json", "edgelist"), default="json")
    verb("connect", "connectivity verdicts from every applicable route")
    s = verb("invariant", "exact invariant plus applicable bounds")
    s.add_argument("--which", choices=inv.INVARIANTS, required=True)
    s.add_argument("--demands", help="comma-separated demands for chi_h")
    verb("kappa", "vertex connectivity")
    verb("lambda", "edge connectivity")
    s = verb("decompose", "search for a nontrivial otimes_h decomposition")
    s.add_argument("--k", type=int)
    s.add_argument("--loops", action="store_true", help="allow loops in H and the members")
    s = verb("verify", "run a theorem-verification suite", inp=False)
    s.add_argument("--suite")
    s.add_argument("--seeds", help="A..B or a comma list")
    s.add_argument("--seed", type=int)
    s = verb("gen", "emit a seeded random instance", inp=False)
    s.add_argument("--kind", choices=("otimes", "circ"))
    s.add_argument("--seed", type=int)
    s.add_argument("--base-order")
    s.add_argument("--inner-order")
    s.add_argument("--family-size")
    s.add_argument("--density", type=float)
    s.add_argument("--min-degree", type=int, choices=(0, 1))
    s.add_argument("--connected-members", action="store_true")
    return p


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="hprod: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            log.setLevel(logging.INFO)
        return VERBS[args.verb](args)
    except (UsageError, InstanceError, GuardError, ValueError) as exc:
        print(f"hprod: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
