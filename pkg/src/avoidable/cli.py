"""Command-line front end. Every command prints one JSON envelope.

Exit codes: 0 ok, 1 domain error, 2 usage error, 3 size bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .avoidability import (
    avoidable_edges,
    avoidable_vertices,
    is_avoidable_path,
    is_pseudo_avoidable_edge,
    simplicial_vertices,
)
from .clique import brute_force_max_weight_clique, max_weight_clique
from .errors import BoundExceededError, GraphError, ParseError
from .graph import Graph, diameter
from .io import FORMATS, detect_format, encode_graph6, parse_graph, parse_weights, read_weighted
from .orientation import (
    Orientation,
    brute_force_one_perfect,
    check_hole_cyclic,
    is_one_perfect,
    recognize_one_perfectly_orientable,
)
from .search import (
    diametral_avoidable_pair,
    lbfs,
    lbfs_all_end_vertices,
    mcs,
    mcs_all_end_vertices,
    two_avoidable,
)
from .triangulation import (
    elimination_fill,
    enumerate_minimal_triangulations,
    is_chordal,
    is_minimal_triangulation,
    minimal_triangulation_below,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


@dataclass
class CommandResult:
    status: str
    payload: dict
    diagnostics: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK
    written_to: str | None = None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "schema_version": SCHEMA_VERSION,
            "payload": self.payload,
            "diagnostics": self.diagnostics,
        }


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _k_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise UsageError(f"bad range {text!r}") from None
    return _int_list(text)


def _load(args) -> tuple[Graph, tuple[int, ...] | None, dict]:
    """Graph from --input, --graph6 or --fixture; also returns fixture annotations."""
    from .io import parse_graph6
    from .lab.fixtures import load_fixture

    given = [x for x in (args.input, args.graph6, args.fixture) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --input, --graph6, --fixture")
    if args.fixture is not None:
        fx = load_fixture(args.fixture)
        return fx.graph, None, fx.annotations
    if args.graph6 is not None:
        return parse_graph6(args.graph6), None, {}
    path = Path(args.input)
    fmt = args.format or detect_format(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None
    g, w = parse_graph(text, fmt)
    return g, w, {}


def _dot(g: Graph, vertices=(), edges=(), arcs=None) -> str:
    """DOT export; highlighted vertices are filled, highlighted edges bold."""
    hv = set(vertices)
    he = {tuple(sorted(e)) for e in edges}
    kind, sep = ("digraph", "->") if arcs is not None else ("graph", "--")
    lines = [f"{kind} G {{"]
    for v in g.vertices():
        lines.append(f"  {v}" + (" [style=filled]" if v in hv else "") + ";")
    for u, v in (arcs if arcs is not None else g.edges()):
        bold = " [penwidth=3]" if tuple(sorted((u, v))) in he else ""
        lines.append(f"  {u} {sep} {v}{bold};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cycle_edges(cycle) -> list[tuple[int, int]]:
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def _certificate(g: Graph, obj: str, ids) -> tuple[dict, str]:
    ok, cert = is_avoidable_path(g, ids)
    shown = cert.failure_witness or cert.cycle or cert.path
    edges = _cycle_edges(cert.cycle) if cert.cycle else list(zip(shown, shown[1:]))
    payload = {"object": obj, "ids": list(cert.path), "avoidable": ok, "witness": cert.to_json()}
    return payload, _dot(g, shown, edges)


def _cmd_avoidable(args, g, w, ann) -> tuple[dict, str | None]:
    obj = args.object
    if obj == "vertices":
        if args.vertex is not None:
            if not 0 <= args.vertex < g.n:
                raise GraphError(f"vertex {args.vertex} out of range for n={g.n}")
            return _certificate(g, "vertex", [args.vertex])
        av = sorted(avoidable_vertices(g))
        return {"avoidable": av, "simplicial": sorted(simplicial_vertices(g))}, _dot(g, av)
    if obj == "edges":
        if args.edge is not None:
            e = _int_list(args.edge)
            if len(e) != 2 or not g.has_edge(*e):
                raise GraphError(f"{args.edge} is not an edge")
            return _certificate(g, "edge", sorted(e))
        av = sorted(avoidable_edges(g))
        return {"avoidable": [list(e) for e in av]}, _dot(g, (), av)
    if obj == "pseudo-edges":
        av = [e for e in g.edges() if is_pseudo_avoidable_edge(g, e)]
        return {"pseudo_avoidable": [list(e) for e in av]}, _dot(g, (), av)
    if args.path is None:
        raise UsageError("--object path needs --path")
    return _certificate(g, "path", _int_list(args.path))


def _cmd_clique(args, g, w, ann) -> tuple[dict, str | None]:
    if args.weights is not None:
        try:
            w = parse_weights(Path(args.weights).read_text(), g.n)
        except OSError as exc:
            raise GraphError(f"cannot read {args.weights}: {exc.strerror}") from None
    wg = read_weighted(g, w)
    res = max_weight_clique(wg)
    payload = res.to_json()
    if args.oracle:
        oracle = brute_force_max_weight_clique(wg)
        payload["oracle_weight"] = oracle.weight
        payload["oracle_agrees"] = oracle.weight == res.weight
    return payload, _dot(g, res.vertices, [(u, v) for u in res.vertices for v in res.vertices if u < v])


def _ordering(g: Graph, spec: str) -> list[int]:
    if spec == "auto":
        return list(mcs(g).reversed().sequence)
    path = Path(spec)
    if path.exists():
        return _int_list(",".join(path.read_text().split()))
    return _int_list(spec)


def _cmd_triangulate(args, g, w, ann) -> tuple[dict, str | None]:
    if args.enumerate:
        tris = list(enumerate_minimal_triangulations(g))
        return {"minimal_triangulations": [[list(e) for e in t.sorted_fill()] for t in tris]}, None
    chordal, peo = is_chordal(g)
    order = _ordering(g, args.ordering)
    t = elimination_fill(g, order)
    payload: dict[str, Any] = {
        "chordal": chordal,
        "peo": list(peo.sequence) if peo else None,
        "ordering": order,
        "fill": [list(e) for e in t.sorted_fill()],
    }
    if args.check_minimal:
        payload["fill_is_minimal"] = is_minimal_triangulation(g, t)
    if args.minimal:
        t = minimal_triangulation_below(g, t.graph)
        payload["minimal_fill"] = [list(e) for e in t.sorted_fill()]
    return payload, _dot(t.graph, (), t.sorted_fill())


def _read_arcs(path: str) -> list[tuple[int, int]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None
    arcs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split("#", 1)[0].split()
        if not parts:
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v' on line {lineno}", lineno)
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer arc on line {lineno}", lineno) from None
    return arcs


def _cmd_orient(args, g, w, ann) -> tuple[dict, str | None]:
    payload: dict[str, Any] = {}
    dot = None
    arcs = _read_arcs(args.verify) if args.verify else ann.get("arcs")
    if arcs is not None:
        o = Orientation.from_arcs(g, arcs)
        rep = check_hole_cyclic(o)
        payload["given"] = {
            "hole_cyclic": rep.hole_cyclic,
            "violating_hole": list(rep.violating_hole) if rep.violating_hole else None,
            "one_perfect": is_one_perfect(o),
        }
        dot = _dot(g, arcs=o.arcs())
    if args.recognize_1po or arcs is None:
        o = recognize_one_perfectly_orientable(g)
        payload["one_perfectly_orientable"] = o is not None
        payload["orientation"] = [list(a) for a in o.arcs()] if o else None
        if o is not None and dot is None:
            dot = _dot(g, arcs=o.arcs())
        if args.brute_force:
            payload["brute_force_agrees"] = (brute_force_one_perfect(g) is not None) == (o is not None)
    return payload, dot


def _cmd_search(args, g, w, ann) -> tuple[dict, str | None]:
    run = lbfs if args.algo == "lbfs" else mcs
    order = run(g, args.start)
    payload: dict[str, Any] = {"algo": args.algo, "ordering": list(order.sequence), "last": order.last}
    if args.all_ends:
        ends = lbfs_all_end_vertices(g) if args.algo == "lbfs" else mcs_all_end_vertices(g)
        payload["all_end_vertices"] = sorted(ends)
    if args.two:
        payload["two_avoidable"] = list(two_avoidable(g))
    if args.diametral:
        a, b, d = diametral_avoidable_pair(g)
        payload["diametral_pair"] = {"a": a, "b": b, "distance": d, "diameter": int(diameter(g))}
    return payload, _dot(g, [order.last])


def _cmd_transitivity(args, g, w, ann) -> tuple[dict, str | None]:
    from .lab.symmetry import automorphisms, verify_transitive_corollaries

    rep = verify_transitive_corollaries(g)
    payload = rep.to_json()
    payload["automorphism_count"] = len(automorphisms(g))
    return payload, None


def _cmd_fixture(args) -> dict:
    from .lab.fixtures import load_fixture, verify_fixture

    fx = load_fixture(args.name)
    ann = {k: (list(v) if isinstance(v, tuple) else v) for k, v in fx.annotations.items()}
    if "arcs" in ann:
        ann["arcs"] = [list(a) for a in ann["arcs"]]
    for key in ("edges", "base_edges"):
        if key in ann:
            ann[key] = {name: list(e) for name, e in ann[key].items()}
    payload: dict[str, Any] = {
        "name": fx.name,
        "n": fx.graph.n,
        "m": fx.graph.m,
        "graph6": encode_graph6(fx.graph),
        "edges": [list(e) for e in fx.graph.edges()],
        "annotations": ann,
    }
    if args.verify:
        claims = verify_fixture(args.name)
        payload["claims"] = [{"claim": c, "passed": ok} for c, ok in claims]
        payload["all_passed"] = all(ok for _, ok in claims)
    return payload


def _cmd_conjecture(args) -> tuple[dict, list[str]]:
    from .lab.conjecture import check_conjecture, labeled_graph6, scan
    from .lab.generators import random_graph

    ks = _k_range(args.k)
    if args.action == "scan":
        if (args.n is None) == (args.stream is None):
            raise UsageError("conjecture scan needs exactly one of --n, --stream")
        if args.stream is not None:
            try:
                lines = Path(args.stream).read_text().splitlines()
            except OSError as exc:
                raise GraphError(f"cannot read {args.stream}: {exc.strerror}") from None
        else:
            lines = labeled_graph6(args.n, allow_seven=args.seven)
        rep = scan(lines, ks, jobs=args.jobs)
        diag = [f"{len(rep.errors)} unparsable line(s)"] if rep.errors else []
        return rep.to_json(timing=args.timing), diag
    if args.action == "random":
        if args.seed is None:
            raise UsageError("conjecture random requires --seed")
        lines = [encode_graph6(random_graph(args.n_random, args.p, args.seed + i)) for i in range(args.count)]
        rep = scan(lines, ks, jobs=args.jobs)
        return {"seed": args.seed, **rep.to_json(timing=args.timing)}, []
    g, _, _ = _load(args)
    out = []
    for k in ks:
        bad = check_conjecture(g, k) if k <= g.n else None
        out.append({"k": k, "holds": bad is None, "counterexample_paths": [list(p) for p in bad or []]})
    return {"graph6": encode_graph6(g), "results": out}, []


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write the JSON envelope here instead of stdout")
    p.add_argument("--input", help="graph file (format from extension unless --format)")
    p.add_argument("--format", choices=sorted(FORMATS))
    p.add_argument("--graph6", help="graph6 string given inline")
    p.add_argument("--fixture", help="named figure fixture")
    p.add_argument("--dot", help="also write a DOT drawing of the certificate here")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="avoidable", description="Avoidable vertices, edges and paths; related solvers.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("avoidable", help="avoidable vertices, edges or a path")
    _add_input(p)
    p.add_argument("--object", choices=["vertices", "edges", "pseudo-edges", "path"], default="vertices")
    p.add_argument("--vertex", type=int, help="certificate for one vertex")
    p.add_argument("--edge", help="certificate for one edge, 'u,v'")
    p.add_argument("--path", help="comma-separated induced path")

    p = sub.add_parser("clique", help="maximum weight clique")
    _add_input(p)
    p.add_argument("--weights", help="sidecar file of 'v w' lines")
    p.add_argument("--oracle", action="store_true", help="cross-check with branch and bound")

    p = sub.add_parser("triangulate", help="elimination fill and minimal triangulations")
    _add_input(p)
    p.add_argument("--ordering", default="auto", help="'auto' (reverse MCS), 'v0,v1,..' or a file")
    p.add_argument("--check-minimal", action="store_true", help="test the fill for minimality")
    p.add_argument("--minimal", action="store_true", help="shrink the fill to a minimal triangulation")
    p.add_argument("--enumerate", action="store_true", help="list all minimal triangulations (small n)")

    p = sub.add_parser("orient", help="1-perfect orientation recognition")
    _add_input(p)
    p.add_argument("--recognize-1po", action="store_true", help="search for a 1-perfect orientation")
    p.add_argument("--verify", help="file of 'u v' arcs to check (fixtures use their drawn arcs)")
    p.add_argument("--brute-force", action="store_true", help="cross-check over all 2^m orientations")

    p = sub.add_parser("search", help="LBFS / MCS orderings and end vertices")
    _add_input(p)
    p.add_argument("--algo", choices=["lbfs", "mcs"], default="lbfs")
    p.add_argument("--start", type=int)
    p.add_argument("--all-ends", action="store_true", help="every possible last vertex (small n)")
    p.add_argument("--two", action="store_true", help="two avoidable vertices")
    p.add_argument("--diametral", action="store_true", help="avoidable pair at diameter distance")

    p = sub.add_parser("conjecture", help="search for graphs without an avoidable induced P_k")
    p.add_argument("action", choices=["scan", "check", "random"])
    _add_input(p)
    p.add_argument("--k", default="1..3", help="k values: '1..3' or '1,2,3'")
    p.add_argument("--n", type=int, help="scan all labeled graphs on n vertices (n <= 6)")
    p.add_argument("--seven", action="store_true", help="allow n = 7 (2^21 graphs)")
    p.add_argument("--stream", help="graph6 file, one graph per line")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds")
    p.add_argument("--seed", type=int)
    p.add_argument("--n-random", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--count", type=int, default=100)

    p = sub.add_parser("transitivity", help="symmetry and the path-closing checks it implies")
    _add_input(p)

    p = sub.add_parser("fixture", help="figure graphs with their annotations")
    p.add_argument("name")
    p.add_argument("--out", help="write the JSON envelope here instead of stdout")
    p.add_argument("--verify", action="store_true", help="re-derive every claim of the figure")
    return parser


_GRAPH_COMMANDS = {
    "avoidable": _cmd_avoidable,
    "clique": _cmd_clique,
    "triangulate": _cmd_triangulate,
    "orient": _cmd_orient,
    "search": _cmd_search,
    "transitivity": _cmd_transitivity,
}


def run(argv: Sequence[str] | None = None) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return CommandResult("error", {"error": "UsageError", "message": str(exc)}, [], EXIT_USAGE)
    try:
        diagnostics: list[str] = []
        if args.command == "fixture":
            payload = _cmd_fixture(args)
        elif args.command == "conjecture":
            payload, diagnostics = _cmd_conjecture(args)
        else:
            g, w, ann = _load(args)
            payload, dot = _GRAPH_COMMANDS[args.command](args, g, w, ann)
            if args.dot:
                if dot is None:
                    raise UsageError(f"{args.command} has no drawing for these options")
                Path(args.dot).write_text(dot)
        result = CommandResult("ok", payload, diagnostics)
    except UsageError as exc:
        return CommandResult("error", {"error": "UsageError", "message": str(exc)}, [], EXIT_USAGE)
    except BoundExceededError as exc:
        return CommandResult("error", {"error": type(exc).__name__, "message": str(exc)}, [], EXIT_BOUND)
    except GraphError as exc:
        return CommandResult("error", {"error": type(exc).__name__, "message": str(exc)}, [], EXIT_DOMAIN)
    if args.out:
        Path(args.out).write_text(render(result))
        result.written_to = args.out
    return result


def render(result: CommandResult) -> str:
    return json.dumps(result.to_json(), indent=2, sort_keys=True) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    result = run(argv)
    if result.written_to is None:
        sys.stdout.write(render(result))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
