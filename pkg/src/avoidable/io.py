"""Graph ingestion and serialisation: graph6, DIMACS, edge lists, weights, JSON."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .graph import Graph, WeightedGraph

_G6_HEADER = ">>graph6<<"
_G6_MAX_N = 68719476735


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= _G6_MAX_N:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"n={n} too large for graph6")


def encode_graph6(g: Graph, header: bool = False) -> str:
    """graph6 string for ``g`` (upper triangle, column by column, 6 bits per byte)."""
    n = g.n
    bits = []
    for j in range(1, n):
        adj = g.adj(j)
        bits.extend(1 if i in adj else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    data = bytearray(_g6_size_bytes(n))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        data.append(val + 63)
    text = data.decode("ascii")
    return _G6_HEADER + text if header else text


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Errors carry the byte offset of the fault."""
    line = text.strip()
    base = 0
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not line:
        raise ParseError("empty graph6 line", base)
    if line[0] == ":":
        raise ParseError("sparse6 input is not supported", base)
    try:
        raw = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ParseError("non-ASCII byte in graph6 data", base + exc.start) from None
    for i, c in enumerate(raw):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside the graph6 range 63..126", base + i)

    if raw[0] != 126:
        n, pos = raw[0] - 63, 1
    elif len(raw) >= 2 and raw[1] != 126:
        if len(raw) < 4:
            raise ParseError("truncated size header", base + len(raw))
        n = 0
        for c in raw[1:4]:
            n = (n << 6) | (c - 63)
        pos = 4
        if n < 63:
            raise ParseError(f"non-canonical size header for n={n}", base)
    else:
        if len(raw) < 8:
            raise ParseError("truncated size header", base + len(raw))
        n = 0
        for c in raw[2:8]:
            n = (n << 6) | (c - 63)
        pos = 8
        if n < 258048:
            raise ParseError(f"non-canonical size header for n={n}", base)
    if n < 1:
        raise ParseError("graph6 encodes an empty vertex set", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    data = raw[pos:]
    if len(data) < nbytes:
        raise ParseError(f"truncated adjacency data: expected {nbytes} bytes, got {len(data)}",
                         base + len(raw))
    if len(data) > nbytes:
        raise ParseError("trailing bytes after adjacency data", base + pos + nbytes)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        last = data[-1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise ParseError("nonzero padding bits", base + pos + nbytes - 1)
    return Graph(n, edges)


def _tokens(text: str):
    """Yield ``(line_number, fields)`` skipping blank lines and ``#``/``c`` comments."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r} on line {lineno}", lineno) from None


def _checked_edge(u: int, v: int, n: int, lineno: int) -> tuple[int, int]:
    if u == v:
        raise ParseError(f"self-loop at vertex {u} on line {lineno}", lineno)
    for x in (u, v):
        if not 0 <= x < n:
            raise ParseError(f"vertex {x} out of range for n={n} on line {lineno}", lineno)
    return u, v


def parse_edge_list(text: str) -> Graph:
    """First line: vertex count. Then one ``u v`` pair (0-based) per line.

    Error offsets are 1-based line numbers.
    """
    rows = _tokens(text)
    first = next(rows, None)
    if first is None or len(first[1]) != 1:
        raise ParseError("missing vertex-count line", 1 if first is None else first[0])
    n = _int(first[1][0], first[0])
    if n < 1:
        raise ParseError("vertex count must be positive", first[0])
    edges = []
    for lineno, fields in rows:
        if len(fields) != 2:
            raise ParseError(f"expected 'u v' on line {lineno}", lineno)
        edges.append(_checked_edge(_int(fields[0], lineno), _int(fields[1], lineno), n, lineno))
    return Graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    """DIMACS edge format: ``p edge n m`` then ``e u v`` with 1-based ids.

    Vertex ``i`` of the input becomes vertex ``i - 1``.
    """
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        fields = line.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError("malformed problem line, expected 'p edge n m'", lineno)
            n = _int(fields[2], lineno)
            if n < 1:
                raise ParseError("vertex count must be positive", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge line before 'p edge' header", lineno)
            if len(fields) != 3:
                raise ParseError("malformed edge line, expected 'e u v'", lineno)
            u, v = _int(fields[1], lineno) - 1, _int(fields[2], lineno) - 1
            edges.append(_checked_edge(u, v, n, lineno))
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' header", 0)
    return Graph(n, edges)


def encode_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def encode_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_weights(text: str, n: int) -> tuple[int, ...]:
    """Sidecar weights: one ``v w`` per line; unlisted vertices weigh 1."""
    weights = [1] * n
    seen = set()
    for lineno, fields in _tokens(text):
        if len(fields) != 2:
            raise ParseError(f"expected 'v w' on line {lineno}", lineno)
        v, w = _int(fields[0], lineno), _int(fields[1], lineno)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range for n={n}", lineno)
        if w < 0:
            raise ParseError(f"negative weight for vertex {v}", lineno)
        if v in seen:
            raise ParseError(f"duplicate weight for vertex {v}", lineno)
        seen.add(v)
        weights[v] = w
    return tuple(weights)


def parse_json_graph(text: str) -> tuple[Graph, tuple[int, ...] | None]:
    """``{"n": .., "edges": [[u, v], ..], "weights": [..]}``; weights optional."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(obj, dict) or "n" not in obj:
        raise ParseError("JSON graph must be an object with an 'n' field", 0)
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer", 0)
    edges = []
    for i, e in enumerate(obj.get("edges", [])):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError(f"edge #{i} must be a pair of integers", i)
        edges.append(_checked_edge(e[0], e[1], n, i))
    weights = obj.get("weights")
    if weights is not None:
        if not (isinstance(weights, list) and len(weights) == n
                and all(isinstance(w, int) and w >= 0 for w in weights)):
            raise ParseError(f"'weights' must list {n} nonnegative integers", 0)
        weights = tuple(weights)
    return Graph(n, edges), weights


def encode_json_graph(g: Graph, weights=None) -> str:
    obj = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if weights is not None:
        obj["weights"] = list(weights)
    return json.dumps(obj)


FORMATS = ("graph6", "dimacs", "edgelist", "json")
_EXTENSIONS = {
    ".g6": "graph6", ".graph6": "graph6",
    ".dimacs": "dimacs", ".col": "dimacs", ".clq": "dimacs",
    ".txt": "edgelist", ".edges": "edgelist", ".el": "edgelist",
    ".json": "json",
}


def detect_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix not in _EXTENSIONS:
        raise ParseError(f"cannot infer format from extension {suffix!r}; pass --format", 0)
    return _EXTENSIONS[suffix]


def parse_graph(text: str, fmt: str) -> tuple[Graph, tuple[int, ...] | None]:
    """Dispatch on ``fmt``; returns the graph and weights when the format carries them."""
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, found {len(lines)}", 0)
        return parse_graph6(lines[0]), None
    if fmt == "dimacs":
        return parse_dimacs(text), None
    if fmt == "edgelist":
        return parse_edge_list(text), None
    if fmt == "json":
        return parse_json_graph(text)
    raise ParseError(f"unknown format {fmt!r}", 0)


def read_weighted(graph: Graph, weights: tuple[int, ...] | None) -> WeightedGraph:
    return WeightedGraph(graph, weights if weights is not None else (1,) * graph.n)
