"""Searching for graphs with an induced ``P_k`` but no avoidable one."""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ..avoidability import is_avoidable_path
from ..errors import GraphError, ParseError
from ..graph import Graph
from ..io import encode_graph6, parse_graph6
from ..kernels import bits
from .generators import all_labeled_graphs
from .symmetry import induced_paths

KERNEL_MAX_N = 16


def _masks(g: Graph) -> np.ndarray:
    return np.asarray(g.bitmasks(), dtype=np.int64)


def check_conjecture(g: Graph, k: int) -> list[tuple[int, ...]] | None:
    """None when ``g`` has no induced ``P_k`` or has an avoidable one.

    Otherwise every induced ``P_k`` of ``g`` (one orientation each), all of
    them non-avoidable: a counterexample.
    """
    if not 1 <= k <= g.n:
        raise GraphError(f"k={k} must lie in 1..n={g.n}")
    if g.n <= KERNEL_MAX_N:
        adj = _masks(g)
        codes = bits.induced_paths(adj, g.n, k)
        paths = [tuple(int(x) for x in bits.unpack_path(c, k)) for c in codes]
        if any(bits.is_avoidable_path(adj, g.n, np.asarray(p, dtype=np.int64), k) for p in paths):
            return None
    else:
        paths = list(induced_paths(g, k)) if k > 1 else [(v,) for v in g.vertices()]
        if any(is_avoidable_path(g, p)[0] for p in paths):
            return None
    return paths or None


@dataclass
class ScanReport:
    graphs_scanned: int = 0
    failures: list[tuple[str, int, tuple[int, ...]]] = field(default_factory=list)
    errors: list[tuple[int, int | None, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "graphs_scanned": self.graphs_scanned,
            "failures": [{"graph6": g6, "k": k, "witness": list(w)} for g6, k, w in self.failures],
            "errors": [{"line": ln, "offset": off, "message": msg} for ln, off, msg in self.errors],
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _scan_line(job: tuple[int, str, tuple[int, ...]]):
    lineno, line, ks = job
    try:
        g = parse_graph6(line)
    except ParseError as exc:
        return lineno, None, (exc.offset, str(exc))
    found = []
    for k in ks:
        if k > g.n:
            continue
        bad = check_conjecture(g, k)
        if bad is not None:
            found.append((k, bad[0]))
    return lineno, line.strip(), found


def scan(lines: Iterable[str], ks: Sequence[int], jobs: int = 1, chunksize: int = 256) -> ScanReport:
    """Check every graph6 line for each ``k``; the report does not depend on ``jobs``.

    Blank lines and ``>>graph6<<`` headers are skipped; unparsable lines are
    recorded and the scan goes on.
    """
    ks = tuple(sorted(set(int(k) for k in ks)))
    if not ks or ks[0] < 1:
        raise GraphError("k values must be positive")
    start = time.perf_counter()
    work = (
        (i, line.rstrip("\n").removeprefix(">>graph6<<"), ks)
        for i, line in enumerate(lines, 1)
        if line.strip() and line.strip() != ">>graph6<<"
    )
    report = ScanReport()
    if jobs > 1:
        with multiprocessing.get_context("spawn").Pool(jobs) as pool:
            results = list(pool.imap(_scan_line, work, chunksize=chunksize))
    else:
        results = [_scan_line(job) for job in work]
    for lineno, g6, payload in results:
        if g6 is None:
            report.errors.append((lineno, payload[0], payload[1]))
            continue
        report.graphs_scanned += 1
        for k, witness in payload:
            report.failures.append((g6, k, witness))
    report.elapsed = time.perf_counter() - start
    return report


def labeled_graph6(n: int, allow_seven: bool = False) -> Iterable[str]:
    """graph6 lines for every labeled graph on ``n`` vertices."""
    for g in all_labeled_graphs(n, allow_seven=allow_seven):
        yield encode_graph6(g)
