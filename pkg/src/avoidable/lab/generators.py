"""Seeded instance generators and exhaustive small-graph enumeration."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

import numpy as np

from ..errors import BoundExceededError, GraphError
from ..graph import Graph
from ..kernels.bits import all_permutations, canonical_code, graph_from_code
from ..orientation import (
    Digraph,
    Orientation,
    is_one_perfect,
    is_out_semi_complete,
    recognize_one_perfectly_orientable,
)
from ..triangulation import is_chordal

LABELED_BOUND = 6
# OEIS A000088
NONISOMORPHIC_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``; pairs are visited in ascending order."""
    if n < 1:
        raise GraphError("n must be positive")
    if not 0.0 <= p <= 1.0:
        raise GraphError("p must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_chordal(n: int, seed: int, max_clique: int = 4) -> Graph:
    """Random tree of cliques: each new vertex joins a random clique of the
    current chordal graph (a random subset of an earlier vertex's closed
    back-neighborhood), so the insertion order reversed is a perfect
    elimination ordering."""
    if n < 1:
        raise GraphError("n must be positive")
    rng = random.Random(seed)
    bags: list[list[int]] = [[0]]
    edges = []
    for v in range(1, n):
        if rng.random() < 0.1:
            bags.append([v])
            continue
        host = rng.choice(bags)
        size = rng.randint(1, min(len(host), max_clique - 1))
        nb = sorted(rng.sample(host, size))
        edges.extend((u, v) for u in nb)
        bags.append(nb + [v])
    g = Graph(n, edges)
    assert is_chordal(g)[0]
    return g


def out_semi_complete_from(o: Orientation, p: float, seed: int) -> Digraph:
    """Add opposite arcs to a 1-perfect orientation with probability ``p``,
    keeping each one only if the digraph stays out-semi-complete."""
    if not is_one_perfect(o):
        raise GraphError("start from a 1-perfect orientation")
    rng = random.Random(seed)
    arcs = set(o.arcs())
    for a, b in sorted(o.arcs()):
        if rng.random() >= p:
            continue
        arcs.add((b, a))
        if not is_out_semi_complete(Digraph(o.host.n, frozenset(arcs))):
            arcs.discard((b, a))
    return Digraph(o.host.n, frozenset(arcs))


def random_out_semi_complete(n: int, p: float, seed: int) -> Digraph:
    """Out-semi-complete digraph grown from a 1-perfect orientation of a random chordal graph."""
    o = recognize_one_perfectly_orientable(random_chordal(n, seed))
    assert o is not None
    return out_semi_complete_from(o, p, seed + 1)


def labeled_codes(n: int) -> range:
    return range(1 << (n * (n - 1) // 2))


def all_labeled_graphs(n: int, allow_seven: bool = False) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, in pair-code order."""
    if n > LABELED_BOUND and not (n == 7 and allow_seven):
        raise BoundExceededError(
            f"labeled enumeration stops at n={LABELED_BOUND}; n=7 needs allow_seven"
        )
    for code in labeled_codes(n):
        yield graph_from_masks(graph_from_code(np.int64(code), n))


def graph_from_masks(adj) -> Graph:
    n = len(adj)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if int(adj[u]) >> v & 1])


def nonisomorphic_codes(n: int) -> list[int]:
    """Canonical pair codes of all graphs on ``n <= 7`` vertices up to isomorphism.

    Brute-force canonical forms, only viable at this size.
    """
    if n > 7:
        raise BoundExceededError("isomorphism-free enumeration is limited to n <= 7")
    if n <= 1:
        return [0]
    perms = all_permutations(n)
    seen: set[int] = set()
    total = n * (n - 1) // 2
    # grow edge by edge from canonical representatives
    frontier = {0}
    seen.add(0)
    for _ in range(total):
        nxt = set()
        for code in frontier:
            for bit in range(total):
                if not code >> bit & 1:
                    c = int(canonical_code(graph_from_code(np.int64(code | 1 << bit), n), n, perms))
                    if c not in seen:
                        seen.add(c)
                        nxt.add(c)
        frontier = nxt
    return sorted(seen)


def nonisomorphic_graphs(n: int) -> Iterator[Graph]:
    for code in nonisomorphic_codes(n):
        yield graph_from_masks(graph_from_code(np.int64(code), n))
