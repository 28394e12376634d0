"""The numba kernels and their pure-Python fallback must agree exactly."""

import json
import os
import subprocess
import sys
import textwrap

import numpy as np
import pytest
from hypothesis import given

from avoidable import _accel
from avoidable.avoidability import avoidable_vertices, is_avoidable_path
from avoidable.kernels import bits
from avoidable.lab.symmetry import induced_paths
from avoidable.search import lbfs, mcs
from avoidable.triangulation import is_chordal

from .helpers import graphs

DIGEST = textwrap.dedent(
    """
    import json, random
    import numpy as np
    from avoidable import _accel
    from avoidable.graph import Graph
    from avoidable.kernels import bits, searches

    rng = random.Random(7)
    out = {"numba": _accel.NUMBA_ENABLED, "rows": []}
    for _ in range(60):
        n = rng.randint(1, 7)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45])
        adj = np.asarray(g.bitmasks(), dtype=np.int64)
        indptr, indices = g.csr()
        perms = bits.all_permutations(n)
        row = [
            int(bits.avoidable_vertex_mask(adj, n)),
            int(bits.constructive_simplicial_mask(adj, n)),
            int(bits.simplicial_in_some_minimal_mask(adj, n, perms)),
            int(bits.canonical_code(adj, n, perms)),
            bool(bits.is_chordal(adj, n)),
            [int(x) for x in bits.lbfs_bits(adj, n, 0)],
            [int(x) for x in searches.lbfs_order(indptr, indices, n, 0)],
            [int(x) for x in searches.mcs_order(indptr, indices, n, 0)],
            [int(x) for x in bits.induced_paths(adj, n, min(3, n))],
            [int(x) for x in bits.closability_mismatches(adj, n, 3)],
        ]
        out["rows"].append(row)
    print(json.dumps(out))
    """
)


def _digest(disable: bool) -> dict:
    env = dict(os.environ)
    env.pop("AVOIDABLE_NO_NUMBA", None)
    if disable:
        env["AVOIDABLE_NO_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", DIGEST], env=env, capture_output=True, text=True, timeout=600)
    assert res.returncode == 0, res.stderr
    return json.loads(res.stdout)


@pytest.mark.skipif(not _accel.NUMBA_ENABLED, reason="numba unavailable")
def test_numba_and_fallback_agree():
    fast, slow = _digest(False), _digest(True)
    assert fast["numba"] and not slow["numba"]
    assert fast["rows"] == slow["rows"]


def test_flag_parsing():
    env = dict(os.environ, AVOIDABLE_NO_NUMBA="yes")
    res = subprocess.run(
        [sys.executable, "-c", "from avoidable import _accel; print(_accel.NUMBA_ENABLED)"],
        env=env, capture_output=True, text=True,
    )
    assert res.stdout.strip() == "False"


def _adj(g):
    return np.asarray(g.bitmasks(), dtype=np.int64)


@given(graphs(max_n=9))
def test_vertex_mask_matches_python(g):
    mask = int(bits.avoidable_vertex_mask(_adj(g), g.n))
    assert {v for v in range(g.n) if mask >> v & 1} == avoidable_vertices(g)


@given(graphs(max_n=8))
def test_path_kernel_matches_python(g):
    adj = _adj(g)
    for k in (2, 3):
        if k > g.n:
            continue
        codes = bits.induced_paths(adj, g.n, k)
        got = {tuple(int(x) for x in bits.unpack_path(c, k)) for c in codes}
        assert got == set(induced_paths(g, k))
        for p in got:
            assert bool(bits.is_avoidable_path(adj, g.n, np.asarray(p, dtype=np.int64), k)) == (
                is_avoidable_path(g, p)[0]
            )


@given(graphs(max_n=9))
def test_searches_and_chordality_match_python(g):
    assert bool(bits.is_chordal(_adj(g), g.n)) == is_chordal(g)[0]
    assert [int(x) for x in bits.lbfs_bits(_adj(g), g.n, 0)] == list(lbfs(g, 0).sequence)
    assert mcs(g, 0).sequence[0] == 0


def test_closability_smoke():
    from avoidable.lab.generators import random_graph

    for seed in range(50):
        g = random_graph(7, 0.5, seed)
        checked, bad = bits.closability_mismatches(_adj(g), g.n, 4)
        assert bad == 0 and checked >= 0
