"""Compare the numba kernels with the plain-Python fallback.

Each path runs in its own interpreter because the switch
(``AVOIDABLE_NO_NUMBA``) is read at import time.

    python3 benchmarks/bench_kernels.py [--n 20000] [--deg 10] [--sweep-n 5]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
import numpy as np
from avoidable._accel import NUMBA_ENABLED
from avoidable.graph import Graph
from avoidable.kernels import bits
from avoidable.search import lbfs, mcs

n, deg, sweep_n = (int(x) for x in sys.argv[1:4])
rng = np.random.default_rng(0)
pairs = rng.integers(0, n, size=(n * deg // 2, 2))
g = Graph.from_edge_array(n, pairs[pairs[:, 0] != pairs[:, 1]])

def timed(fn, reps=3):
    fn()  # warm up (compiles under numba)
    best = float("inf")
    for _ in range(reps):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best

def sweep():
    for code in range(1 << (sweep_n * (sweep_n - 1) // 2)):
        bits.avoidable_vertex_mask(bits.graph_from_code(np.int64(code), sweep_n), sweep_n)

print(json.dumps({
    "numba": NUMBA_ENABLED,
    "lbfs_s": timed(lambda: lbfs(g)),
    "mcs_s": timed(lambda: mcs(g)),
    "sweep_s": timed(sweep, reps=1),
}))
"""


def run(no_numba: bool, args) -> dict:
    env = dict(os.environ)
    env.pop("AVOIDABLE_NO_NUMBA", None)
    if no_numba:
        env["AVOIDABLE_NO_NUMBA"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", CHILD, str(args.n), str(args.deg), str(args.sweep_n)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=20000)
    ap.add_argument("--deg", type=int, default=10)
    ap.add_argument("--sweep-n", type=int, default=5)
    args = ap.parse_args()
    fast, slow = run(False, args), run(True, args)
    print(f"{'kernel':<10}{'numba s':>12}{'python s':>12}{'speedup':>10}")
    for key in ("lbfs_s", "mcs_s", "sweep_s"):
        print(f"{key[:-2]:<10}{fast[key]:>12.4f}{slow[key]:>12.4f}{slow[key] / fast[key]:>9.1f}x")


if __name__ == "__main__":
    main()
