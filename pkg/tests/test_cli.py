"""CLI envelopes compared against golden JSON files.

Regenerate with ``UPDATE_GOLDEN=1 pytest tests/test_cli.py`` after an
intentional output change, then review the diff.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from avoidable.cli import EXIT_BOUND, EXIT_DOMAIN, EXIT_USAGE, main, render, run

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
DATA = HERE / "data"

CASES = {
    "avoidable_vertices_fig1a": ["avoidable", "--fixture", "fig1a"],
    "avoidable_vertex_fig1a": ["avoidable", "--fixture", "fig1a", "--vertex", "3"],
    "avoidable_edges_fig2": ["avoidable", "--fixture", "fig2_G", "--object", "edges"],
    "avoidable_edge_e_fig2": ["avoidable", "--fixture", "fig2_G", "--object", "edges", "--edge", "1,2"],
    "pseudo_edges_fig2": ["avoidable", "--fixture", "fig2_G", "--object", "pseudo-edges"],
    "avoidable_path_fig5": ["avoidable", "--fixture", "fig5_circulant", "--object", "path", "--path", "12,4,9"],
    "clique_c4_weights": ["clique", "--input", str(DATA / "c4.edges"), "--weights", str(DATA / "c4.weights"), "--oracle"],
    "clique_fig4": ["clique", "--fixture", "fig4"],
    "triangulate_c4": ["triangulate", "--input", str(DATA / "c4.edges"), "--ordering", "0,1,2,3", "--check-minimal"],
    "triangulate_prism_enum": ["triangulate", "--fixture", "fig3_prism", "--enumerate"],
    "triangulate_auto_minimal": ["triangulate", "--graph6", "Dhc", "--minimal"],
    "orient_fig4": ["orient", "--fixture", "fig4", "--brute-force"],
    "orient_c4_verify": ["orient", "--input", str(DATA / "c4.edges"), "--verify", str(DATA / "c4_cyclic.arcs")],
    "orient_recognize_c5": ["orient", "--graph6", "Dhc", "--recognize-1po"],
    "search_lbfs_fig1b": ["search", "--fixture", "fig1b", "--algo", "lbfs", "--all-ends"],
    "search_mcs_start": ["search", "--fixture", "fig1a", "--algo", "mcs", "--start", "2", "--two", "--diametral"],
    "transitivity_petersen": ["transitivity", "--fixture", "petersen"],
    "transitivity_fig5": ["transitivity", "--fixture", "fig5_circulant"],
    "fixture_fig2": ["fixture", "fig2_G", "--verify"],
    "conjecture_scan_n4": ["conjecture", "scan", "--n", "4", "--k", "1..3"],
    "conjecture_check_c6": ["conjecture", "check", "--graph6", "E`dg", "--k", "4"],
    "conjecture_random": ["conjecture", "random", "--seed", "3", "--n-random", "7", "--count", "20"],
    "error_usage": ["search", "--algo", "dfs"],
    "error_bad_start": ["search", "--fixture", "fig1a", "--start", "99"],
    "error_bound": ["search", "--graph6", "J~~~~~~~~~_", "--all-ends"],
    "error_parse": ["search", "--graph6", "~~"],
    "error_random_needs_seed": ["conjecture", "random"],
}

EXIT_CODES = {
    "error_usage": EXIT_USAGE,
    "error_bad_start": EXIT_DOMAIN,
    "error_bound": EXIT_BOUND,
    "error_parse": EXIT_DOMAIN,
    "error_random_needs_seed": EXIT_USAGE,
}


def _normalise(text: str) -> str:
    return text.replace(str(DATA), "<data>")


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    result = run(CASES[name])
    assert result.exit_code == EXIT_CODES.get(name, 0)
    got = _normalise(render(result))
    path = GOLDEN / f"{name}.json"
    if os.environ.get("UPDATE_GOLDEN") == "1":
        path.write_text(got)
    assert path.exists(), f"missing golden {path.name}; run with UPDATE_GOLDEN=1"
    assert json.loads(got) == json.loads(path.read_text())


def test_envelope_shape():
    env = run(["fixture", "fig1a"]).to_json()
    assert set(env) == {"status", "schema_version", "payload", "diagnostics"}
    assert env["schema_version"] == 1 and env["status"] == "ok"


def test_out_and_dot(tmp_path):
    out, dot = tmp_path / "r.json", tmp_path / "r.dot"
    code = main(["avoidable", "--fixture", "fig2_G", "--object", "edges", "--edge", "1,2",
                 "--out", str(out), "--dot", str(dot)])
    assert code == 0
    assert json.loads(out.read_text())["status"] == "ok"
    assert dot.read_text().startswith("graph")


def test_stream_scan(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(">>graph6<<Dhc\n\nE`dg\nnot graph6\n")
    env = run(["conjecture", "scan", "--stream", str(f), "--k", "1,2"]).to_json()
    assert env["payload"]["graphs_scanned"] == 2
    assert len(env["payload"]["errors"]) == 1


def test_jobs_do_not_change_output():
    a = run(["conjecture", "scan", "--n", "4", "--jobs", "1"]).to_json()
    b = run(["conjecture", "scan", "--n", "4", "--jobs", "2"]).to_json()
    assert a == b


def test_console_script_entry():
    res = subprocess.run(
        [sys.executable, "-m", "avoidable.cli", "fixture", "fig4"], capture_output=True, text=True
    )
    assert res.returncode == 0 and json.loads(res.stdout)["payload"]
