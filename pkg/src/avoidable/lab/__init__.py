"""Verification harnesses: figure fixtures, exhaustive scans, symmetry checks."""

from .conjecture import ScanReport, check_conjecture, labeled_graph6, scan
from .fixtures import FIXTURE_NAMES, Fixture, load_fixture, verify_fixture
from .generators import (
    all_labeled_graphs,
    nonisomorphic_graphs,
    random_chordal,
    random_graph,
    random_out_semi_complete,
)
from .symmetry import (
    TransitivityReport,
    automorphisms,
    is_edge_transitive,
    is_vertex_transitive,
    verify_transitive_corollaries,
)

__all__ = [
    "FIXTURE_NAMES",
    "Fixture",
    "ScanReport",
    "TransitivityReport",
    "all_labeled_graphs",
    "automorphisms",
    "check_conjecture",
    "is_edge_transitive",
    "is_vertex_transitive",
    "labeled_graph6",
    "load_fixture",
    "nonisomorphic_graphs",
    "random_chordal",
    "random_graph",
    "random_out_semi_complete",
    "scan",
    "verify_fixture",
    "verify_transitive_corollaries",
]
