"""Avoidable vertices, edges and induced paths, with the surrounding graph toolbox."""

__version__ = "0.1.0"
