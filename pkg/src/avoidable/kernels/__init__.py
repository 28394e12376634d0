"""Compiled kernels (numba when available, plain Python otherwise)."""
