"""Companion matrices, permutation groups and lattice ideals of the binomial
ideals ``<prod_{j != i} x_j - x_i : 1 <= i <= n>``."""

__version__ = "0.1.0"
