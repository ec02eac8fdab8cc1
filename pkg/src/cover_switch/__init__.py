"""Hypergraph edge-switching and exact checks of independent-set bounds in K_n-covered graphs."""

__version__ = "0.1.0"
