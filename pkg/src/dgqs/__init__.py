"""Exact-arithmetic checks of signless-Laplacian walk-matrix results for
rooted product graphs ``G o P_k``."""

__version__ = "0.1.0"
