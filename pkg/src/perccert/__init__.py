"""Rigorous confidence intervals for percolation thresholds on Archimedean lattices."""

__version__ = "0.1.0"

from .lattice import (  # noqa: F401
    LatticeRep,
    RectGeometry,
    RectGraph,
    load_lattice,
    shipped_names,
)
