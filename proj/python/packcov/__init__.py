"""Packing and covering densities of convex disks.

Exact lattice packing and covering densities of centrally symmetric convex
polygons via extremal inscribed/circumscribed hexagons, the closed-form leaf
density arcs, and the density-plane region predicates, all backed by the C++
core.
"""

from ._core import (
    alpha_point,
    beta_point,
    classify,
    lattice_densities,
    leaf_boundary,
    octagon_band_bounds,
    pentagon_vertices,
    run_cli,
    run_validation,
    scatter,
    scatter_csv,
)

__all__ = [
    "alpha_point",
    "beta_point",
    "classify",
    "lattice_densities",
    "leaf_boundary",
    "octagon_band_bounds",
    "pentagon_vertices",
    "run_cli",
    "run_validation",
    "scatter",
    "scatter_csv",
]

__version__ = "0.1.0"
