"""Embeddability obstructions for complexes and graphs."""

from .coconnect import CoconnectivityReport, coconnectivity_check, homology_manifold_locus
from .linkless import CycleCapExceeded, linkless_obstruction, x_plus
from .spatial import SpatialGraphEmbedding, gauss_projection_class, isotopy_obstruction
from .vankampen import (
    ObstructionReport,
    Verdict,
    geometric_cocycle,
    h2n_direct,
    h2n_presentation,
    moment_curve_cocycle,
    panelled_cone_obstruction,
    sarkaria_example,
    van_kampen,
)
