"""ecclib: exact average-eccentricity invariants, extremal families,
monotone graph transformations, isomorph-free enumeration, and a
conjecture-scanning workbench for small graphs."""

from fractions import Fraction

from .graph import (
    DisconnectedGraphError,
    EccentricityProfile,
    Graph,
    Graph6DecodeError,
    average_eccentricity,
    bfs_distances,
    bridges,
    decode_graph6,
    eccentricity_profile,
    encode_graph6,
    from_edges,
    is_connected,
    is_tree,
    is_unicyclic,
    pendant_vertices,
    relabel,
)
from .canon import canonical_certificate

__all__ = [
    "DisconnectedGraphError",
    "EccentricityProfile",
    "Fraction",
    "Graph",
    "Graph6DecodeError",
    "average_eccentricity",
    "bfs_distances",
    "bridges",
    "canonical_certificate",
    "decode_graph6",
    "eccentricity_profile",
    "encode_graph6",
    "from_edges",
    "is_connected",
    "is_tree",
    "is_unicyclic",
    "pendant_vertices",
    "relabel",
]

__version__ = "0.1.0"
