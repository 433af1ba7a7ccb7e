"""Verify and search for cyclic (circulant) coloring certificates of Ramsey lower bounds."""

from ._kernel import BACKEND
from .certificate import (
    BUILTIN_NAMES,
    ColoringCertificate,
    builtin_certificate,
    parse_certificate,
    serialize_certificate,
    validate_structure,
)
from .circulant import CirculantGraph, VertexSet, circular_distance, edge_color
from .clique import CliqueWitness, brute_force_has_clique, count_cliques_through_zero, has_clique, max_clique_bounded
from .errors import GuardError, ParseError, StructureError, UnknownName
from .search import SearchConfig, search
from .verifier import VerificationReport, verify, verify_with_oracle

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BUILTIN_NAMES",
    "CirculantGraph",
    "CliqueWitness",
    "ColoringCertificate",
    "GuardError",
    "ParseError",
    "SearchConfig",
    "StructureError",
    "UnknownName",
    "VerificationReport",
    "VertexSet",
    "brute_force_has_clique",
    "builtin_certificate",
    "circular_distance",
    "count_cliques_through_zero",
    "edge_color",
    "has_clique",
    "max_clique_bounded",
    "parse_certificate",
    "search",
    "serialize_certificate",
    "validate_structure",
    "verify",
    "verify_with_oracle",
]
