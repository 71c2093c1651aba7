"""Crossing-number certificates for link and spatial graph diagrams."""

from .certificate import Certificate, Refusal, asserted, certify_link
from .diagram import (Diagram, DiagramError, Node, canonical_form, crossing_count, digest,
                      isomorphic, mirror, validate)
from .framework import PlanarFramework, Replacement, certify_framework, compose
from .moves import Move, apply_move, enumerate_moves, search_reduce
from .resolution import A, A_INV, is_adequate_link, resolve_all
from .spatial import (adams_hypotheses, enumerate_smoothings, is_adequate_spatial,
                      is_alternating_spatial, is_reduced_spatial)
from .tangle import associated_tangle, certify_one_vertex, double_tangle

__all__ = [
    "A", "A_INV", "Certificate", "Diagram", "DiagramError", "Move", "Node", "PlanarFramework",
    "Refusal", "Replacement", "adams_hypotheses", "apply_move", "asserted", "associated_tangle",
    "canonical_form", "certify_framework", "certify_link", "certify_one_vertex", "compose",
    "crossing_count", "digest", "double_tangle", "enumerate_moves", "enumerate_smoothings",
    "is_adequate_link", "is_adequate_spatial", "is_alternating_spatial", "is_reduced_spatial",
    "isomorphic", "mirror", "resolve_all", "search_reduce", "validate",
]
