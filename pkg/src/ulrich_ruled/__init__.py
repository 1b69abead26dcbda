"""Exact numerical calculus of Ulrich bundles on geometrically ruled surfaces."""

from .errors import IntegralityError, InvariantViolation, UlrichError, ValidationError
from .surface import (
    DivisorClass,
    Polarization,
    RuledSurfaceParams,
    canonical_class,
    chi,
    intersect,
)
from .ulrich import Outcome, candidate_classes, existence_verdict, ulrich_dual

__version__ = "0.1.0"

__all__ = [
    "DivisorClass",
    "IntegralityError",
    "InvariantViolation",
    "Outcome",
    "Polarization",
    "RuledSurfaceParams",
    "UlrichError",
    "ValidationError",
    "candidate_classes",
    "canonical_class",
    "chi",
    "existence_verdict",
    "intersect",
    "ulrich_dual",
]
