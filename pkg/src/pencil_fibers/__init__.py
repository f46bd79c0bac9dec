"""Integral components of the special fibers of a pencil of plane curves.

Everything is exact: coefficients live in a number field Q(a) given by a
minimal polynomial, and base points must be rational over that field.
"""

from .base_points import Pencil, resolve_base_locus
from .cluster import Cluster, ClusterPoint
from .driver import compute, group_into_fibers, special_fiber_components, verify_output
from .enumerator import BACKEND, enumerate_candidates
from .errors import (
    ExtensionRequired,
    FixedComponent,
    InputError,
    InvariantViolation,
    PencilError,
)
from .field import QQ, FieldElement, NumberField
from .parsing import parse_polynomial, read_input
from .poly import MultiPoly, canonical_form

__all__ = [
    "BACKEND",
    "Cluster",
    "ClusterPoint",
    "ExtensionRequired",
    "FieldElement",
    "FixedComponent",
    "InputError",
    "InvariantViolation",
    "MultiPoly",
    "NumberField",
    "Pencil",
    "PencilError",
    "QQ",
    "canonical_form",
    "compute",
    "enumerate_candidates",
    "group_into_fibers",
    "parse_polynomial",
    "read_input",
    "resolve_base_locus",
    "special_fiber_components",
    "verify_output",
]
