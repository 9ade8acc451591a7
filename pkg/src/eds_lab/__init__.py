"""Eccentric distance sum of trees: invariants, enumeration and exhaustive verification."""

from .constructions import build_family, parse_family
from .enumeration import ConstraintSpec, canonical_code, count_free_trees, free_trees, isomorphic
from .kernels import BACKEND
from .params import domination_number, matching_number
from .tree import (
    Tree,
    TreeError,
    degree_distance,
    diameter,
    ecc_connectivity,
    eccentricity,
    eds,
    eds_pair_form,
    invariant_record,
    radius,
    total_eccentricity,
    transmission,
    tree_from_edges,
    wiener,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConstraintSpec",
    "Tree",
    "TreeError",
    "build_family",
    "canonical_code",
    "count_free_trees",
    "degree_distance",
    "diameter",
    "domination_number",
    "ecc_connectivity",
    "eccentricity",
    "eds",
    "eds_pair_form",
    "free_trees",
    "invariant_record",
    "isomorphic",
    "matching_number",
    "parse_family",
    "radius",
    "total_eccentricity",
    "transmission",
    "tree_from_edges",
    "wiener",
]
