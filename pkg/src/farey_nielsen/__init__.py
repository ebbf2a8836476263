"""Exact Farey-graph geometry and Nielsen classes of 2-generated mapping torus groups."""

from .actions import classify_matrix, fixed_points, standard_form
from .exact import INFINITY, ZERO, FareyVertex, Mat2, vertex
from .farey import farey_distance, turning_number
from .forms import BinaryQuadraticForm, form_of_matrix, represents_unit
from .nielsen import (
    GeneratingPair,
    GroupElement,
    is_generating_pair,
    nielsen_bfs_search,
    nielsen_class_count,
    nielsen_class_of,
    reduce_pair,
)
from .orbits import centralizer_index, count_one_orbits, one_orbit_representatives, same_one_orbit

__all__ = [
    "INFINITY", "ZERO", "FareyVertex", "Mat2", "vertex",
    "BinaryQuadraticForm", "form_of_matrix", "represents_unit",
    "farey_distance", "turning_number",
    "classify_matrix", "fixed_points", "standard_form",
    "centralizer_index", "count_one_orbits", "one_orbit_representatives", "same_one_orbit",
    "GeneratingPair", "GroupElement", "is_generating_pair", "nielsen_bfs_search",
    "nielsen_class_count", "nielsen_class_of", "reduce_pair",
]
