"""Exact enumeration and classification of the regions cut out by the diagonals of a convex polygon."""
from .cycles import (Classification, CycleError, StandardDecomposition, Verdict, canonicalize,
                     classify, contains_indefinite_pattern, diagonal_distance,
                     enumerate_two_standard, gen_distance_two, standard_decomposition)
from .exactgeom import Point2, PolygonSpec, is_generic, orient, random_generic_polygon
from .realize import realize_cycle
from .regions import build_arrangement, enumerate_regions, occurring_cycles, region_count_formula

__version__ = "0.1.0"
