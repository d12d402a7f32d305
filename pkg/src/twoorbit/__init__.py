"""Combinatorics of two-orbit polytopes and tilings.

Face lattices and their validation, flag graphs, automorphism groups and flag
orbits, distinguished generators and Coxeter matrices, a catalog of polytopes
with rectification, and the tiling-side counting arguments.
"""
from .catalog import CatalogKey, make, rectify
from .classification import (AngleCountInput, angle_sum_check, classify, coxeter_matrix,
                             distinguished_generators)
from .flags import adjacent_flag, build_flag_graph, chains_of_cotype
from .lattice import FaceLattice, are_isomorphic, dual, section, validate, vertex_figure
from .orbits import (analyze, automorphism_group, chain_orbit_count, check_two_orbit_lemmas,
                     modified_schlafli, orbit_report)
from .tiling import (QuadIntZ14, build_torus_quotient, analyze_quotient, growth_closed_form,
                     growth_step, normality_crossing, solve_planar_tile_transitive,
                     solve_planar_vertex_transitive)

__version__ = "0.1.0"

__all__ = [
    "AngleCountInput", "CatalogKey", "FaceLattice", "QuadIntZ14", "adjacent_flag", "analyze",
    "analyze_quotient", "angle_sum_check", "are_isomorphic", "automorphism_group",
    "build_flag_graph", "build_torus_quotient", "chain_orbit_count", "chains_of_cotype",
    "check_two_orbit_lemmas", "classify", "coxeter_matrix", "distinguished_generators", "dual",
    "growth_closed_form", "growth_step", "make", "modified_schlafli", "normality_crossing",
    "orbit_report", "rectify", "section", "solve_planar_tile_transitive",
    "solve_planar_vertex_transitive", "validate", "vertex_figure",
]
