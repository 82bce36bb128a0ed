"""Exact evaluation and symmetries of SL3 Littlewood-Richardson coefficients."""

__version__ = "0.1.0"

from .chamber import chambers_containing, cross_validate, evaluate_C, load_complex, nu3
from .gl3 import GL3Triple, check_gl3_generator, gl3_extra_generator, reduce_to_sl3
from .lifting import (
    LinearSymmetry,
    certify_symmetry,
    full_symmetry_group,
    induced_chamber_map,
    known_symmetries,
    lift,
    orbit_of_triple,
)
from .oracle import enumerate_lr_tableaux, lr_coefficient
from .raysym import Perm, automorphisms, build_graph, closure, orbit, verify_relations

__all__ = [
    "GL3Triple", "LinearSymmetry", "Perm", "automorphisms", "build_graph",
    "certify_symmetry", "chambers_containing", "check_gl3_generator", "closure",
    "cross_validate", "enumerate_lr_tableaux", "evaluate_C", "full_symmetry_group",
    "gl3_extra_generator", "induced_chamber_map", "known_symmetries", "lift",
    "load_complex", "lr_coefficient", "nu3", "orbit", "orbit_of_triple",
    "reduce_to_sl3", "verify_relations",
]
