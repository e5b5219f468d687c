"""Equivariant and orbifold cohomology of symplectic toric orbifolds.

Everything is computed from a labeled polytope (integer facet normals,
positive integer facet labels, rational offsets) by exact integer and
rational combinatorics: the face ring and its per-vertex piecewise model,
the twisted sectors with their ages and module presentations, the orbifold
product with its multiplication tables, and the fixed-point restriction
ring with its star product.
"""

from .bundled import BUNDLED_NAMES, load_bundled
from .chen_ruan import ChenRuanRing, CRClass, MultiplicationTable, StructureConstant
from .lattice import (
    IntMatrix,
    SNFDecomposition,
    is_free_cokernel,
    kernel_basis,
    snf,
    solve_congruence_group,
)
from .polynomial import Polynomial
from .polytope import (
    Edge,
    FaceComplex,
    LabeledPolytope,
    ValidationReport,
    VertexData,
    ensure_valid,
    enumerate_vertices,
    face_complex,
    validate,
    weight_matrix,
)
from .polytope_file import parse_polytope
from .restriction import (
    NHClass,
    check_homomorphism,
    injectivity_rank_check,
    nh_multiply,
    restrict,
)
from .sectors import SectorElement, SectorTable, enumerate_sectors
from .stanley_reisner import (
    PWTuple,
    SRPresentation,
    face_pullback,
    face_pushforward,
    gkm_membership,
    sr_to_pw,
    vertex_restrict,
)

__version__ = "0.1.0"

__all__ = [
    "BUNDLED_NAMES",
    "CRClass",
    "ChenRuanRing",
    "Edge",
    "FaceComplex",
    "IntMatrix",
    "LabeledPolytope",
    "MultiplicationTable",
    "NHClass",
    "PWTuple",
    "Polynomial",
    "SNFDecomposition",
    "SRPresentation",
    "SectorElement",
    "SectorTable",
    "StructureConstant",
    "ValidationReport",
    "VertexData",
    "check_homomorphism",
    "ensure_valid",
    "enumerate_sectors",
    "enumerate_vertices",
    "face_complex",
    "face_pullback",
    "face_pushforward",
    "gkm_membership",
    "injectivity_rank_check",
    "is_free_cokernel",
    "kernel_basis",
    "load_bundled",
    "nh_multiply",
    "parse_polytope",
    "restrict",
    "snf",
    "solve_congruence_group",
    "sr_to_pw",
    "validate",
    "vertex_restrict",
    "weight_matrix",
]
