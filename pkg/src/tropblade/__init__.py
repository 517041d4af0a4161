"""Weakly separated collections, weighted blade arrangements and positive tropical Plücker vectors."""

from .bladecomplex import (
    BladeArrangement,
    LVector,
    L_to_beta,
    beta_to_L,
    boundary_L,
    boundary_beta,
    expand_L,
    pi_coefficients,
    reduce_frozen,
    supp_L,
    total_boundary,
)
from .blades import distance, h_eval, multisplit_cells, osp_of, positive_expression, refinement_signature
from .cones import essential_elements, is_minimal_in_S, lin_equiv, ray_in_L_coords
from .cyclic import CyclicGround, KSubset, boundary_subset, is_frozen, min_elements
from .errors import TropBladeError
from .kernels import BACKEND
from .plabic import build_tiling, fiber_connected, plabic_boundary, structures_isomorphic
from .separation import (
    WCollection,
    apply_flip,
    boundary_collection,
    collection,
    complete,
    find_flips,
    flip_walk,
    is_maximal,
    w0,
    weakly_separated,
)
from .tropical import (
    PluckerVector,
    classify_octahedron,
    d_vector,
    extend_from_seed,
    is_finest,
    is_positive_plucker,
    z_membership,
)

__version__ = "0.1.0"
