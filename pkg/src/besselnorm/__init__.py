"""Besselian crossnorms on finite tensor products of sequence spaces."""
from .config import RunConfig
from .frames import (
    BiorthogonalSystem,
    FrameConstants,
    TailCheck,
    besselian_constant,
    besselian_vector_norm,
    canonical_system,
    frame_constants,
    frame_expand,
    sign_operator_norm,
    system_from_vectors,
    tail_unconditionality_check,
    unconditional_constant,
)
from .lattice import (
    MixedNormVector,
    iso_c0_F,
    iso_c0_c0,
    iso_l1_l1,
    iso_lp_l1,
    lattice_abs,
    lattice_join,
    lattice_leq,
    lattice_meet,
    mixed_norm,
)
from .norms import (
    bess_functional_of_rank_rep,
    besselian_crossnorm,
    besselian_crossnorm_upper,
    hs_norm,
    injective_norm,
    projective_norm,
    uniformity_check,
    uniformity_violation_demo,
)
from .opnorm import NormResult, holder_witness, operator_norm
from .spaces import (
    INF,
    CapExceeded,
    Exponent,
    SpaceDescriptor,
    c0,
    dual_ball_extreme_points,
    dual_exponent,
    exponent,
    lp,
    vector_norm,
)
from .tensor import (
    CoeffTensor,
    RankRep,
    apply_operator_pair,
    coeffs_to_rank_rep,
    elementary,
    pad,
    pair_with_functionals,
    rank_rep_to_coeffs,
    sign_flip,
)

__version__ = "0.1.0"
