"""Grid permutons, the rectangular distance, and Chebyshev-center diagnostics."""

__version__ = "0.1.0"

from .core import (
    TOL,
    BlockSpec,
    GridPermuton,
    MixtureSpec,
    ValidationReport,
    block_permuton,
    from_permutation,
    half_shift,
    make_identity,
    make_reverse,
    make_two_diagonal,
    make_uniform,
    mixture,
    periodize,
    random_sinkhorn,
    validate,
)
from .rects import FracRect, GridRect
from .metric import (
    DistanceResult,
    PrefixTable,
    ToricQuartet,
    distance,
    distance_naive,
    distance_toric,
    prefix_table,
    quartet_differences,
    rect_mass,
    rect_mass_continuous,
    toric_quartet,
)
from .chebyshev import (
    Adversary,
    BoundPair,
    CenterVerdict,
    CheckResult,
    EccentricityResult,
    adversary,
    attaining_permuton,
    center_check,
    check_condition_iii,
    check_condition_iv,
    check_halfwidth_rects,
    eccentricity,
    frechet_bounds,
    is_half_periodic,
)
from .witness import (
    WitnessReport,
    antipode,
    extremal_witness_rect,
    nontrivial_witness,
    trivial_witness_square,
    witness_report,
)
from . import errors

__all__ = [
    "TOL",
    "Adversary",
    "BlockSpec",
    "BoundPair",
    "CenterVerdict",
    "CheckResult",
    "DistanceResult",
    "EccentricityResult",
    "FracRect",
    "GridPermuton",
    "GridRect",
    "MixtureSpec",
    "PrefixTable",
    "ToricQuartet",
    "ValidationReport",
    "WitnessReport",
    "adversary",
    "antipode",
    "attaining_permuton",
    "block_permuton",
    "center_check",
    "check_condition_iii",
    "check_condition_iv",
    "check_halfwidth_rects",
    "distance",
    "distance_naive",
    "distance_toric",
    "eccentricity",
    "errors",
    "extremal_witness_rect",
    "frechet_bounds",
    "from_permutation",
    "half_shift",
    "is_half_periodic",
    "make_identity",
    "make_reverse",
    "make_two_diagonal",
    "make_uniform",
    "mixture",
    "nontrivial_witness",
    "periodize",
    "prefix_table",
    "quartet_differences",
    "random_sinkhorn",
    "rect_mass",
    "rect_mass_continuous",
    "toric_quartet",
    "trivial_witness_square",
    "validate",
    "witness_report",
]
