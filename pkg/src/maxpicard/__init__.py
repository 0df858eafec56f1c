"""Exact constructions of surfaces of general type with maximal Picard number.

The package builds bidouble covers of rational surfaces from their building
data, computes their invariants, tracks their ADE singularities from explicit
coordinates and certifies ``rho = h11`` by a lattice rank lower bound.
"""

from .certify import Certificate, certify_maximal, matrix_rank, rank_lower_bound
from .constructions import (
    ConstructionRecord,
    FamilyParams,
    census_pipeline,
    construct_m13,
    construct_m76,
    family_a,
    family_b,
)
from .covers import (
    BuildingData,
    SingularEvent,
    bidouble_invariants,
    cyclic_census_transport,
    cyclic_pullback,
    half_canonical_ample,
    validate_building_data,
)
from .geography import (
    density_witness,
    horikawa_coverage,
    in_theorem_region,
    is_admissible,
    solve_family_a,
    solve_family_b,
    sweep,
)
from .singularities import (
    AdeType,
    Germ,
    GermClass,
    SingularityCensus,
    TransportRule,
    classify_double_point_surface,
    classify_germ,
    dynkin_matrix,
    milnor_number,
    rank,
    transport,
)
from .surfaces import (
    BaseSurface,
    DivisorClass,
    Positivity,
    SurfaceInvariants,
    canonical_class,
    h0,
    intersect,
    positivity,
)

__version__ = "0.1.0"
