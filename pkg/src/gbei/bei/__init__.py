"""Generalized binomial edge ideals: construction, minimal primes, bounds."""

from .bounds import (
    BoundsConsistencyError,
    BoundsReport,
    ara_bounds,
    bounds_report,
    cd_bounds,
    certificate_ara_bounds,
    classify_aci,
    classify_cci,
    classify_ci,
    classify_stci,
    clique_ara_upper,
    pairwise_cd_lower,
)
from .families import (
    clique_with_trees,
    is_edge_join_edge_plus_point,
    join_split,
    join_with_2k1,
    subgraph_embedding,
    two_paths_two_rungs,
)
from .ideals import (
    DecompositionResult,
    GBEIdeal,
    PrimeComponent,
    build_gbei,
    decompose_verify,
    height_formula,
    minimal_primes,
    minors_on,
    mu,
    prime_component,
    sum_height_empty_T,
)
