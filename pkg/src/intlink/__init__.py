"""Exact verification of forced linking for small simplicial complexes in R^{2n}.

The package builds the relevant complexes combinatorially, realizes them with
exact rational vertex coordinates, and checks double-point and linking
parities instance by instance with zero tolerance.
"""

from .complexes import (
    SimplicialComplex,
    boundary_complex,
    complete_graph,
    complete_multipartite,
    disjoint_union,
    f_vector,
    isomorphic,
    multi_join,
    read_complex,
    remove_top_simplices,
    skeleton_complex,
    standard_complex,
    write_complex,
)
from .errors import (
    DegeneracyError,
    InvalidDeletionError,
    PreconditionError,
    SamplingError,
    UnsupportedDimensionError,
    UnsupportedSizeError,
)
from .geometry import (
    IntersectionResult,
    PointConfig,
    affine_rank,
    double_point_set,
    in_general_position,
    is_linear_embedding,
    lk2,
    pair_intersection,
    read_config,
    sample_config,
    write_config,
)
from .spheres import (
    LinkPair,
    SphereWitness,
    canonical_families,
    canonical_pairs,
    enumerate_sphere_pairs,
    enumerate_spheres,
    recognize_sphere,
)
from .verify import (
    ParityReport,
    extension_crosscheck,
    linking_parity_audit,
    linkless_search,
    linkless_verify,
    vkf_parity,
)
from .fixtures import (
    audit_fixture,
    k33_one_crossing,
    k5_one_crossing,
    minimality_cases,
    pentagon,
)

__version__ = "0.1.0"
