"""Combinatorial polyhedral maps and surface patterns.

Build cycle collections, validate them as polyhedral complexes, check
manifoldness and orientability, generate the cyclic self-dual equivelar
families and the prime-indexed surface patterns, and compute flag-level
symmetry: automorphism groups, regularity, duals, and isomorphism.
"""

from .analysis import AnalysisReport, analyze
from .complexes import (
    CycleCollection,
    EquivelarType,
    FVector,
    Graph,
    PolygonalComplex,
    build_collection,
    canonical_cycle,
    collection_f_vector,
    diagonal_count,
    edge_graph,
    equivelar_type,
    euler_characteristic,
    f_vector,
    is_connected,
    is_polyhedral_map,
    is_weakly_neighbourly,
    polyhedral_map_defects,
    validate_polyhedral,
    vertex_rotation,
)
from .constructions import (
    PPReport,
    b_sequence,
    construct_even,
    construct_odd,
    is_prime,
    pattern_collection,
    pattern_cycles,
    pp_permutation,
    rho_permutation,
    sigma_permutation,
    tetrahedron,
    torus_pattern,
    verify_pp,
)
from .errors import (
    BadResidueClass,
    CycleTooShort,
    DuplicateFace,
    EquivelarError,
    IntersectionViolation,
    InvalidCombination,
    InvalidParameters,
    NotAManifold,
    NotAPolyhedralMap,
    PPViolation,
    RepeatedVertexInCycle,
    UnknownVertex,
)
from .surfaces import (
    SimplicialComplex2,
    SurfaceClass,
    bar_complex,
    barycentric_subdivision,
    classify_surface,
    is_combinatorial_2_manifold,
    is_orientable,
    is_orientable_simplicial,
    link_of_vertex,
    manifold_defects,
)
from .symmetry import (
    AutomorphismGroup,
    Flag,
    FlagGraph,
    Transitivity,
    are_isomorphic,
    automorphism_group,
    dual,
    flag_graph,
    is_combinatorially_regular,
    is_isomorphism,
    is_self_dual,
    propagate,
    transitivity,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "AutomorphismGroup",
    "BadResidueClass",
    "CycleCollection",
    "CycleTooShort",
    "DuplicateFace",
    "EquivelarError",
    "EquivelarType",
    "FVector",
    "Flag",
    "FlagGraph",
    "Graph",
    "IntersectionViolation",
    "InvalidCombination",
    "InvalidParameters",
    "NotAManifold",
    "NotAPolyhedralMap",
    "PPReport",
    "PPViolation",
    "PolygonalComplex",
    "RepeatedVertexInCycle",
    "SimplicialComplex2",
    "SurfaceClass",
    "Transitivity",
    "UnknownVertex",
    "analyze",
    "are_isomorphic",
    "automorphism_group",
    "b_sequence",
    "bar_complex",
    "barycentric_subdivision",
    "build_collection",
    "canonical_cycle",
    "classify_surface",
    "collection_f_vector",
    "construct_even",
    "construct_odd",
    "diagonal_count",
    "dual",
    "edge_graph",
    "equivelar_type",
    "euler_characteristic",
    "f_vector",
    "flag_graph",
    "is_combinatorial_2_manifold",
    "is_combinatorially_regular",
    "is_connected",
    "is_isomorphism",
    "is_orientable",
    "is_orientable_simplicial",
    "is_polyhedral_map",
    "is_prime",
    "is_self_dual",
    "is_weakly_neighbourly",
    "link_of_vertex",
    "manifold_defects",
    "pattern_collection",
    "pattern_cycles",
    "polyhedral_map_defects",
    "pp_permutation",
    "propagate",
    "rho_permutation",
    "sigma_permutation",
    "tetrahedron",
    "torus_pattern",
    "transitivity",
    "validate_polyhedral",
    "verify_pp",
    "vertex_rotation",
]
