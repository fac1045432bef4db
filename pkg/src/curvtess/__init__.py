"""Exact tools for planar tessellations with nonnegative combinatorial curvature."""
from fractions import Fraction

from .errors import (
    CurvtessError,
    IncompatibleBoundaries,
    IncompletePattern,
    InvalidArgument,
    MalformedInput,
    NonSimpleResult,
    NonSphericalEmbedding,
    NotNonnegativelyCurved,
    NotPrismlikeStructure,
    TheoremViolation,
    UndefinedForFlat,
)
from .planar_map import (
    Patch,
    PlanarMap,
    ValidationReport,
    dual_adjacency,
    face_degrees,
    from_faces,
    from_rotation_system,
    graph_distance,
    validate_tessellation,
)
from .curvature import (
    GOOD_THRESHOLD,
    CurvatureProfile,
    check_twelfth_integrality,
    classify_vertices,
    curvature,
    curvature_profile,
    format_q,
    pattern_curvature,
    vertex_pattern,
)
from .tables import PatternFamily, enumerate_families, family_curvature, match_pattern
from .generators import (
    GlueSpec,
    antiprism,
    fullerene_c60,
    glue_patches,
    grid_example,
    periodic_closure_check,
    platonic,
    prism,
    subdivide_hexagons,
)
from .prismlike import band_decomposition, is_prismlike, large_face_curvature_sum
from .discharging import DischargingCertificate, bound_from_certificate, find_certificate, verify_certificate
from .automorphism import (
    AutGroup,
    CellularAutomorphism,
    cellular_automorphisms,
    restrict_to_TG,
    verify_order_bounds,
    verify_rigidity,
)

__version__ = "0.1.0"
