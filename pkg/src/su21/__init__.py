"""Numerics for parabolic representations into SU(2,1).

The package builds and classifies holomorphic isometries of the complex
hyperbolic plane, parametrizes ideal tetrahedra and the representations
of the rank-two free group living over the balanced ones, and traces the
parameter loci where designated words become parabolic.  The ``cli``
module and the ``service`` subpackage expose the same operations over
the command line and HTTP.
"""

from .classify import (
    IsometryClass,
    IsometryTag,
    classify,
    deltoid_point,
    neutral_alpha,
    trace_poly_f,
)
from .config import RunConfig, build_config
from .errors import GeometryError
from .families import (
    FamilyKind,
    FamilyReport,
    FamilyRow,
    family_involution,
    family_member,
    family_params,
    family_sweep,
    family_threshold,
    family_trace,
)
from .hermitian import (
    H,
    BoundaryPoint,
    Isometry,
    eigenvalue_at,
    geodesic_project,
    herm,
    herm_sq,
    is_null,
    polar_vector,
    proj_distance,
    su21_normalize,
)
from .invariants import bending, cartan, cross_ratio, is_complex_linear
from .pinchlocus import (
    X_MAX,
    X_MIN,
    LocusPoint,
    ZeroSetScan,
    both_zero_cells,
    constraint_z,
    find_y_root,
    locus_interval_endpoints,
    poly_P,
    scan_P_zero_set,
    slice_grid,
    solve_locus,
    surface_grid,
    surface_solve_psi,
)
from .representations import (
    ParabolicRep,
    neutral_map,
    reflection_eigenvalues,
    rep_closed_form,
    rep_from_tetra,
)
from .symmetry33 import (
    SymGroup,
    SymGroupParams,
    XYZCoords,
    build_sym_group,
    f_j1j2inv,
    from_xyz,
    j1_matrix,
    j2_matrix,
    jacobian,
    to_xyz,
    trace_commutator,
    trace_j1j2inv,
)
from .tetrahedra import (
    IdealTetrahedron,
    TetraParams,
    extract_params,
    is_balanced,
    standard_lifts,
    transform,
)

__version__ = "0.1.0"

__all__ = [
    "H",
    "BoundaryPoint",
    "FamilyKind",
    "FamilyReport",
    "FamilyRow",
    "GeometryError",
    "IdealTetrahedron",
    "Isometry",
    "IsometryClass",
    "IsometryTag",
    "LocusPoint",
    "ParabolicRep",
    "RunConfig",
    "SymGroup",
    "SymGroupParams",
    "TetraParams",
    "XYZCoords",
    "X_MAX",
    "X_MIN",
    "ZeroSetScan",
    "bending",
    "both_zero_cells",
    "build_config",
    "build_sym_group",
    "cartan",
    "classify",
    "constraint_z",
    "cross_ratio",
    "deltoid_point",
    "eigenvalue_at",
    "extract_params",
    "f_j1j2inv",
    "family_involution",
    "family_member",
    "family_params",
    "family_sweep",
    "family_threshold",
    "family_trace",
    "find_y_root",
    "from_xyz",
    "geodesic_project",
    "herm",
    "herm_sq",
    "is_balanced",
    "is_complex_linear",
    "is_null",
    "j1_matrix",
    "j2_matrix",
    "jacobian",
    "locus_interval_endpoints",
    "neutral_alpha",
    "neutral_map",
    "polar_vector",
    "poly_P",
    "proj_distance",
    "reflection_eigenvalues",
    "rep_closed_form",
    "rep_from_tetra",
    "scan_P_zero_set",
    "slice_grid",
    "solve_locus",
    "standard_lifts",
    "su21_normalize",
    "surface_grid",
    "surface_solve_psi",
    "to_xyz",
    "trace_commutator",
    "trace_j1j2inv",
    "trace_poly_f",
    "transform",
]
