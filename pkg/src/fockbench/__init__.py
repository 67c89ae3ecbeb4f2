"""Numerical workbench for displacement and su(1,1) generalized coherent
operators on truncated Fock spaces: closed-form matrix elements, traces,
disentangling/decomposition identities, resolutions of unity, reconstruction
formulas, and the associated quadrature rules.
"""
from fockbench.coherent import (
    coherent_state,
    composition_phase,
    displacement,
    glauber_reconstruct,
    regularized_trace_u,
    regularized_trace_u_closed,
    resolution_identity_coherent,
    u_element_closed,
)
from fockbench.fock import (
    OverflowInfeasible,
    SafeSector,
    TruncatedSpace,
    UnitaryResult,
    build_ladder,
    build_spin_k,
    default_safe_sector,
    exp_antihermitian,
    exp_general,
    make_space,
    operator_norm,
    project_safe,
    tensor_product,
)
from fockbench.reports import CheckReport, failure_report, make_report, write_csv, write_ndjson
from fockbench.quadrature import (
    DiskGrid,
    PlaneGrid,
    TailBoundError,
    conjecture_integral,
    integrate_disk_hyperbolic,
    integrate_plane,
)
from fockbench.schwinger import (
    paris_residual,
    single_mode_su11,
    squeeze,
    total_quanta_indices,
    two_mode_operators,
    two_mode_v,
    two_mode_w,
)
from fockbench.suites import (
    SUITE_NAMES,
    SuiteRequest,
    SuiteResult,
    UnknownSuiteError,
    limit_study,
    run_request,
    run_suite,
)
from fockbench.su11 import (
    Chi,
    DiskPoint,
    Kappa,
    SpinWeight,
    TraceDivergence,
    decomposition_residual,
    defining_rep,
    disentangle_cutoff,
    disentangle_residual,
    generalized_coherent_state,
    glauber_su11_reconstruct,
    map_z,
    perelomov_state,
    resolution_identity_su11,
    trace_v_closed,
    trace_v_numeric,
    v_element_closed,
)

__all__ = [
    "CheckReport",
    "Chi",
    "DiskGrid",
    "DiskPoint",
    "Kappa",
    "OverflowInfeasible",
    "PlaneGrid",
    "SUITE_NAMES",
    "SafeSector",
    "SpinWeight",
    "SuiteRequest",
    "SuiteResult",
    "TailBoundError",
    "TraceDivergence",
    "TruncatedSpace",
    "UnitaryResult",
    "UnknownSuiteError",
    "build_ladder",
    "build_spin_k",
    "coherent_state",
    "composition_phase",
    "conjecture_integral",
    "decomposition_residual",
    "default_safe_sector",
    "defining_rep",
    "disentangle_cutoff",
    "disentangle_residual",
    "displacement",
    "exp_antihermitian",
    "exp_general",
    "failure_report",
    "generalized_coherent_state",
    "glauber_reconstruct",
    "glauber_su11_reconstruct",
    "integrate_disk_hyperbolic",
    "integrate_plane",
    "limit_study",
    "make_report",
    "make_space",
    "map_z",
    "operator_norm",
    "paris_residual",
    "perelomov_state",
    "project_safe",
    "regularized_trace_u",
    "regularized_trace_u_closed",
    "resolution_identity_coherent",
    "resolution_identity_su11",
    "run_request",
    "run_suite",
    "single_mode_su11",
    "squeeze",
    "tensor_product",
    "total_quanta_indices",
    "trace_v_closed",
    "trace_v_numeric",
    "two_mode_operators",
    "two_mode_v",
    "two_mode_w",
    "u_element_closed",
    "v_element_closed",
    "write_csv",
    "write_ndjson",
]

__version__ = "0.1.0"
