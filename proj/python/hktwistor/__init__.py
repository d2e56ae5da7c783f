"""Exact twistor-sphere computations on integral period lattices."""

from ._core import (
    HktError,
    PeriodData,
    antipode,
    covering_radius,
    hodge_type_11,
    integer_kernel,
    is_general_type,
    perp_v_basis,
    pi_map,
    project_to_v,
    q_eval,
    quaternion_report,
    run_cli,
    scan_algebraic,
    scan_non_general_type,
    signature,
    stereographic,
    two_zero_plane,
)

__all__ = [
    "HktError",
    "PeriodData",
    "antipode",
    "covering_radius",
    "hodge_type_11",
    "integer_kernel",
    "is_general_type",
    "perp_v_basis",
    "pi_map",
    "project_to_v",
    "q_eval",
    "quaternion_report",
    "run_cli",
    "scan_algebraic",
    "scan_non_general_type",
    "signature",
    "stereographic",
    "two_zero_plane",
]
