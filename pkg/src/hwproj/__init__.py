"""Exact and fixed-point projections onto the parity polytope and probability simplex."""
from .core import (
    cut_search,
    pp_membership_test,
    project_l1_ball,
    project_parity_polytope,
    project_simplex,
    project_unit_cube,
    transform_tf,
)
from .fixed import FixedPointFormat, FixedValue, quantize
from .hw import AreaDelayReport, HwProjectionConfig, area_delay_report, hw_project_pp, hw_project_simplex

__all__ = [
    "AreaDelayReport",
    "FixedPointFormat",
    "FixedValue",
    "HwProjectionConfig",
    "area_delay_report",
    "cut_search",
    "hw_project_pp",
    "hw_project_simplex",
    "pp_membership_test",
    "project_l1_ball",
    "project_parity_polytope",
    "project_simplex",
    "project_unit_cube",
    "quantize",
    "transform_tf",
]
