from semilab.spectrum.action import (
    InvarianceResult,
    act_backward,
    act_forward,
    invariant_subset_check,
    reach_from,
)
from semilab.spectrum.filters import (
    BasicOpen,
    Filter,
    boundary_approx,
    enumerate_filters,
    format_filter,
    holds,
    is_filter,
    is_relative_ultrafilter,
    principal_filter_of,
    smallest_basic_open,
    up_filter,
)


__all__ = [
    "BasicOpen",
    "Filter",
    "InvarianceResult",
    "act_backward",
    "act_forward",
    "boundary_approx",
    "enumerate_filters",
    "format_filter",
    "holds",
    "invariant_subset_check",
    "is_filter",
    "is_relative_ultrafilter",
    "principal_filter_of",
    "reach_from",
    "smallest_basic_open",
    "up_filter",
]
