"""Common fixed points and endpoints of finite multi-valued maps."""

from ._mvfp import (
    CertificateError,
    MetricSpace,
    MultiMap,
    Problem,
    cauchy_bound,
    check_recurrence,
    enumerate_endpoints,
    enumerate_fixed_points,
    epsilon_schedule,
    generate_instance,
    hausdorff,
    m_functional,
    parse_problem,
    render_problem,
)

__all__ = [
    "CertificateError",
    "MetricSpace",
    "MultiMap",
    "Problem",
    "cauchy_bound",
    "check_recurrence",
    "enumerate_endpoints",
    "enumerate_fixed_points",
    "epsilon_schedule",
    "generate_instance",
    "hausdorff",
    "load_problem",
    "m_functional",
    "parse_problem",
    "render_problem",
]


def load_problem(path):
    """Parse a problem file from disk; raises ValueError with the collected
    line-numbered issues on malformed input."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_problem(handle.read())
