"""Exact solvers for satisfactory budget division."""

from ._core import (
    Instance,
    SatdivError,
    all_agents_sat,
    builtin,
    dictator,
    fixture,
    max_satisfied,
    min_budget,
    satisfied,
    three_agent,
    two_agent_four,
    utilitarian,
    verify,
)

__all__ = [
    "Instance",
    "SatdivError",
    "all_agents_sat",
    "builtin",
    "dictator",
    "fixture",
    "max_satisfied",
    "min_budget",
    "satisfied",
    "three_agent",
    "two_agent_four",
    "utilitarian",
    "verify",
]
