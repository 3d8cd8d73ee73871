"""Progressive MAC laboratory: dependency sets, analytics and simulations."""

from ._core import (
    ConfigError,
    Error,
    InfeasibleError,
    ProtocolError,
    build_profile,
    delay_curve,
    figure_manifest,
    ge_stationary_per,
    is_g_sidon,
    jam_success_probability,
    known_optimal_ruler,
    memory_bytes,
    profile_max_delay,
    profile_orders,
    run_experiment,
    search_shortest_sets,
    sign_stream,
    worst_case_resilience,
)
from .csv_schema import SCHEMAS, FIGURE_SCENARIOS, SchemaError, validate_csv

__all__ = [
    "ConfigError",
    "Error",
    "FIGURE_SCENARIOS",
    "InfeasibleError",
    "ProtocolError",
    "SCHEMAS",
    "SchemaError",
    "build_profile",
    "delay_curve",
    "figure_manifest",
    "ge_stationary_per",
    "is_g_sidon",
    "jam_success_probability",
    "known_optimal_ruler",
    "memory_bytes",
    "profile_max_delay",
    "profile_orders",
    "run_experiment",
    "search_shortest_sets",
    "sign_stream",
    "validate_csv",
    "worst_case_resilience",
]
