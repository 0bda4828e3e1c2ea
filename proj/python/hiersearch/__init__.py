"""Hierarchical collaborative random search with matched-budget baselines."""

from ._core import (
    ConfigError,
    DomainError,
    SearchSpace,
    benchmark_eval,
    benchmark_info,
    benchmark_keys,
    hierarchy_info,
    latin_hypercube,
    make_space,
    random_search,
    run_benchmark,
    tune,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "SearchSpace",
    "benchmark_eval",
    "benchmark_info",
    "benchmark_keys",
    "hierarchy_info",
    "latin_hypercube",
    "make_space",
    "random_search",
    "run_benchmark",
    "tune",
]
