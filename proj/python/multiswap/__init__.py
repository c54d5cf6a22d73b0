"""Multi-state swap-test circuits, simulation and overlap estimation."""

from ._core import (
    ConfigError,
    DataError,
    estimate,
    exact_overlap,
    load_states,
    permutation_table,
    precision,
    replay,
    resources,
    run_experiment,
    success_probability,
)

__all__ = [
    "ConfigError",
    "DataError",
    "estimate",
    "exact_overlap",
    "load_states",
    "permutation_table",
    "precision",
    "replay",
    "resources",
    "run_experiment",
    "success_probability",
]
