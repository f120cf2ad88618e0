"""Szilard-engine simulator: quantum and classical entropy production."""

from ._szilard import (
    EnginePoint,
    EnsembleSpec,
    FigureResult,
    SweepGrid,
    classical_binary_entropy,
    classical_engine,
    collapse_transform,
    default_temperature_grid,
    default_wall_grid,
    delta_e,
    delta_wall_levels,
    doublet_mixture_equivalence,
    doublet_splitting,
    e_sym,
    entropy_production,
    equilibrium_wall,
    figure_preset,
    figure_preset_names,
    find_r_star,
    left_level,
    lin_spaced,
    log_spaced,
    low_t_fm_prediction,
    occupancy_probabilities,
    p_star,
    r_sweep,
    right_level,
    state_count,
    system_entropy,
    temp_sweep,
    verify,
)

__all__ = [
    "EnginePoint",
    "EnsembleSpec",
    "FigureResult",
    "SweepGrid",
    "classical_binary_entropy",
    "classical_engine",
    "collapse_transform",
    "default_temperature_grid",
    "default_wall_grid",
    "delta_e",
    "delta_wall_levels",
    "doublet_mixture_equivalence",
    "doublet_splitting",
    "e_sym",
    "entropy_production",
    "equilibrium_wall",
    "figure_preset",
    "figure_preset_names",
    "find_r_star",
    "left_level",
    "lin_spaced",
    "log_spaced",
    "low_t_fm_prediction",
    "occupancy_probabilities",
    "p_star",
    "r_sweep",
    "right_level",
    "state_count",
    "system_entropy",
    "temp_sweep",
    "verify",
]
