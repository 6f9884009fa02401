"""Step-function approximation by matching pursuit over rectangular windows."""

from ._stepmp import (
    ExpansionTerm,
    GreedyExpansion,
    KMeansResult,
    ScoredAtom,
    WindowAtom,
    alternating_modulus,
    best_window,
    best_window_single_signed,
    breakpoints,
    brute_force_best,
    energy_ledger,
    inner_product,
    kmeans_1d,
    mse,
    preset_names,
    pursuit_step,
    reconstruct,
    run_pursuit,
    simulate,
    three_term_max,
    verify,
)

__all__ = [
    "ExpansionTerm",
    "GreedyExpansion",
    "KMeansResult",
    "ScoredAtom",
    "WindowAtom",
    "alternating_modulus",
    "best_window",
    "best_window_single_signed",
    "breakpoints",
    "brute_force_best",
    "energy_ledger",
    "inner_product",
    "kmeans_1d",
    "mse",
    "preset_names",
    "pursuit_step",
    "reconstruct",
    "run_pursuit",
    "simulate",
    "three_term_max",
    "verify",
]
