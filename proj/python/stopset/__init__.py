"""Stopping-set analysis of finite-geometry parity-check matrices.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.  Counts come back as plain python ints no matter how large.
"""

from ._core import (
    CodeFamily,
    ParityCheckMatrix,
    a3_hamming,
    build,
    count_generators,
    count_stopping_generators,
    exhaustive_pattern_analysis,
    exhaustive_ssd,
    gaussian_binomial,
    import_alist,
    import_dense,
    is_incorrigible,
    is_stopping_set,
    monte_carlo,
    peel,
    set_verify_mode,
    ssd_formula,
    stopping_distance,
    t3_fullrank_hamming,
    verify_bec_optimal,
)

__all__ = [
    "CodeFamily",
    "ParityCheckMatrix",
    "a3_hamming",
    "build",
    "count_generators",
    "count_stopping_generators",
    "exhaustive_pattern_analysis",
    "exhaustive_ssd",
    "gaussian_binomial",
    "import_alist",
    "import_dense",
    "is_incorrigible",
    "is_stopping_set",
    "monte_carlo",
    "peel",
    "set_verify_mode",
    "ssd_formula",
    "stopping_distance",
    "t3_fullrank_hamming",
    "verify_bec_optimal",
]
