"""Randomized near-optimality certificate.

Each trial draws a random rectangular matrix, factorizes it, applies the
equal-norm scalings on both sides, and then samples random block
scalings D.  The theory guarantees

    kappa_2(equal-norm scaled)  <=  bound * kappa_2(D-scaled)

for every D, so the maximum observed ratio over all samples must stay
below 1.  Trials are seeded independently through a counter-based
generator (Philox keyed by (seed, trial)), so runs are reproducible and
trials are order-independent.
"""

import numpy as np

from . import core
from .errors import BreakdownError
from .factor import symplectic_qr
from .scaling import scale_cols_inverse, scale_rows, scaling_report
from .structure import BlockDiagScaling


def trial_rng(seed, trial):
    """Independent generator for one trial of a seeded run."""
    key = np.array([np.uint64(seed), np.uint64(trial)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def random_instance(rng, n_pairs, extra_row_pairs=0):
    """Random dense 2m x 2n matrix with m = n_pairs + extra_row_pairs."""
    m = n_pairs + extra_row_pairs
    return rng.standard_normal((2 * m, 2 * n_pairs))


def run_ensemble(n_pairs, trials, seed, samples=100, c_range=(1e-3, 1e3),
                 extra_row_pairs=0):
    """Run the sampled near-optimality check; returns a summary dict.

    For every trial and every sampled D the ratios
    kappa_2(Dr R) / (alpha_R * kappa_2(D R)) and
    kappa_2(S Dc^{-1}) / (alpha_C * kappa_2(S D^{-1})) are recorded; the
    summary reports their maxima (must be <= 1), counts of factorization
    breakdowns, and distribution statistics.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    max_row = 0.0
    max_col = 0.0
    row_ratios = []
    col_ratios = []
    breakdowns = 0
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        g = random_instance(rng, n_pairs, extra_row_pairs)
        try:
            factors = symplectic_qr(g)
        except BreakdownError:
            breakdowns += 1
            continue
        rep_row = scaling_report(factors, "row")
        rep_col = scaling_report(factors, "col")
        for _ in range(samples):
            d = BlockDiagScaling.random(rng, n_pairs, c_range=c_range)
            k_row = core.condition_number(scale_rows(d, factors.r))
            k_col = core.condition_number(scale_cols_inverse(factors.s, d))
            row_ratios.append(rep_row.kappa2_after / (rep_row.bound * k_row))
            col_ratios.append(rep_col.kappa2_after / (rep_col.bound * k_col))
        max_row = max(max_row, max(row_ratios[-samples:]))
        max_col = max(max_col, max(col_ratios[-samples:]))
    row_ratios = np.asarray(row_ratios)
    col_ratios = np.asarray(col_ratios)

    def _dist(x):
        if x.size == 0:
            return {"count": 0}
        return {
            "count": int(x.size),
            "min": float(np.min(x)),
            "median": float(np.median(x)),
            "max": float(np.max(x)),
        }

    return {
        "n_pairs": n_pairs,
        "trials": trials,
        "samples_per_trial": samples,
        "seed": seed,
        "c_range": [float(c_range[0]), float(c_range[1])],
        "breakdowns": breakdowns,
        "max_row_ratio": float(max_row),
        "max_col_ratio": float(max_col),
        "row_ratio_distribution": _dist(row_ratios),
        "col_ratio_distribution": _dist(col_ratios),
        "certificate_holds": bool(max_row <= 1.0 and max_col <= 1.0),
    }
