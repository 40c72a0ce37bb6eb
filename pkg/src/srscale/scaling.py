"""Nearly optimal block-diagonal scalings.

Row side: scale an upper-triangular factor R from the left so that every
row of D R has the same 2-norm; the per-block minimum norm is the fourth
root of the two-column Gram determinant of the block row.  Column side:
the dual construction for the permuted symplectic factor S, scaled from
the right by the closed-form block inverse.  Both come with a
near-optimality factor sqrt(2d) * t * sqrt(t^2 + sqrt(t^4 - s^4)) / s^2,
d being the matrix dimension, relating the equal-norm scaling to the
best block-diagonal one.
"""

from dataclasses import dataclass, field

import numpy as np

from . import core
from .errors import (
    DimensionError,
    InfeasibleTargetError,
    RankError,
    SingularityError,
    StructureError,
)
from .factor import SrFactors
from .structure import BlockDiagScaling

SIGN_RULES = ("minus", "plus", "min-abs")


@dataclass(frozen=True)
class LocalBlockResult:
    """Optimal 2x2 scaler for one block, with its minimal norm scale."""

    c: float
    f: float
    magnitude: float  # the per-block minimum row/column norm

    def block(self):
        return np.array([[self.c, self.f], [0.0, 1.0 / self.c]])


@dataclass(frozen=True)
class ScalingReport:
    """Condition numbers and equal-norm data for one scaled factor.

    ``kappa_before`` and ``kappa_after`` are infinity-norm condition
    numbers (the convention used by the report tables);
    ``kappa2_before`` and ``kappa2_after`` are the spectral values.
    """

    side: str  # "row" or "col"
    kappa_before: float
    kappa_after: float
    kappa2_before: float
    kappa2_after: float
    per_block_magnitudes: np.ndarray
    max_magnitude: float
    min_magnitude: float
    bound: float
    equal_norm_achieved: float
    scaling: BlockDiagScaling

    def to_dict(self):
        return {
            "side": self.side,
            "kappa_before": self.kappa_before,
            "kappa_after": self.kappa_after,
            "kappa2_before": self.kappa2_before,
            "kappa2_after": self.kappa2_after,
            "per_block_magnitudes": self.per_block_magnitudes.tolist(),
            "max_magnitude": self.max_magnitude,
            "min_magnitude": self.min_magnitude,
            "bound": self.bound,
            "equal_norm_achieved": self.equal_norm_achieved,
            "scaling_c": self.scaling.c.tolist(),
            "scaling_f": self.scaling.f.tolist(),
        }


def _two_col_stats(b):
    """(||b1||, ||b2||, b1^T b2, gram det) of a two-column block."""
    b = core.as_matrix(b)
    if b.shape[1] != 2:
        raise DimensionError(f"expected exactly 2 columns, got {b.shape[1]}")
    n1 = float(np.linalg.norm(b[:, 0]))
    n2 = float(np.linalg.norm(b[:, 1]))
    ip = float(np.dot(b[:, 0], b[:, 1]))
    gram = n1 * n1 * n2 * n2 - ip * ip
    if gram <= 1e-8 * (n1 * n2) ** 2:
        # nearly parallel columns: the difference of products cancels
        # catastrophically; det(b^T b) = (r11 r22)^2 from a QR sweep is stable
        rr = np.linalg.qr(b, mode="r")
        gram = float(rr[0, 0] * rr[1, 1]) ** 2
    if gram <= (core.ZERO_FACTOR * core.EPS * (n1 * n1 + n2 * n2)) ** 2:
        raise RankError("block is numerically rank deficient")
    return n1, n2, ip, gram


def _quarter_root(gram):
    # exp(0.25 log .) spelled as a power; gram > 0 is guaranteed by the caller
    return float(np.exp(0.25 * np.log(gram)))


def local_optimal_row_block(lj):
    """Scaler minimizing the Frobenius norm of D @ lj^T over blocks [[c,f],[0,1/c]].

    ``lj`` is the transposed j-th block row of R (shape 2n x 2).  Both
    rows of the scaled block then have norm gram^(1/4).
    """
    _, n2, ip, gram = _two_col_stats(lj)
    beta_j = _quarter_root(gram)
    return LocalBlockResult(c=n2 / beta_j, f=-ip / (n2 * beta_j), magnitude=beta_j)


def local_optimal_col_block(sj):
    """Scaler minimizing the Frobenius norm of sj @ D^{-1} (column dual).

    ``sj`` holds one adjacent column pair of the permuted symplectic
    factor.  Both columns of sj @ D^{-1} then have norm gram^(1/4).
    """
    n1, _, ip, gram = _two_col_stats(sj)
    delta_j = _quarter_root(gram)
    return LocalBlockResult(c=n1 / delta_j, f=ip / (n1 * delta_j), magnitude=delta_j)


def block_scaler_condition(result, lj):
    """(kappa_2, kappa_F) of the optimal block scaler, in closed form.

    kappa_F = ||lj||_F^2 / sqrt(gram);
    kappa_2 = (||lj||_F^2 + sqrt(||lj||_F^4 - 4 gram)) / (2 sqrt(gram)).
    """
    n1, n2, _, gram = _two_col_stats(lj)
    fro2 = n1 * n1 + n2 * n2
    root_gram = np.sqrt(gram)
    disc = max(fro2 * fro2 - 4.0 * gram, 0.0)
    kappa2 = (fro2 + np.sqrt(disc)) / (2.0 * root_gram)
    kappa_f = fro2 / root_gram
    return float(kappa2), float(kappa_f)


def _pick_sign(ip_term, root, denom, sign_rule):
    """Solve (ip_term +- root)/denom with the requested branch."""
    if sign_rule not in SIGN_RULES:
        raise ValueError(f"unknown sign rule {sign_rule!r}; expected one of {SIGN_RULES}")
    plus = (ip_term + root) / denom
    minus = (ip_term - root) / denom
    if sign_rule == "plus":
        return plus
    if sign_rule == "minus":
        return minus
    return plus if abs(plus) <= abs(minus) else minus


def _check_upper_triangular(r):
    r = core.as_matrix(r)
    rows, cols = r.shape
    if rows != cols or rows % 2 != 0:
        raise DimensionError(f"expected a square even-dimensional matrix, got {r.shape}")
    if np.max(np.abs(np.tril(r, -1))) > 1e-12 * max(float(np.linalg.norm(r)), 1e-300):
        raise StructureError("matrix is not upper triangular")
    return r


def block_rows(r):
    """Iterate the transposed 2-row blocks of an upper-triangular R."""
    r = core.as_matrix(r)
    return [r[2 * j:2 * j + 2, :].T for j in range(r.shape[0] // 2)]


def block_cols(s):
    """Iterate the adjacent column pairs of a (permuted symplectic) S."""
    s = core.as_matrix(s)
    if s.shape[1] % 2 != 0:
        raise DimensionError("expected an even number of columns")
    return [s[:, 2 * j:2 * j + 2] for j in range(s.shape[1] // 2)]


def _target_and_discriminants(mags, target, pow4):
    mags = np.asarray(mags)
    top = float(np.max(mags))
    if target is None:
        target = top
    elif target < top * (1.0 - core.ZERO_FACTOR * core.EPS):
        raise InfeasibleTargetError(
            f"target {target:.6g} is below the per-block minimum {top:.6g}")
    disc = target ** 4 - pow4
    # the maximizing block has an exactly-zero discriminant; clamp rounding noise
    disc = np.where(disc < 0, np.where(disc > -core.ZERO_FACTOR * core.EPS * target ** 4,
                                       0.0, disc), disc)
    if np.any(disc < 0):
        raise InfeasibleTargetError("negative discriminant: target below a block minimum")
    return float(target), np.sqrt(disc)


def equal_row_norm_scaling(r, beta=None, sign_rule="min-abs"):
    """Block scaling making every row of D @ R have 2-norm ``beta``.

    Per block: c = ||l2|| / beta, f = (-l1^T l2 +- sqrt(beta^4 - beta_j^4))
    / (beta ||l2||).  Default target is the largest per-block minimum.
    Returns (BlockDiagScaling, beta_used).
    """
    r = _check_upper_triangular(r)
    stats = [_two_col_stats(lj) for lj in block_rows(r)]
    mags = np.array([_quarter_root(g) for (_, _, _, g) in stats])
    beta_used, roots = _target_and_discriminants(mags, beta, mags ** 4)
    c = np.array([n2 / beta_used for (_, n2, _, _) in stats])
    f = np.array([
        _pick_sign(-ip, root, beta_used * n2, sign_rule)
        for (_, n2, ip, _), root in zip(stats, roots)
    ])
    return BlockDiagScaling(c=c, f=f), beta_used


def equal_col_norm_scaling(s, delta=None, sign_rule="min-abs"):
    """Block scaling making every column of S @ D^{-1} have 2-norm ``delta``.

    Per block: c = ||s_a|| / delta, f = (s_a^T s_b +- sqrt(delta^4 - gram))
    / (||s_a|| delta).  Returns (BlockDiagScaling, delta_used).
    """
    stats = [_two_col_stats(sj) for sj in block_cols(s)]
    mags = np.array([_quarter_root(g) for (_, _, _, g) in stats])
    grams = np.array([g for (_, _, _, g) in stats])
    delta_used, roots = _target_and_discriminants(mags, delta, grams)
    c = np.array([n1 / delta_used for (n1, _, _, _) in stats])
    f = np.array([
        _pick_sign(ip, root, delta_used * n1, sign_rule)
        for (n1, _, ip, _), root in zip(stats, roots)
    ])
    return BlockDiagScaling(c=c, f=f), delta_used


def _near_optimality_bound(top, bottom, n):
    # the leading factor is sqrt(2 * dimension) = sqrt(4n) for n blocks
    if not (top >= bottom > 0):
        raise ValueError(f"need max >= min > 0, got max={top}, min={bottom}")
    if n < 1:
        raise ValueError("block count must be >= 1")
    inner = max(top ** 4 - bottom ** 4, 0.0)
    return float(np.sqrt(4 * n) * top * np.sqrt(top ** 2 + np.sqrt(inner)) / bottom ** 2)


def row_scaling_bound(beta, gamma, n):
    """Near-optimality factor for the equal-row-norm scaling of R."""
    return _near_optimality_bound(beta, gamma, n)


def col_scaling_bound(delta, mu, n):
    """Near-optimality factor for the equal-column-norm scaling of S."""
    return _near_optimality_bound(delta, mu, n)


def van_der_sluis_row_equilibration(g):
    """Classical diagonal equilibration: reciprocal row 2-norms.

    Returns the positive diagonal (as a 1-d array) making every row of
    diag(.) @ g have unit norm.
    """
    g = core.as_matrix(g)
    norms = np.linalg.norm(g, axis=1)
    if np.any(norms == 0.0):
        raise SingularityError("matrix has a zero row")
    return 1.0 / norms


def scale_rows(d, r):
    """D @ R for a BlockDiagScaling D."""
    return d.matrix() @ core.as_matrix(r)


def scale_cols_inverse(s, d):
    """S @ D^{-1} for a BlockDiagScaling D, using the closed-form inverse."""
    return core.as_matrix(s) @ d.inverse().matrix()


def scaling_report(factors, side, sign_rule="min-abs", target=None, precise="auto"):
    """Full equal-norm scaling report for one side of an SR factorization.

    ``factors`` may be an SrFactors bundle or a bare matrix (R for
    side="row", S for side="col").  Condition numbers escalate to
    multiprecision automatically when they exceed what a double-precision
    SVD resolves.
    """
    if side not in ("row", "col"):
        raise ValueError(f"side must be 'row' or 'col', got {side!r}")
    if isinstance(factors, SrFactors):
        mat = factors.r if side == "row" else factors.s
    else:
        mat = core.as_matrix(factors)

    if side == "row":
        mat = _check_upper_triangular(mat)
        d, achieved = equal_row_norm_scaling(mat, beta=target, sign_rule=sign_rule)
        scaled = scale_rows(d, mat)
        mags = np.array([local_optimal_row_block(lj).magnitude for lj in block_rows(mat)])
        bound_fn = row_scaling_bound
    else:
        d, achieved = equal_col_norm_scaling(mat, delta=target, sign_rule=sign_rule)
        scaled = scale_cols_inverse(mat, d)
        mags = np.array([local_optimal_col_block(sj).magnitude for sj in block_cols(mat)])
        bound_fn = col_scaling_bound

    top, bottom = float(np.max(mags)), float(np.min(mags))
    return ScalingReport(
        side=side,
        kappa_before=core.condition_number_inf(mat, precise=precise),
        kappa_after=core.condition_number_inf(scaled, precise=precise),
        kappa2_before=core.condition_number(mat, precise=precise),
        kappa2_after=core.condition_number(scaled, precise=precise),
        per_block_magnitudes=mags,
        max_magnitude=top,
        min_magnitude=bottom,
        bound=bound_fn(top, bottom, mags.size),
        equal_norm_achieved=achieved,
        scaling=d,
    )
