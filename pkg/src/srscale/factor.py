"""Factorizations the block scalings act on.

* symplectic QR of a rectangular 2m x 2n matrix, returned in permuted
  form G P = S R with S^T J S = Jhat(1:2n,1:2n) and R upper triangular;
* the skew-symmetric Gram matrix G^T J G;
* the Cholesky-like factorization A = L^T Jhat L of a skew-symmetric
  matrix with nonsingular even leading minors.
"""

from dataclasses import dataclass, field

import numpy as np

from . import core, structure
from .errors import (
    BreakdownError,
    DimensionError,
    NonFactorizableError,
    StructureError,
)


@dataclass(frozen=True)
class SrFactors:
    """Permuted SR factorization bundle: G[:, col_perm] = S @ R.

    S (2m x 2n) satisfies S^T J S = Jhat(1:2n,1:2n); R (2n x 2n) is upper
    triangular with nonsingular 2x2 diagonal blocks; col_perm records the
    column pivoting, interleaving included.
    """

    s: np.ndarray
    r: np.ndarray
    col_perm: np.ndarray


@dataclass(frozen=True)
class SkewCholFactors:
    """Cholesky-like factors of a skew-symmetric matrix: A = L^T Jhat L.

    L is upper triangular with diagonal 2x2 blocks diag(l, sign*l),
    l > 0; ``signs`` records the per-block sign.
    """

    l: np.ndarray
    signs: np.ndarray = field(default=None)


def _jdot(u, v, m):
    """u^T J v for the standard J of half size m, without forming J."""
    return float(np.dot(u[:m], v[m:]) - np.dot(u[m:], v[:m]))


def _japply(w, m):
    """J @ w columnwise for the standard J of half size m."""
    return np.vstack([w[m:], -w[:m]])


def symplectic_qr(g):
    """Symplectic QR factorization with column-pair pivoting.

    Modified symplectic Gram-Schmidt over the column pairs
    (g_j, g_{n+j}), processed in shuffled order, with right-looking
    J-orthogonalization, pivoting on the largest remaining pair pivot
    |u^T J v|, and one reorthogonalization pass per accepted pair.
    """
    g = core.as_matrix(g)
    rows, cols = g.shape
    if rows % 2 != 0 or cols % 2 != 0:
        raise DimensionError(f"expected even dimensions, got {g.shape}")
    if rows < cols:
        raise DimensionError("G must have at least as many rows as columns")
    m, n = rows // 2, cols // 2

    # interleave the natural pairs (g_j, g_{n+j}); pivoting permutes pairs
    order = np.empty(cols, dtype=np.intp)
    order[0::2] = np.arange(n)
    order[1::2] = np.arange(n) + n
    work = g[:, order].copy()

    tol = core.ZERO_FACTOR * core.EPS * float(np.linalg.norm(g)) ** 2
    s = np.zeros((rows, cols))
    r = np.zeros((cols, cols))

    for j in range(n):
        # pivot: remaining pair with largest |u^T J v|
        pivots = np.array(
            [abs(_jdot(work[:, 2 * p], work[:, 2 * p + 1], m)) for p in range(j, n)]
        )
        best = j + int(np.argmax(pivots))
        if pivots[best - j] <= tol:
            raise BreakdownError(j, f"no admissible pivot pair at stage {j} "
                                    f"(largest |pivot| = {pivots[best - j]:.3e})")
        if best != j:
            cj, cb = slice(2 * j, 2 * j + 2), slice(2 * best, 2 * best + 2)
            work[:, cj], work[:, cb] = work[:, cb].copy(), work[:, cj].copy()
            r[:, cj], r[:, cb] = r[:, cb].copy(), r[:, cj].copy()
            order[cj], order[cb] = order[cb].copy(), order[cj].copy()

        pair = work[:, 2 * j:2 * j + 2]
        if j > 0:
            # two reorthogonalization passes against all accepted pairs
            # (the right-looking update already projected once; "twice is
            # enough" keeps the structure residual at working precision)
            accepted = s[:, :2 * j]
            for _ in range(2):
                jp = _japply(pair, m)
                coef = accepted.T @ jp  # rows: accepted index, cols: pair column
                # coefficients: a_i = -s_{2i+1}^T J w, b_i = s_{2i}^T J w
                a = np.empty_like(coef)
                a[0::2] = -coef[1::2]
                a[1::2] = coef[0::2]
                pair = pair - accepted @ a
                r[:2 * j, 2 * j:2 * j + 2] += a

        u, v = pair[:, 0], pair[:, 1]
        p = _jdot(u, v, m)
        if abs(p) <= tol:
            raise BreakdownError(j, f"pivot vanished after reorthogonalization at stage {j}")
        r11 = float(np.linalg.norm(u))
        s1 = u / r11
        r12 = float(np.dot(s1, v))
        r22 = p / r11
        s2 = (v - r12 * s1) / r22
        s[:, 2 * j] = s1
        s[:, 2 * j + 1] = s2
        r[2 * j, 2 * j] = r11
        r[2 * j, 2 * j + 1] = r12
        r[2 * j + 1, 2 * j + 1] = r22

        if j + 1 < n:
            # right-looking update of the remaining pair columns
            rest = work[:, 2 * j + 2:]
            b = _japply(np.column_stack([s1, s2]), m).T @ rest  # (2, rest)
            coef = np.vstack([-b[1], b[0]])
            work[:, 2 * j + 2:] = rest - np.column_stack([s1, s2]) @ coef
            r[2 * j:2 * j + 2, 2 * j + 2:] += coef

    return SrFactors(s=s, r=r, col_perm=order)


def skew_gram(g):
    """The skew-symmetric Gram matrix G^T J G, symmetrized to exact skew form."""
    g = core.as_matrix(g)
    rows, cols = g.shape
    if rows % 2 != 0 or cols % 2 != 0:
        raise DimensionError(f"expected even dimensions, got {g.shape}")
    a = g.T @ _japply(g, rows // 2)
    return (a - a.T) / 2.0


def skew_cholesky(a):
    """Cholesky-like factorization of a skew-symmetric matrix.

    Returns L upper triangular with diagonal blocks diag(l, sign*l),
    l > 0, such that L^T Jhat(1:2n,1:2n) L = A.  Blockwise right-looking
    elimination in 2x2 panels, no pivoting.
    """
    a = core.as_matrix(a)
    rows, cols = a.shape
    if rows != cols or rows % 2 != 0:
        raise DimensionError(f"expected a square even-dimensional matrix, got {a.shape}")
    norm_a = float(np.linalg.norm(a))
    if float(np.linalg.norm(a + a.T)) > 1e-10 * norm_a:
        raise StructureError("input is not skew-symmetric")
    work = (a - a.T) / 2.0
    n = rows // 2
    l = np.zeros_like(work)
    signs = np.empty(n)
    tol = core.ZERO_FACTOR * core.EPS * norm_a
    j1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
    for j in range(n):
        k = 2 * j
        piv = work[k, k + 1]
        if abs(piv) <= tol:
            raise NonFactorizableError(j, f"leading block {j} is numerically singular "
                                          f"(pivot {piv:.3e})")
        ell = np.sqrt(abs(piv))
        sign = 1.0 if piv > 0 else -1.0
        signs[j] = sign
        l[k, k] = ell
        l[k + 1, k + 1] = sign * ell
        if k + 2 < rows:
            # L11^T J1 L12 = A12  =>  L12 = (L11^T J1)^{-1} A12
            a12 = work[k:k + 2, k + 2:]
            inv = np.array([[0.0, -1.0 / (sign * ell)], [1.0 / ell, 0.0]])
            l12 = inv @ a12
            l[k:k + 2, k + 2:] = l12
            work[k + 2:, k + 2:] -= l12.T @ j1 @ l12
    return SkewCholFactors(l=l, signs=signs)


def skew_chol_reconstruct(factors):
    """L^T Jhat L from SkewCholFactors (for residual checks)."""
    l = factors.l
    n = l.shape[0] // 2
    return l.T @ structure.jmat(n, "hatted") @ l
