"""Symplectic bookkeeping: J matrices, the perfect shuffle, structure
predicates, and the 2x2-block upper-triangular scaling type."""

from dataclasses import dataclass

import numpy as np

from . import core
from .errors import DimensionError, SingularityError


def shuffle_indices(m):
    """Column order of the perfect shuffle P = (e1, e3, ..., e2, e4, ...).

    Returns the 0-based index array ``cols`` such that the shuffle matrix
    is ``I[:, cols]``.
    """
    if m < 1:
        raise DimensionError("half size must be >= 1")
    return np.concatenate([np.arange(0, 2 * m, 2), np.arange(1, 2 * m, 2)])


def shuffle_matrix(m):
    """Dense 2m x 2m perfect-shuffle permutation matrix."""
    return np.eye(2 * m)[:, shuffle_indices(m)]


def jmat(m, variant="standard"):
    """The canonical skew form of size 2m x 2m.

    variant="standard": [[0, I], [-I, 0]].
    variant="hatted":   block diagonal of m copies of [[0, 1], [-1, 0]],
    which equals P J P^T for the matching perfect shuffle.
    """
    if m < 1:
        raise DimensionError("half size must be >= 1")
    j = np.zeros((2 * m, 2 * m))
    if variant == "standard":
        j[:m, m:] = np.eye(m)
        j[m:, :m] = -np.eye(m)
    elif variant == "hatted":
        idx = np.arange(0, 2 * m, 2)
        j[idx, idx + 1] = 1.0
        j[idx + 1, idx] = -1.0
    else:
        raise ValueError(f"unknown J variant {variant!r}")
    return j


def shuffle_conjugate(m_mat, inverse=False):
    """Conjugate a square even-dimensional matrix by the perfect shuffle.

    Returns P M P^T (or P^T M P with ``inverse=True``).  Implemented by
    index gathering, so it is exact and O(size^2).
    """
    m_mat = core.as_matrix(m_mat)
    rows, cols = m_mat.shape
    if rows != cols or rows % 2 != 0:
        raise DimensionError(f"expected a square even-dimensional matrix, got {m_mat.shape}")
    idx = shuffle_indices(rows // 2)
    if inverse:
        return m_mat[np.ix_(idx, idx)]
    pos = np.argsort(idx)
    return m_mat[np.ix_(pos, pos)]


def default_tol(m_mat):
    """Default structural tolerance: 1e-10 * ||input||_F."""
    return 1e-10 * core.frobenius_norm(m_mat)


def symplectic_residual(s):
    """Frobenius norm of S^T J S - Jhat(1:2n,1:2n) for S of shape 2m x 2n."""
    s = core.as_matrix(s)
    rows, cols = s.shape
    if rows % 2 != 0 or cols % 2 != 0:
        raise DimensionError(f"expected even dimensions, got {s.shape}")
    if rows < cols:
        raise DimensionError("S must have at least as many rows as columns")
    m = rows // 2
    js = np.vstack([s[m:, :], -s[:m, :]])  # J @ s without forming J
    return float(np.linalg.norm(s.T @ js - jmat(cols // 2, "hatted")))


def is_permuted_symplectic(s, tol=None):
    """Check S^T J S = Jhat(1:2n,1:2n).  Returns (bool, residual)."""
    res = symplectic_residual(s)
    if tol is None:
        tol = default_tol(s)
    return res <= tol, res


def is_j_triangular(rt, tol=None):
    """True iff all four n x n sub-blocks of ``rt`` are upper triangular
    and the (2,1) sub-block has zero diagonal, all within ``tol``.

    Equivalently, the shuffle conjugate of ``rt`` is upper triangular.
    """
    rt = core.as_matrix(rt)
    rows, cols = rt.shape
    if rows != cols or rows % 2 != 0:
        raise DimensionError(f"expected a square even-dimensional matrix, got {rt.shape}")
    if tol is None:
        tol = default_tol(rt)
    shuffled = shuffle_conjugate(rt)
    return bool(np.max(np.abs(np.tril(shuffled, -1))) <= tol)


@dataclass(frozen=True)
class BlockDiagScaling:
    """Block diagonal of n upper-triangular 2x2 blocks [[c, f], [0, 1/c]].

    Every block has determinant one; the inverse is again of the same
    form with blocks [[1/c, -f], [0, c]].
    """

    c: np.ndarray
    f: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.c, dtype=np.float64))
        f = np.atleast_1d(np.asarray(self.f, dtype=np.float64))
        if c.shape != f.shape or c.ndim != 1:
            raise DimensionError("c and f must be 1-d arrays of equal length")
        if not (np.all(np.isfinite(c)) and np.all(np.isfinite(f))):
            raise ValueError("scaling parameters must be finite")
        if np.any(c == 0.0):
            raise SingularityError("every block parameter c must be nonzero")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "f", f)

    @property
    def n_blocks(self):
        return self.c.shape[0]

    def matrix(self):
        """Materialize as a dense 2n x 2n matrix."""
        n = self.n_blocks
        d = np.zeros((2 * n, 2 * n))
        idx = np.arange(0, 2 * n, 2)
        d[idx, idx] = self.c
        d[idx, idx + 1] = self.f
        d[idx + 1, idx + 1] = 1.0 / self.c
        return d

    def inverse(self):
        """Closed-form inverse: blocks [[1/c, -f], [0, c]]."""
        return BlockDiagScaling(c=1.0 / self.c, f=-self.f)

    def block(self, j):
        """The j-th 2x2 block as a dense array."""
        return np.array([[self.c[j], self.f[j]], [0.0, 1.0 / self.c[j]]])

    @staticmethod
    def identity(n):
        return BlockDiagScaling(c=np.ones(n), f=np.zeros(n))

    @staticmethod
    def random(rng, n, c_range=(1e-3, 1e3), f_scale=1.0):
        """Random scaling: log-uniform c in ``c_range``, normal f."""
        lo, hi = np.log(c_range[0]), np.log(c_range[1])
        c = np.exp(rng.uniform(lo, hi, size=n))
        f = f_scale * rng.standard_normal(n)
        return BlockDiagScaling(c=c, f=f)


def scaling_to_matrix(d):
    """Dense matrix of a BlockDiagScaling (functional spelling)."""
    return d.matrix()


def scaling_inverse(d):
    """Closed-form inverse of a BlockDiagScaling (functional spelling)."""
    return d.inverse()
