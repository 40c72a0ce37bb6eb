"""Dense real linear-algebra kernels.

Everything here works on plain float64 ``numpy`` arrays.  Besides thin
wrappers around LAPACK (norms, singular values), the module provides the
closed forms for two-column Gram determinants, the spectral condition
number of a 2x2 matrix, and the triangular factor of a QL factorization
of a tall two-column block.  These closed forms are the quantities the
block scalings are built from.
"""

import numpy as np

from .errors import DimensionError, RankError, SingularityError

EPS = np.finfo(np.float64).eps

#: scale factor for the "numerically zero" convention: a quantity is zero
#: when it is <= ZERO_FACTOR * eps * (relevant norm).
ZERO_FACTOR = 1e3


def as_matrix(a):
    """Validate and return a 2-d float64 array with finite entries."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-d array, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionError(f"empty matrix of shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def frobenius_norm(m):
    """Frobenius norm of a matrix."""
    return float(np.linalg.norm(as_matrix(m)))


def singular_values(m):
    """Singular values of ``m``, non-increasing, as a 1-d array."""
    m = as_matrix(m)
    try:
        return np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails
        raise RuntimeError(f"SVD did not converge: {exc}") from exc


def spectral_condition(m):
    """kappa_2(m) = sigma_max / sigma_min.

    Raises SingularityError when the smallest singular value is
    numerically zero relative to the largest.
    """
    sv = singular_values(as_matrix(m))
    smax, smin = sv[0], sv[-1]
    if smin <= ZERO_FACTOR * EPS * smax:
        raise SingularityError(
            f"matrix is numerically singular (sigma_min={smin:.3e}, sigma_max={smax:.3e})"
        )
    return float(smax / smin)


def spectral_condition_precise(m, dps=60):
    """kappa_2 computed in software multiprecision.

    Intended for small matrices whose condition number exceeds what a
    double-precision SVD can resolve (roughly 1e12 and beyond).  The
    float64 entries are taken as exact.
    """
    from mpmath import mp

    m = as_matrix(m)
    with mp.workdps(dps):
        sv = mp.svd_r(mp.matrix(m.tolist()), compute_uv=False)
        smax = max(sv)
        smin = min(sv)
        if smin == 0:
            raise SingularityError("matrix is singular")
        return float(smax / smin)


def condition_number(m, precise="auto", dps=60):
    """Spectral condition number with optional multiprecision escalation.

    With ``precise="auto"`` (the default) the value is recomputed in
    multiprecision whenever the double-precision estimate exceeds 1e10,
    where the smallest singular value starts losing relative accuracy.
    """
    m = as_matrix(m)
    if precise is True:
        return spectral_condition_precise(m, dps=dps)
    sv = singular_values(m)
    smax, smin = sv[0], sv[-1]
    if smin <= 0 or (precise == "auto" and smax / smin > 1e10 and max(m.shape) <= 64):
        return spectral_condition_precise(m, dps=dps)
    if smin <= ZERO_FACTOR * EPS * smax:
        raise SingularityError("matrix is numerically singular")
    return float(smax / smin)


def condition_number_inf(m, precise="auto", dps=60):
    """Infinity-norm condition number ||m||_inf * ||m^{-1}||_inf.

    This is the condition measure used by the report tables; it tracks
    the spectral one within a factor of the dimension but is cheap to
    refine in multiprecision because only an inverse is needed.  With
    ``precise="auto"`` the value is recomputed in multiprecision when the
    double-precision estimate exceeds 1e10.
    """
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        # rectangular: use the pseudo-inverse; no multiprecision path
        pinv = np.linalg.pinv(m)
        return float(np.linalg.norm(m, np.inf) * np.linalg.norm(pinv, np.inf))
    if precise is not True:
        try:
            inv = np.linalg.inv(m)
        except np.linalg.LinAlgError as exc:
            raise SingularityError(f"matrix is singular: {exc}") from exc
        value = float(np.linalg.norm(m, np.inf) * np.linalg.norm(inv, np.inf))
        if not (precise == "auto" and value > 1e10 and max(m.shape) <= 64):
            return value
    from mpmath import mp

    with mp.workdps(dps):
        mm = mp.matrix(m.tolist())
        try:
            return float(mp.mnorm(mm, "inf") * mp.mnorm(mm ** -1, "inf"))
        except ZeroDivisionError as exc:
            raise SingularityError("matrix is singular") from exc


def gram_det_2col(b):
    """Gram determinant of a two-column matrix.

    Returns ||b1||^2 ||b2||^2 - (b1^T b2)^2, which equals det(b^T b) and
    is nonnegative up to rounding.
    """
    b = as_matrix(b)
    if b.shape[1] != 2:
        raise DimensionError(f"expected exactly 2 columns, got {b.shape[1]}")
    n1 = np.dot(b[:, 0], b[:, 0])
    n2 = np.dot(b[:, 1], b[:, 1])
    ip = np.dot(b[:, 0], b[:, 1])
    return float(n1 * n2 - ip * ip)


def cond2_closed_form(b):
    """Spectral condition number of a nonsingular 2x2 matrix in closed form.

    kappa_2 = (||b||_F^2 + sqrt(||b||_F^4 - 4 det(b)^2)) / (2 |det(b)|).
    """
    b = as_matrix(b)
    if b.shape != (2, 2):
        raise DimensionError(f"expected a 2x2 matrix, got shape {b.shape}")
    det = b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
    fro2 = float(np.sum(b * b))
    if abs(det) <= ZERO_FACTOR * EPS * fro2:
        raise SingularityError("2x2 matrix is numerically singular")
    disc = fro2 * fro2 - 4.0 * det * det
    disc = max(disc, 0.0)  # guards rounding when sigma_max ~ sigma_min
    return float((fro2 + np.sqrt(disc)) / (2.0 * abs(det)))


def ql_triangular_factor(l):
    """Lower-triangular factor of the QL factorization of a tall 2-column block.

    For full-column-rank ``l`` (shape 2n x 2) returns the 2x2 lower
    triangular ``lhat`` with positive diagonal such that
    lhat^T lhat = l^T l.  Entries come from the Cholesky-type closed
    forms (the orthogonal factor is never formed):

        lhat[1,1] = ||l2||,  lhat[1,0] = l1^T l2 / ||l2||,
        lhat[0,0] = sqrt(det(l^T l)) / ||l2||.
    """
    l = as_matrix(l)
    if l.shape[1] != 2:
        raise DimensionError(f"expected exactly 2 columns, got {l.shape[1]}")
    gram = gram_det_2col(l)
    fro2 = float(np.sum(l * l))
    if gram <= (ZERO_FACTOR * EPS * fro2) ** 2:
        raise RankError("block is numerically rank deficient")
    n2 = float(np.linalg.norm(l[:, 1]))
    ip = float(np.dot(l[:, 0], l[:, 1]))
    return np.array([[np.sqrt(gram) / n2, 0.0], [ip / n2, n2]])
