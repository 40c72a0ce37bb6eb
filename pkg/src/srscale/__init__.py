"""srscale: nearly optimal block-diagonal scalings for SR factorizations.

A small dense linear-algebra library computing symplectic QR
factorizations, skew-symmetric Cholesky-like factorizations, and
closed-form equal-norm 2x2 block-diagonal scalings of the triangular
factor (row side) and the permuted symplectic factor (column side),
with near-optimality bounds on the resulting condition numbers.
"""

from .core import (
    cond2_closed_form,
    condition_number,
    condition_number_inf,
    frobenius_norm,
    gram_det_2col,
    ql_triangular_factor,
    singular_values,
    spectral_condition,
    spectral_condition_precise,
)
from .ensemble import run_ensemble
from .errors import (
    BreakdownError,
    DimensionError,
    InfeasibleTargetError,
    NonFactorizableError,
    ParseError,
    RankError,
    SingularityError,
    SrScaleError,
    StructureError,
)
from .factor import (
    SkewCholFactors,
    SrFactors,
    skew_cholesky,
    skew_gram,
    symplectic_qr,
)
from .io import read_matrix, write_matrix
from .scaling import (
    BlockDiagScaling,
    LocalBlockResult,
    ScalingReport,
    block_scaler_condition,
    col_scaling_bound,
    equal_col_norm_scaling,
    equal_row_norm_scaling,
    local_optimal_col_block,
    local_optimal_row_block,
    row_scaling_bound,
    scale_cols_inverse,
    scale_rows,
    scaling_report,
    van_der_sluis_row_equilibration,
)
from .structure import (
    is_j_triangular,
    is_permuted_symplectic,
    jmat,
    shuffle_conjugate,
    shuffle_indices,
    shuffle_matrix,
    symplectic_residual,
)

__version__ = "0.1.0"
