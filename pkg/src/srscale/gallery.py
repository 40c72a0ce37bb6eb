"""Built-in demonstration cases.

Two parametric 6x6 upper-triangular factors exercising the row-side
scaling (ids "6.1" and "6.2"), and two embedded permuted-symplectic
factors exercising the column-side scaling (ids "6.3" and "6.4").  The
embedded matrices are stored to 5 significant digits, exactly as
printed in their original source, so reproduction tolerances on derived
condition numbers are loose ("printed-precision inputs").
"""

import numpy as np


def triangular_wild_rows(a):
    """6x6 upper-triangular factor with wildly scaled rows (case 6.1).

    Diagonal 2x2 blocks carry scales a, a^2, a^(-1); the trailing columns
    of the first four rows carry a^(-2).  Row-side equal-norm scaling
    improves the condition number dramatically for small a.
    """
    if not 0.0 < a < 1.0:
        raise ValueError(f"parameter a must lie in (0, 1), got {a}")
    i2 = a ** -2
    return np.array([
        [a, 0, i2, i2, i2, i2],
        [0, a, i2, i2, i2, i2],
        [0, 0, a ** 2, 0, i2, i2],
        [0, 0, 0, a ** 2, i2, i2],
        [0, 0, 0, 0, 1 / a, 0],
        [0, 0, 0, 0, 0, 1 / a],
    ])


def triangular_mixed_scales(a):
    """6x6 upper-triangular factor where equal-norm scaling backfires (case 6.2)."""
    if not 0.0 < a < 1.0:
        raise ValueError(f"parameter a must lie in (0, 1), got {a}")
    i1 = a ** -1
    return np.array([
        [i1, 0, i1, i1, i1, i1],
        [0, i1, i1, i1, i1, i1],
        [0, 0, a, 0, a, a],
        [0, 0, 0, a, a, a],
        [0, 0, 0, 0, i1, 0],
        [0, 0, 0, 0, 0, i1],
    ])


# Case 6.3: an extremely ill-conditioned permuted symplectic factor with a
# well-conditioned triangular factor.  All three matrices are printed-precision
# copies (5 significant digits); S itself was originally produced in 80-bit
# extended precision.

G_EXTREME = np.array([
    [-8.0000e-08, 5.9999e-10, -9.9993e-06, -2.0816e-07, -1.0025e-05, -1.0002e-01],
    [2.0002e+03, -9.8412e+03, 2.1081e-01, 8.6657e-03, 1.6001e+02, 1.0001e+03],
    [1.9999e+00, -9.8397e+00, -1.1008e+01, -2.2904e-01, 1.4898e-01, -1.0097e-01],
    [-1.0000e-03, 2.0000e-05, 9.9001e-06, 1.0208e-05, 1.0008e+00, -1.0108e-03],
    [9.9990e-02, 7.9902e-03, -9.9999e-01, -2.0898e-02, 6.9991e-03, -1.0001e-01],
    [-1.9785e-02, 9.7344e-02, 1.0003e+03, 2.0903e+01, 9.9879e-01, 1.0003e+02],
])

S_EXTREME = np.array([
    [-8.0000e-10, 7.0000e-10, 9.9993e-06, 8.0000e-10, 9.9999e-06, 1.0000e+00],
    [2.0002e+01, -1.0001e+03, -2.0900e-02, -2.0901e-09, 8.8412e-07, 9.8014e-03],
    [1.9999e-02, -9.9997e-01, 1.1008e+01, 1.0010e-03, 9.8545e-10, -1.0029e-04],
    [-1.0000e-05, 1.0000e-05, -1.0000e-05, 1.0000e-05, -1.0000e+00, 1.0000e-05],
    [9.9990e-04, -9.0000e-07, 1.0000e+00, 1.0000e-07, -8.9980e-10, -1.0010e-05],
    [-1.9785e-04, 9.8927e-03, -1.0003e+03, -1.0992e-04, 8.9912e-07, 1.0002e-02],
])

R_EXTREME = np.array([
    [1.0000e+02, 8.0000e+00, 1.0000e-02, -7.8600e-05, 8.0000e+00, 1.0201e-05],
    [0, 1.0000e+01, 1.0110e-05, -9.8000e-06, 1.0000e-05, -1.0000e+00],
    [0, 0, -1.0000e+00, -2.0898e-02, -1.0001e-03, -1.0001e-01],
    [0, 0, 0, 9.9988e-01, 9.0000e-06, 9.9999e-05],
    [0, 0, 0, 0, -1.0009e+00, 1.0008e-03],
    [0, 0, 0, 0, 0, -1.0002e-01],
])

# Case 6.4: a moderately conditioned permuted symplectic factor where the
# equal-column-norm scaling slightly worsens the condition number.

G_MODERATE = np.array([
    [1.0871e+02, 1.4643e+01, -5.4969e-01, -1.1806e-02, 9.2375e+00, -6.5123e-01],
    [-5.2820e+01, -8.8338e+00, 5.8813e-01, 1.3947e+00, -2.8501e+00, 4.1022e-01],
    [-1.8322e+01, 1.5381e+00, -5.1659e-02, -9.0207e-01, -1.8338e+00, -2.9221e-01],
    [-5.9464e+01, 1.1893e+00, -5.9404e-03, 4.0911e-05, -4.2155e+00, -5.9519e-01],
    [3.7614e+01, 3.0091e+00, -3.9718e-01, -8.4084e-03, 3.7575e+00, 4.9976e-04],
    [6.1056e+01, 4.3350e+00, -1.7096e+00, 1.2893e-01, 6.0988e+00, -5.6762e-02],
])

S_MODERATE = np.array([
    [1.0871, 0.5946, 0.5606, 0.0000, -0.5411, -1.08e-19],
    [-0.5282, -0.4608, -0.5934, 1.3825, -1.3738, 1.0868],
    [-0.1832, 0.3004, 0.0498, -0.9011, 0.3677, -0.1288],
    [-0.5946, 0.5946, 0.0000, 0.0000, -0.5411, 0.0000],
    [0.3761, 1.02e-20, 0.4009, -6.78e-21, -0.7482, -0.4133],
    [0.6106, -0.0550, 1.7157, 0.1649, -1.2150, -0.6106],
])

EXAMPLE_IDS = ("6.1", "6.2", "6.3", "6.4")
DEFAULT_A_SWEEP = (0.5, 0.1, 0.05, 0.01)
