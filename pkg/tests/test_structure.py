"""Tests for the symplectic bookkeeping: shuffles, J matrices, predicates,
and the block-diagonal scaling type."""

import numpy as np
import pytest

from srscale import structure
from srscale.errors import DimensionError, SingularityError
from srscale.structure import BlockDiagScaling


def test_shuffle_matrix_is_permutation():
    for m in (1, 2, 3, 5):
        p = structure.shuffle_matrix(m)
        np.testing.assert_allclose(p @ p.T, np.eye(2 * m))
        # first column picks e1, second picks e3
        np.testing.assert_allclose(p[:, 0], np.eye(2 * m)[:, 0])
        if m > 1:
            np.testing.assert_allclose(p[:, 1], np.eye(2 * m)[:, 2])


def test_shuffle_conjugates_standard_j_to_hatted():
    for m in (1, 2, 3, 4):
        p = structure.shuffle_matrix(m)
        j = structure.jmat(m, "standard")
        jhat = structure.jmat(m, "hatted")
        np.testing.assert_allclose(p @ j @ p.T, jhat, atol=0)
        np.testing.assert_allclose(structure.shuffle_conjugate(j), jhat, atol=0)


def test_shuffle_conjugate_round_trip():
    rng = np.random.default_rng(7)
    for m in (1, 2, 4):
        a = rng.standard_normal((2 * m, 2 * m))
        back = structure.shuffle_conjugate(structure.shuffle_conjugate(a),
                                           inverse=True)
        np.testing.assert_allclose(back, a, atol=0)


def test_jmat_properties():
    for m in (1, 3):
        for variant in ("standard", "hatted"):
            j = structure.jmat(m, variant)
            np.testing.assert_allclose(j.T, -j, atol=0)
            np.testing.assert_allclose(j @ j, -np.eye(2 * m), atol=0)
    with pytest.raises(ValueError):
        structure.jmat(2, "other")
    with pytest.raises(DimensionError):
        structure.jmat(0)


def test_symplectic_residual_zero_for_shuffled_identity():
    # P itself is a permuted symplectic matrix: P^T J P differs from Jhat,
    # but the identity embedded in shuffled coordinates satisfies it
    for m in (1, 2, 3):
        p = structure.shuffle_matrix(m)
        s = p.T  # rows permuted so that s^T J s = P J P^T = Jhat
        ok, res = structure.is_permuted_symplectic(s)
        assert ok
        assert res == 0.0


def test_symplectic_residual_detects_violation():
    ok, res = structure.is_permuted_symplectic(np.eye(4))
    assert not ok
    assert res > 1.0


def test_symplectic_residual_rectangular():
    # a 2m x 2n slice of a permuted symplectic matrix keeps the property
    p = structure.shuffle_matrix(4).T
    ok, _ = structure.is_permuted_symplectic(p[:, :4])
    assert ok
    with pytest.raises(DimensionError):
        structure.symplectic_residual(np.ones((2, 4)))


def test_is_j_triangular():
    # J-triangular means: upper triangular after shuffle conjugation
    rng = np.random.default_rng(13)
    n = 3
    upper = np.triu(rng.standard_normal((2 * n, 2 * n)))
    jt = structure.shuffle_conjugate(upper, inverse=True)
    assert structure.is_j_triangular(jt)
    assert not structure.is_j_triangular(rng.standard_normal((2 * n, 2 * n)))


def test_block_diag_scaling_matrix_layout():
    d = BlockDiagScaling(c=np.array([2.0, 4.0]), f=np.array([3.0, -1.0]))
    expect = np.array([
        [2.0, 3.0, 0.0, 0.0],
        [0.0, 0.5, 0.0, 0.0],
        [0.0, 0.0, 4.0, -1.0],
        [0.0, 0.0, 0.0, 0.25],
    ])
    np.testing.assert_allclose(d.matrix(), expect, atol=0)
    np.testing.assert_allclose(d.block(1), expect[2:, 2:], atol=0)
    assert d.n_blocks == 2


def test_block_diag_scaling_inverse_closed_form():
    rng = np.random.default_rng(19)
    for _ in range(100):
        d = BlockDiagScaling.random(rng, rng.integers(1, 6))
        prod = d.matrix() @ d.inverse().matrix()
        np.testing.assert_allclose(prod, np.eye(2 * d.n_blocks),
                                   rtol=0, atol=1e-12)
        # unit determinant per block
        np.testing.assert_allclose(np.linalg.det(d.matrix()), 1.0, rtol=1e-10)


def test_block_diag_scaling_validation():
    with pytest.raises(SingularityError):
        BlockDiagScaling(c=np.array([0.0]), f=np.array([1.0]))
    with pytest.raises(DimensionError):
        BlockDiagScaling(c=np.array([1.0, 2.0]), f=np.array([1.0]))
    with pytest.raises(ValueError):
        BlockDiagScaling(c=np.array([np.inf]), f=np.array([0.0]))


def test_block_diag_scaling_identity_and_functional_spellings():
    d = BlockDiagScaling.identity(3)
    np.testing.assert_allclose(structure.scaling_to_matrix(d), np.eye(6), atol=0)
    np.testing.assert_allclose(structure.scaling_inverse(d).matrix(), np.eye(6),
                               atol=0)


def test_block_diag_scaling_random_ranges():
    rng = np.random.default_rng(31)
    d = BlockDiagScaling.random(rng, 200, c_range=(1e-2, 1e2))
    assert np.all(d.c >= 1e-2) and np.all(d.c <= 1e2)
