import numpy as np
import pytest
import scipy.linalg
from numpy.testing import assert_allclose, assert_array_equal

from hadamark.fwht import TransformPlan, fwht_1d_inplace, fwht_2d, hadamard_matrix


class TestHadamardMatrix:
    def test_small_orders(self):
        assert_array_equal(hadamard_matrix(1), [[1]])
        assert_array_equal(hadamard_matrix(2), [[1, 1], [1, -1]])
        assert_array_equal(
            hadamard_matrix(4),
            [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]],
        )

    def test_block_recursion(self):
        h4 = hadamard_matrix(4)
        h8 = hadamard_matrix(8)
        assert_array_equal(h8[:4, :4], h4)
        assert_array_equal(h8[:4, 4:], h4)
        assert_array_equal(h8[4:, :4], h4)
        assert_array_equal(h8[4:, 4:], -h4)

    def test_orthogonality(self):
        for n in (2, 4, 16, 64):
            h = hadamard_matrix(n)
            assert_array_equal(h @ h.T, n * np.eye(n, dtype=np.int64))

    def test_matches_scipy(self):
        for n in (1, 2, 8, 32):
            assert_array_equal(hadamard_matrix(n), scipy.linalg.hadamard(n))

    def test_rejects_non_pow2(self):
        for n in (0, 3, 6, -4):
            with pytest.raises(ValueError):
                hadamard_matrix(n)


class TestFwht1d:
    def test_known_vectors(self):
        assert_array_equal(fwht_1d_inplace(np.array([1.0, 1.0])), [2.0, 0.0])
        assert_array_equal(
            fwht_1d_inplace(np.array([1.0, 0.0, 0.0, 0.0])), [1.0, 1.0, 1.0, 1.0]
        )
        assert_array_equal(
            fwht_1d_inplace(np.array([1.0, 2.0, 3.0, 4.0])), [10.0, -2.0, -4.0, 0.0]
        )

    def test_modifies_argument_in_place(self):
        v = np.array([3.0, 1.0])
        out = fwht_1d_inplace(v)
        assert out is v
        assert_array_equal(v, [4.0, 2.0])

    def test_length_one_is_identity(self):
        v = np.array([7.5])
        assert_array_equal(fwht_1d_inplace(v), [7.5])

    def test_matches_dense_matrix(self, rng):
        for n in (2, 8, 64, 256):
            v = rng.standard_normal(n)
            expected = hadamard_matrix(n) @ v
            assert_allclose(fwht_1d_inplace(v.copy()), expected, rtol=0, atol=1e-10)

    def test_rejects_bad_inputs(self, rng):
        with pytest.raises(ValueError):
            fwht_1d_inplace(np.zeros(3))
        with pytest.raises(ValueError):
            fwht_1d_inplace(np.zeros((2, 2)))
        with pytest.raises(TypeError):
            fwht_1d_inplace(np.array([1, 2]))
        with pytest.raises(ValueError):
            fwht_1d_inplace(np.zeros(8)[::2])


class TestFwht2d:
    def test_known_arrays(self):
        assert_array_equal(
            fwht_2d(np.ones((2, 2))), np.array([[2.0, 0.0], [0.0, 0.0]])
        )
        assert_array_equal(
            fwht_2d(np.array([[1.0, 0.0], [0.0, 0.0]])), np.full((2, 2), 0.5)
        )

    def test_matches_dense_transform(self, rng):
        for n in (2, 4, 8, 32):
            x = rng.standard_normal((n, n))
            h = hadamard_matrix(n).astype(np.float64)
            assert_allclose(fwht_2d(x), h @ x @ h / n, rtol=0, atol=1e-12)

    def test_involution(self, rng):
        x = rng.random((64, 64))
        assert_allclose(fwht_2d(fwht_2d(x)), x, rtol=0, atol=1e-12)

    def test_involution_exact_on_dyadic_samples(self, rng):
        x = rng.integers(0, 64, (32, 32)).astype(np.float64) / 64.0
        assert_array_equal(fwht_2d(fwht_2d(x)), x)

    def test_linearity(self, rng):
        x = rng.standard_normal((16, 16))
        y = rng.standard_normal((16, 16))
        combined = fwht_2d(2.5 * x - 1.25 * y)
        assert_allclose(
            combined, 2.5 * fwht_2d(x) - 1.25 * fwht_2d(y), rtol=0, atol=1e-12
        )

    def test_dc_coefficient_is_n_times_mean(self, rng):
        for n in (4, 16, 128):
            x = rng.random((n, n))
            assert_allclose(fwht_2d(x)[0, 0], n * x.mean(), rtol=0, atol=1e-9)

    def test_input_not_modified(self, rng):
        x = rng.random((8, 8))
        snapshot = x.copy()
        fwht_2d(x)
        assert_array_equal(x, snapshot)

    def test_plan_reuse_and_mismatch(self, rng):
        plan = TransformPlan(8)
        x = rng.random((8, 8))
        assert_array_equal(fwht_2d(x, plan), fwht_2d(x))
        with pytest.raises(ValueError):
            fwht_2d(x, TransformPlan(16))

    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            fwht_2d(np.zeros((4, 8)))
        with pytest.raises(ValueError):
            fwht_2d(np.zeros((3, 3)))
        with pytest.raises(ValueError):
            fwht_2d(np.zeros((1, 1)))


def test_transform_plan_validation():
    assert TransformPlan(2).size == 2
    for bad in (0, 1, 3, 12):
        with pytest.raises(ValueError):
            TransformPlan(bad)
