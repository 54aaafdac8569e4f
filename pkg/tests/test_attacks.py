import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from hadamark.attacks import (
    AttackSpec,
    apply_attack,
    coeff_quantize,
    crop_fill,
    gaussian_noise,
    salt_pepper,
)
from hadamark.fwht import fwht_2d
from hadamark.image import crop, pad_pow2


@pytest.fixture
def img(rng):
    return rng.random((32, 32))


class TestGaussianNoise:
    def test_seed_determinism(self, img):
        assert_array_equal(gaussian_noise(img, 0.01, seed=7), gaussian_noise(img, 0.01, seed=7))
        assert not np.array_equal(
            gaussian_noise(img, 0.01, seed=7), gaussian_noise(img, 0.01, seed=8)
        )

    def test_zero_sigma_is_exact_copy(self, img):
        out = gaussian_noise(img, 0.0, seed=3)
        assert_array_equal(out, img)
        assert out is not img

    def test_output_clamped(self, img):
        out = gaussian_noise(img, 0.5, seed=1)
        assert out.min() >= 0.0 and out.max() <= 1.0

    def test_noise_scale(self, rng):
        flat = np.full((128, 128), 0.5)
        out = gaussian_noise(flat, 0.01, seed=2)
        assert 0.008 < (out - flat).std() < 0.012

    def test_negative_sigma_rejected(self, img):
        with pytest.raises(ValueError):
            gaussian_noise(img, -0.1)


class TestSaltPepper:
    def test_seed_determinism(self, img):
        assert_array_equal(salt_pepper(img, 0.1, seed=5), salt_pepper(img, 0.1, seed=5))

    def test_zero_density_is_identity(self, img):
        assert_array_equal(salt_pepper(img, 0.0, seed=5), img)

    def test_full_density_is_binary(self, img):
        out = salt_pepper(img, 1.0, seed=5)
        assert set(np.unique(out)) <= {0.0, 1.0}

    def test_corruption_rate_near_density(self, rng):
        base = np.full((128, 128), 0.5)
        out = salt_pepper(base, 0.1, seed=9)
        assert abs(np.mean(out != 0.5) - 0.1) < 0.02

    def test_density_validated(self, img):
        with pytest.raises(ValueError):
            salt_pepper(img, 1.5)
        with pytest.raises(ValueError):
            salt_pepper(img, -0.1)


class TestCropFill:
    def test_fills_rectangle_only(self, img):
        out = crop_fill(img, (2, 3, 4, 5), 0.5)
        assert (out[2:6, 3:8] == 0.5).all()
        mask = np.ones_like(img, dtype=bool)
        mask[2:6, 3:8] = False
        assert_array_equal(out[mask], img[mask])

    def test_empty_rectangle_is_identity(self, img):
        assert_array_equal(crop_fill(img, (0, 0, 0, 0), 0.5), img)

    def test_color_fill_covers_all_channels(self, rng):
        stack = rng.random((8, 8, 3))
        out = crop_fill(stack, (0, 0, 4, 4), 0.25)
        assert (out[:4, :4, :] == 0.25).all()

    def test_bounds_and_fill_validated(self, img):
        with pytest.raises(ValueError):
            crop_fill(img, (30, 0, 4, 4), 0.5)
        with pytest.raises(ValueError):
            crop_fill(img, (-1, 0, 2, 2), 0.5)
        with pytest.raises(ValueError):
            crop_fill(img, (0, 0, 2, 2), 1.5)


class TestCoeffQuantize:
    def test_matches_direct_construction(self, img):
        step = 0.01
        padded, pad = pad_pow2(img)
        coeffs = fwht_2d(padded)
        expected = np.clip(crop(fwht_2d(np.round(coeffs / step) * step), pad), 0, 1)
        assert_array_equal(coeff_quantize(img, step), expected)

    def test_small_step_is_near_identity(self, img):
        assert_allclose(coeff_quantize(img, 1e-9), img, rtol=0, atol=1e-6)

    def test_idempotent_on_canonical_channel(self, rng):
        # square power-of-two input away from the clamp boundaries:
        # the second pass rounds coefficients already on the lattice
        a = 0.2 + 0.6 * rng.random((32, 32))
        once = coeff_quantize(a, 0.01)
        twice = coeff_quantize(once, 0.01)
        assert_allclose(twice, once, rtol=0, atol=1e-9)

    def test_huge_step_flattens_structure(self, img):
        out = coeff_quantize(img, 1000.0)
        assert out.std() < img.std() / 10

    def test_works_on_non_square(self, rng):
        a = rng.random((12, 20))
        out = coeff_quantize(a, 0.01)
        assert out.shape == (12, 20)

    def test_step_validated(self, img):
        with pytest.raises(ValueError):
            coeff_quantize(img, 0.0)
        with pytest.raises(ValueError):
            coeff_quantize(img, -1.0)


class TestApplyAttack:
    def test_dispatch_matches_direct_calls(self, img):
        got = apply_attack(img, AttackSpec("gaussian_noise", 0.02, seed=4))
        assert_array_equal(got, gaussian_noise(img, 0.02, seed=4))

        got = apply_attack(img, AttackSpec("salt_pepper", 0.05, seed=4))
        assert_array_equal(got, salt_pepper(img, 0.05, seed=4))

        got = apply_attack(img, AttackSpec("coeff_quantize", 0.01))
        assert_array_equal(got, coeff_quantize(img, 0.01))

    def test_crop_fill_magnitude_maps_to_corner_fraction(self, rng):
        a = rng.random((8, 8))
        out = apply_attack(a, AttackSpec("crop_fill", 0.5))
        assert (out[:4, :4] == 0.5).all()
        assert_array_equal(out[4:, :], a[4:, :])

    def test_color_coeff_quantize_is_per_channel(self, rng):
        stack = rng.random((16, 16, 3))
        out = apply_attack(stack, AttackSpec("coeff_quantize", 0.02))
        for ch in range(3):
            assert_array_equal(out[..., ch], coeff_quantize(stack[..., ch], 0.02))

    def test_color_noise_deterministic(self, rng):
        stack = rng.random((8, 8, 3))
        spec = AttackSpec("gaussian_noise", 0.05, seed=11)
        assert_array_equal(apply_attack(stack, spec), apply_attack(stack, spec))

    def test_outputs_stay_in_range(self, rng):
        a = rng.random((16, 16))
        for spec in (
            AttackSpec("gaussian_noise", 0.3, seed=1),
            AttackSpec("salt_pepper", 0.3, seed=1),
            AttackSpec("crop_fill", 0.3),
            AttackSpec("coeff_quantize", 0.2),
        ):
            out = apply_attack(a, spec)
            assert out.min() >= 0.0 and out.max() <= 1.0

    def test_rejects_bad_rank(self, rng):
        with pytest.raises(ValueError):
            apply_attack(rng.random(16), AttackSpec("gaussian_noise", 0.1))


class TestAttackSpec:
    def test_valid_specs(self):
        AttackSpec("gaussian_noise", 0.0)
        AttackSpec("salt_pepper", 1.0, seed=2**64 - 1)
        AttackSpec("coeff_quantize", 5.0)
        AttackSpec("crop_fill", 1.0)

    def test_invalid_specs(self):
        with pytest.raises(ValueError):
            AttackSpec("motion_blur", 0.1)
        with pytest.raises(ValueError):
            AttackSpec("gaussian_noise", -0.1)
        with pytest.raises(ValueError):
            AttackSpec("gaussian_noise", float("nan"))
        with pytest.raises(ValueError):
            AttackSpec("salt_pepper", 1.1)
        with pytest.raises(ValueError):
            AttackSpec("coeff_quantize", 0.0)
        with pytest.raises(ValueError):
            AttackSpec("crop_fill", 1.5)
        with pytest.raises(ValueError):
            AttackSpec("gaussian_noise", 0.1, seed=-1)
        with pytest.raises(ValueError):
            AttackSpec("gaussian_noise", 0.1, seed=2**64)
