"""Deterministic signal degradations for robustness studies.

Every attack maps a [0, 1] image to a same-shape [0, 1] image and is a
pure function of (input, parameters, seed).  Randomized attacks draw
from numpy's seeded PCG64 generator so a given seed always reproduces
the same output; the draw order per attack is documented in
docs/formats.md and treated as part of the format.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fwht import fwht_2d
from .image import crop, pad_pow2

__all__ = [
    "ATTACK_KINDS",
    "AttackSpec",
    "gaussian_noise",
    "salt_pepper",
    "crop_fill",
    "coeff_quantize",
    "apply_attack",
]

ATTACK_KINDS = ("gaussian_noise", "salt_pepper", "crop_fill", "coeff_quantize")


@dataclass(frozen=True)
class AttackSpec:
    """One attack invocation: kind, scalar magnitude, and RNG seed."""

    kind: str
    magnitude: float
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ATTACK_KINDS:
            raise ValueError(f"unknown attack kind: {self.kind!r}")
        mag = float(self.magnitude)
        if not np.isfinite(mag) or mag < 0.0:
            raise ValueError("attack magnitude must be finite and >= 0")
        if self.kind == "salt_pepper" and mag > 1.0:
            raise ValueError("salt_pepper density must be <= 1")
        if self.kind == "coeff_quantize" and mag == 0.0:
            raise ValueError("coeff_quantize step must be > 0")
        if self.kind == "crop_fill" and mag > 1.0:
            raise ValueError("crop_fill fraction must be <= 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


def gaussian_noise(img: np.ndarray, sigma: float, seed: int = 0) -> np.ndarray:
    """Add i.i.d. Gaussian noise of standard deviation sigma, then clamp.

    sigma = 0 returns an exact copy without consuming the generator.
    """
    a = np.asarray(img, dtype=np.float64)
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    if sigma == 0:
        return a.copy()
    rng = np.random.default_rng(seed)
    noisy = a + sigma * rng.standard_normal(a.shape)
    return np.clip(noisy, 0.0, 1.0)


def salt_pepper(img: np.ndarray, density: float, seed: int = 0) -> np.ndarray:
    """Replace a Bernoulli(density) subset of samples with 0 or 1.

    Two uniform fields are drawn (selection first, then polarity), so
    the corrupted set depends only on the seed, not on the image.
    """
    a = np.asarray(img, dtype=np.float64)
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be in [0, 1]")
    rng = np.random.default_rng(seed)
    hit = rng.random(a.shape) < density
    polarity = rng.random(a.shape) < 0.5
    out = a.copy()
    out[hit] = polarity[hit].astype(np.float64)
    return out


def crop_fill(
    img: np.ndarray, rect: tuple[int, int, int, int], fill: float
) -> np.ndarray:
    """Overwrite the rectangle (top, left, height, width) with a constant.

    The rectangle must lie inside the image; an empty rectangle leaves
    it untouched.  For color images all channels are filled.
    """
    a = np.asarray(img, dtype=np.float64)
    top, left, height, width = (int(v) for v in rect)
    if min(top, left, height, width) < 0:
        raise ValueError("rectangle values must be >= 0")
    if top + height > a.shape[0] or left + width > a.shape[1]:
        raise ValueError("rectangle exceeds the image bounds")
    if not 0.0 <= fill <= 1.0:
        raise ValueError("fill value must be in [0, 1]")
    out = a.copy()
    out[top : top + height, left : left + width, ...] = fill
    return out


def coeff_quantize(channel: np.ndarray, step: float) -> np.ndarray:
    """Quantize transform coefficients to multiples of step, then invert.

    The channel is padded to its transform canvas, each coefficient is
    rounded to the nearest multiple of step, and the result is
    transformed back, cropped, and clamped.
    """
    if step <= 0:
        raise ValueError("step must be > 0")
    a = np.asarray(channel, dtype=np.float64)
    padded, pad = pad_pow2(a)
    coeffs = fwht_2d(padded)
    quantized = np.round(coeffs / step) * step
    out = crop(fwht_2d(quantized), pad)
    return np.clip(out, 0.0, 1.0)


def apply_attack(img: np.ndarray, spec: AttackSpec) -> np.ndarray:
    """Run one attack on a [0, 1] grayscale channel or (h, w, 3) image.

    crop_fill interprets the magnitude as the fraction of each
    dimension, filling that corner rectangle at the origin with 0.5.
    coeff_quantize treats the magnitude as the step and quantizes each
    color channel independently.
    """
    a = np.asarray(img, dtype=np.float64)
    if a.ndim not in (2, 3):
        raise ValueError("expected a 2-d channel or (h, w, 3) image")
    mag = float(spec.magnitude)
    if spec.kind == "gaussian_noise":
        return gaussian_noise(a, mag, spec.seed)
    if spec.kind == "salt_pepper":
        return salt_pepper(a, mag, spec.seed)
    if spec.kind == "crop_fill":
        rect = (0, 0, int(mag * a.shape[0]), int(mag * a.shape[1]))
        return crop_fill(a, rect, 0.5)
    if a.ndim == 2:
        return coeff_quantize(a, mag)
    out = np.empty_like(a)
    for ch in range(a.shape[2]):
        out[..., ch] = coeff_quantize(a[..., ch], mag)
    return out
