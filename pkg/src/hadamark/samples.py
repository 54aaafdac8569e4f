"""Procedurally generated covers and marks for demos and tests.

Nothing here is random at call time beyond the seed argument, so any
figure built from these images can be regenerated byte-for-byte.
"""

from __future__ import annotations

import numpy as np

__all__ = ["textured_cover", "ring_logo"]


def _box_mean(a: np.ndarray, radius: int) -> np.ndarray:
    # Integral-image box filter with edge padding, O(1) per pixel.
    w = 2 * radius + 1
    p = np.pad(a, radius, mode="edge")
    s = p.cumsum(axis=0).cumsum(axis=1)
    s = np.pad(s, ((1, 0), (1, 0)))
    h, wd = a.shape
    window = (
        s[w : w + h, w : w + wd]
        - s[:h, w : w + wd]
        - s[w : w + h, :wd]
        + s[:h, :wd]
    )
    return window / (w * w)


def textured_cover(size: int = 512, seed: int = 11) -> np.ndarray:
    """A photograph-like grayscale cover in [0.05, 0.95].

    Combines smooth illumination gradients, two sinusoidal textures,
    and blurred broadband noise, then rescales.  The mid-range value
    band leaves headroom so low embedding strengths never clip.
    """
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size] / float(size)
    img = (
        0.35 * yy
        + 0.2 * xx
        + 0.18 * np.sin(2 * np.pi * (3 * xx + 1.5 * yy))
        + 0.12 * np.cos(2 * np.pi * 5 * xx * yy)
        + 1.2 * _box_mean(rng.standard_normal((size, size)), 6)
    )
    lo, hi = img.min(), img.max()
    img = (img - lo) / (hi - lo)
    return 0.05 + 0.9 * img


def ring_logo(size: int = 512) -> np.ndarray:
    """A binary ring-and-cross mark on a black field."""
    c = (size - 1) / 2.0
    yy, xx = np.mgrid[0:size, 0:size]
    r = np.hypot(yy - c, xx - c)
    half = size / 2.0
    ring = (r > 0.30 * half) & (r < 0.42 * half)
    bar_h = (np.abs(yy - c) < 0.05 * size) & (np.abs(xx - c) < 0.28 * size)
    bar_v = (np.abs(xx - c) < 0.05 * size) & (np.abs(yy - c) < 0.28 * size)
    return (ring | bar_h | bar_v).astype(np.float64)
