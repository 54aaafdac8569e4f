"""Pixel planes, color conversion, and power-of-two padding.

A channel is a 2-d float64 array of shape (height, width) with samples
nominally in [0, 1].  8-bit images enter through :func:`normalize` and
leave through :func:`denormalize`; color images are split into YUV
planes and only the luminance plane is ever transformed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "PadInfo",
    "YuvImage",
    "normalize",
    "denormalize",
    "rgb_to_yuv",
    "yuv_to_rgb",
    "to_luminance",
    "next_pow2",
    "pad_pow2",
    "crop",
]

# BT.601 full-range luma weights and chroma scale factors.
_WR, _WG, _WB = 0.299, 0.587, 0.114
_U_SCALE = 0.492
_V_SCALE = 0.877


class YuvImage(NamedTuple):
    """Full-range YUV planes of equal shape (y in [0,1], u and v signed)."""

    y: np.ndarray
    u: np.ndarray
    v: np.ndarray


@dataclass(frozen=True)
class PadInfo:
    """Placement of an image inside its square power-of-two canvas.

    The original content always sits at the canvas origin, so the
    offsets are retained only to make the placement explicit.
    """

    orig_width: int
    orig_height: int
    padded_size: int
    offset_x: int = 0
    offset_y: int = 0

    def __post_init__(self) -> None:
        if self.orig_width < 1 or self.orig_height < 1:
            raise ValueError("original dimensions must be positive")
        n = self.padded_size
        if n < max(self.orig_width, self.orig_height, 2) or n & (n - 1):
            raise ValueError(
                "padded_size must be a power of two >= 2 covering the image"
            )
        if self.offset_x != 0 or self.offset_y != 0:
            raise ValueError("content is always placed at the canvas origin")

    @classmethod
    def for_shape(cls, height: int, width: int) -> "PadInfo":
        """Pad info for an image of the given dimensions."""
        return cls(width, height, next_pow2(max(height, width, 2)))


def _require_channel(c: np.ndarray) -> np.ndarray:
    a = np.asarray(c)
    if a.ndim != 2 or a.size == 0:
        raise ValueError("expected a nonempty 2-d channel")
    return a


def normalize(plane: np.ndarray) -> np.ndarray:
    """Map an 8-bit plane to float64 samples in [0, 1]."""
    a = _require_channel(plane)
    return a.astype(np.float64) / 255.0


def denormalize(channel: np.ndarray) -> np.ndarray:
    """Map a [0, 1] channel back to uint8, rounding half away from zero.

    Values outside [0, 1] are clamped first.  np.round is not used
    because it rounds ties to even.  Accepts a single channel or a
    (h, w, 3) stack.
    """
    a = np.asarray(channel)
    if a.ndim not in (2, 3) or a.size == 0:
        raise ValueError("expected a nonempty 2-d or 3-d array")
    clipped = np.clip(a, 0.0, 1.0)
    return np.floor(clipped * 255.0 + 0.5).astype(np.uint8)


def rgb_to_yuv(rgb: np.ndarray) -> YuvImage:
    """Split an 8-bit RGB image into full-range YUV planes.

    Y = 0.299 R + 0.587 G + 0.114 B on [0, 1] samples, with
    U = 0.492 (B - Y) and V = 0.877 (R - Y).  Gray inputs therefore
    produce exactly zero chroma.
    """
    a = np.asarray(rgb)
    if a.ndim != 3 or a.shape[2] != 3 or a.size == 0:
        raise ValueError("expected a nonempty (h, w, 3) RGB image")
    a = a.astype(np.float64) / 255.0
    r, g, b = a[..., 0], a[..., 1], a[..., 2]
    y = _WR * r + _WG * g + _WB * b
    u = _U_SCALE * (b - y)
    v = _V_SCALE * (r - y)
    return YuvImage(y, u, v)


def yuv_to_rgb(yuv: YuvImage) -> np.ndarray:
    """Invert :func:`rgb_to_yuv` and quantize to uint8.

    Out-of-gamut values arising from a modified luminance plane are
    clamped during quantization.
    """
    y, u, v = (np.asarray(p, dtype=np.float64) for p in yuv)
    if not (y.shape == u.shape == v.shape) or y.ndim != 2:
        raise ValueError("YUV planes must be 2-d and of equal shape")
    b = y + u / _U_SCALE
    r = y + v / _V_SCALE
    g = (y - _WR * r - _WB * b) / _WG
    rgb = np.stack([r, g, b], axis=-1)
    return np.floor(np.clip(rgb, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)


def to_luminance(img: np.ndarray) -> np.ndarray:
    """Luminance channel of an image in any supported form.

    Accepts an 8-bit grayscale plane, an 8-bit RGB image, or an already
    normalized float channel (returned as float64, unmodified).
    """
    a = np.asarray(img)
    if a.ndim == 3:
        return rgb_to_yuv(a).y
    a = _require_channel(a)
    if a.dtype == np.uint8:
        return normalize(a)
    return a.astype(np.float64)


def next_pow2(n: int) -> int:
    """Smallest power of two >= n (n must be positive)."""
    if n < 1:
        raise ValueError("n must be positive")
    return 1 << (int(n) - 1).bit_length()


def pad_pow2(channel: np.ndarray) -> tuple[np.ndarray, PadInfo]:
    """Pad a channel to the next square power-of-two size by edge replication.

    The content keeps its position at the origin; the last row and
    column are repeated outward.  Returns the padded channel and the
    :class:`PadInfo` needed to undo the padding.
    """
    a = _require_channel(channel).astype(np.float64)
    h, w = a.shape
    info = PadInfo.for_shape(h, w)
    n = info.padded_size
    padded = np.pad(a, ((0, n - h), (0, n - w)), mode="edge")
    return padded, info


def crop(channel: np.ndarray, pad: PadInfo) -> np.ndarray:
    """Recover the original region from a padded channel."""
    a = _require_channel(channel)
    if a.shape[0] < pad.orig_height or a.shape[1] < pad.orig_width:
        raise ValueError("channel is smaller than the recorded original size")
    return np.array(a[: pad.orig_height, : pad.orig_width])
