"""Non-blind watermark embedding and extraction on luminance channels.

Embedding is additive in the transform domain: both cover and mark are
padded to the same power-of-two canvas, transformed, and the mark's
coefficients are added at strength alpha before transforming back.
Because the transform is linear this equals adding alpha * mark in the
spatial domain, but the round trip is kept so the codec exercises the
exact pipeline the extractor inverts.

Extraction needs the original cover (and its m): it recomputes alpha,
subtracts the cover's coefficients from the watermarked image's, and
divides by alpha.  With the right m the mark returns at unit scale;
each level understated amplifies the estimate tenfold.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fwht import TransformPlan, fwht_2d
from .image import (
    PadInfo,
    YuvImage,
    crop,
    denormalize,
    normalize,
    pad_pow2,
    rgb_to_yuv,
    to_luminance,
    yuv_to_rgb,
)
from .scaling import ScalingParams, compute_scaling

__all__ = [
    "EmbedResult",
    "ExtractResult",
    "prepare_watermark",
    "embed",
    "extract",
    "embed_yuv",
    "embed_image",
]


@dataclass(frozen=True)
class EmbedResult:
    """Watermarked luminance plus everything needed to audit the embed."""

    watermarked_y: np.ndarray
    params: ScalingParams
    clip_fraction: float
    pad: PadInfo


@dataclass(frozen=True)
class ExtractResult:
    """Recovered mark estimate and the strength used to rescale it."""

    watermark_estimate: np.ndarray
    params: ScalingParams


def _resize_nearest(channel: np.ndarray, height: int, width: int) -> np.ndarray:
    src_h, src_w = channel.shape
    rows = (np.arange(height) * src_h) // height
    cols = (np.arange(width) * src_w) // width
    return channel[np.ix_(rows, cols)]


def prepare_watermark(mark: np.ndarray, target: PadInfo) -> np.ndarray:
    """Fit a mark image onto the cover's padded canvas.

    The mark is converted to luminance, nearest-neighbor resized to the
    cover's original dimensions, then edge-padded to the canvas so both
    operands of the embed share one transform size.
    """
    y = to_luminance(mark)
    resized = _resize_nearest(y, target.orig_height, target.orig_width)
    padded, info = pad_pow2(resized)
    if info.padded_size != target.padded_size:
        raise ValueError("resized mark does not land on the target canvas")
    return padded


def embed(cover_y: np.ndarray, watermark: np.ndarray, m: int) -> EmbedResult:
    """Embed a prepared mark into a cover luminance channel at level m.

    `watermark` may be the padded canvas from :func:`prepare_watermark`
    or any image, in which case it is prepared here.  The output is
    clamped to [0, 1]; clip_fraction reports the fraction of samples
    (over the original region) the clamp actually moved.
    """
    cover = np.asarray(cover_y, dtype=np.float64)
    padded_cover, pad = pad_pow2(cover)
    wm = np.asarray(watermark)
    canvas = (pad.padded_size, pad.padded_size)
    if wm.ndim == 2 and wm.shape == canvas and np.issubdtype(wm.dtype, np.floating):
        padded_mark = wm.astype(np.float64)
    else:
        padded_mark = prepare_watermark(wm, pad)

    params = compute_scaling(padded_cover, region=pad, m=m)
    plan = TransformPlan(pad.padded_size)

    cover_coeffs = fwht_2d(padded_cover, plan)
    mark_coeffs = fwht_2d(padded_mark, plan)
    marked = fwht_2d(cover_coeffs + params.alpha * mark_coeffs, plan)

    out = crop(marked, pad)
    clipped = np.clip(out, 0.0, 1.0)
    clip_fraction = float(np.mean(clipped != out))
    return EmbedResult(clipped, params, clip_fraction, pad)


def extract(cover_y: np.ndarray, watermarked_y: np.ndarray, m: int) -> ExtractResult:
    """Recover the mark estimate from a watermarked luminance channel.

    Recomputes alpha from the cover at level m, then inverts the embed:
    (T(marked) - T(cover)) / alpha, transformed back and cropped.  The
    estimate is not clamped, so out-of-range values survive for
    detection scoring.
    """
    cover = np.asarray(cover_y, dtype=np.float64)
    marked = np.asarray(watermarked_y, dtype=np.float64)
    if cover.shape != marked.shape:
        raise ValueError("cover and watermarked channels must match in size")
    padded_cover, pad = pad_pow2(cover)
    padded_marked, _ = pad_pow2(marked)

    params = compute_scaling(padded_cover, region=pad, m=m)
    plan = TransformPlan(pad.padded_size)

    diff = fwht_2d(padded_marked, plan) - fwht_2d(padded_cover, plan)
    estimate = fwht_2d(diff / params.alpha, plan)
    return ExtractResult(crop(estimate, pad), params)


def embed_yuv(yuv: YuvImage, watermark: np.ndarray, m: int) -> tuple[YuvImage, EmbedResult]:
    """Embed into the Y plane of a YUV image; chroma passes through untouched."""
    result = embed(yuv.y, watermark, m)
    return YuvImage(result.watermarked_y, yuv.u, yuv.v), result


def embed_image(
    cover: np.ndarray, watermark: np.ndarray, m: int
) -> tuple[np.ndarray, EmbedResult]:
    """Embed into an 8-bit image, returning an 8-bit image of the same kind.

    Grayscale covers are watermarked directly; color covers are split
    into YUV, marked on luminance only, and recombined.
    """
    arr = np.asarray(cover)
    if arr.ndim == 2:
        result = embed(normalize(arr), watermark, m)
        return denormalize(result.watermarked_y), result
    if arr.ndim == 3 and arr.shape[2] == 3:
        marked_yuv, result = embed_yuv(rgb_to_yuv(arr), watermark, m)
        return yuv_to_rgb(marked_yuv), result
    raise ValueError("expected an 8-bit grayscale or RGB cover")
