"""Full-reference quality and similarity metrics.

All three metrics operate on a single channel pair and use unbiased
(n-1) sample statistics over one global window.

* uiqi: product of correlation, luminance closeness, and contrast
  closeness; 1.0 only for identical images, -1.0 for perfectly
  anti-correlated ones.
* ssim: the same family with stabilizing constants derived from the
  dynamic range, so it stays defined on flat regions.  The formula is
  evaluated on samples exactly as given; callers comparing [0, 1]
  channels against an 8-bit range scale them up first.
* ncc: zero-mean normalized cross-correlation, the standard detector
  score for extracted watermarks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ImageStats",
    "SsimConstants",
    "QualityReport",
    "SSIM_PRESET_PAPER",
    "SSIM_PRESET_STANDARD",
    "image_stats",
    "uiqi",
    "uiqi_is_degenerate",
    "ssim",
    "ncc",
]


@dataclass(frozen=True)
class ImageStats:
    """Joint first and second order statistics of two equal-size channels."""

    mean_x: float
    mean_y: float
    var_x: float
    var_y: float
    cov_xy: float
    n: int


@dataclass(frozen=True)
class SsimConstants:
    """SSIM stabilizers c1 = (k1 L)^2 and c2 = (k2 L)^2."""

    k1: float
    k2: float
    dynamic_range: float

    @property
    def c1(self) -> float:
        return (self.k1 * self.dynamic_range) ** 2

    @property
    def c2(self) -> float:
        return (self.k2 * self.dynamic_range) ** 2


# Two common parameterizations: k1 = k2 = 0.01 over range 225, and the
# widespread k1 = 0.01, k2 = 0.03 over range 255.
SSIM_PRESET_PAPER = SsimConstants(k1=0.01, k2=0.01, dynamic_range=225.0)
SSIM_PRESET_STANDARD = SsimConstants(k1=0.01, k2=0.03, dynamic_range=255.0)

SSIM_PRESETS = {"paper": SSIM_PRESET_PAPER, "standard": SSIM_PRESET_STANDARD}


@dataclass(frozen=True)
class QualityReport:
    """Bundle of metric values for one cover/watermarked pair."""

    uiqi: float
    ssim: float
    ncc: float | None = None
    clip_fraction: float | None = None
    m: int | None = None
    alpha: float | None = None
    ssim_preset: str | None = None
    uiqi_degenerate: bool = False


def _pair(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(x, dtype=np.float64)
    b = np.asarray(y, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError("channels must have identical dimensions")
    if a.size < 2:
        raise ValueError("metrics need at least two samples")
    return a, b


def image_stats(x: np.ndarray, y: np.ndarray) -> ImageStats:
    """Means, unbiased variances, and unbiased covariance of a pair."""
    a, b = _pair(x, y)
    n = a.size
    mean_x = float(a.mean())
    mean_y = float(b.mean())
    var_x = float(a.var(ddof=1))
    var_y = float(b.var(ddof=1))
    cov = float(((a - mean_x) * (b - mean_y)).sum() / (n - 1))
    return ImageStats(mean_x, mean_y, var_x, var_y, cov, n)


def uiqi(x: np.ndarray, y: np.ndarray) -> float:
    """Universal image quality index over one global window.

    Q = corr(x, y) * (2 mx my / (mx^2 + my^2))
                   * (2 sx sy / (sx^2 + sy^2))

    Degenerate windows: two identical constant images rate 1.0; if
    either image is constant otherwise the structural factors are
    taken as 0 and the index is 0.0.
    """
    a, b = _pair(x, y)
    s = image_stats(a, b)
    if s.var_x == 0.0 and s.var_y == 0.0:
        return 1.0 if np.array_equal(a, b) else 0.0
    if s.var_x == 0.0 or s.var_y == 0.0:
        return 0.0
    sx = np.sqrt(s.var_x)
    sy = np.sqrt(s.var_y)
    corr = s.cov_xy / (sx * sy)
    lum = 2.0 * s.mean_x * s.mean_y / (s.mean_x**2 + s.mean_y**2)
    con = 2.0 * sx * sy / (s.var_x + s.var_y)
    return float(corr * lum * con)


def uiqi_is_degenerate(x: np.ndarray, y: np.ndarray) -> bool:
    """True when the constant-image fallback rules decided the index."""
    s = image_stats(x, y)
    return s.var_x == 0.0 or s.var_y == 0.0


def ssim(
    x: np.ndarray, y: np.ndarray, constants: SsimConstants = SSIM_PRESET_STANDARD
) -> float:
    """Structural similarity over one global window.

    ((2 mx my + c1)(2 cov + c2)) / ((mx^2 + my^2 + c1)(vx + vy + c2))

    Samples are used exactly as given; pick `constants` to match their
    range (e.g. scale [0, 1] channels by 255 for the 8-bit presets).
    """
    s = image_stats(x, y)
    c1 = constants.c1
    c2 = constants.c2
    num = (2.0 * s.mean_x * s.mean_y + c1) * (2.0 * s.cov_xy + c2)
    den = (s.mean_x**2 + s.mean_y**2 + c1) * (s.var_x + s.var_y + c2)
    return float(num / den)


def ncc(w: np.ndarray, w_est: np.ndarray) -> float:
    """Zero-mean normalized cross-correlation of a mark and its estimate.

    Both inputs are centered on their own means; constant inputs have
    no direction to correlate and raise ValueError.
    """
    a, b = _pair(w, w_est)
    da = a - a.mean()
    db = b - b.mean()
    na = float(np.sqrt((da * da).sum()))
    nb = float(np.sqrt((db * db).sum()))
    if na == 0.0 or nb == 0.0:
        raise ValueError("ncc is undefined for constant inputs")
    return float((da * db).sum() / (na * nb))
