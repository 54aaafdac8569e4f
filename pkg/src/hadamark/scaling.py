"""Adaptive embedding strength derived from cover brightness.

The strength starts from a logistic response to the mean luminance,
alpha1 = 1 / (1 + exp(-mu)), which lands in [0.5, ~0.731] for means in
[0, 1]: brighter covers tolerate a slightly stronger mark.  An integer
control level m then attenuates by a factor of ten per step, stepping
the mark from dominant (m=0) through visible (m=1) to imperceptible
(m=2 and up).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import PadInfo

__all__ = ["ScalingParams", "mean_luminance", "sigmoid_alpha", "scale_alpha", "compute_scaling"]


@dataclass(frozen=True)
class ScalingParams:
    """Embedding strength and the quantities it was derived from."""

    mu: float
    alpha1: float
    m: int
    alpha: float


def mean_luminance(channel: np.ndarray, region: PadInfo | None = None) -> float:
    """Mean of a luminance channel, optionally over its un-padded region.

    When `region` is given only the original content area is averaged,
    so replicated padding does not bias the statistic.
    """
    a = np.asarray(channel, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError("expected a 2-d channel")
    if region is not None:
        if region.orig_height > a.shape[0] or region.orig_width > a.shape[1]:
            raise ValueError("region does not fit inside the channel")
        a = a[: region.orig_height, : region.orig_width]
    if a.size == 0:
        raise ValueError("cannot average an empty region")
    return float(a.mean())


def sigmoid_alpha(mu: float) -> float:
    """Logistic base strength 1 / (1 + exp(-mu)).

    Evaluated in the numerically stable branch form, so it is defined
    for every finite input.
    """
    x = float(mu)
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def scale_alpha(alpha1: float, m: int) -> float:
    """Attenuate the base strength by one decade per control level.

    Implemented as m successive divisions by 10 so that
    scale_alpha(a, m + 1) == scale_alpha(a, m) / 10 holds bit-exactly;
    a single division by 10**m can differ in the last ulp.
    """
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool):
        raise ValueError("control level m must be an integer")
    if m < 0:
        raise ValueError("control level m must be >= 0")
    a = float(alpha1)
    for _ in range(int(m)):
        a /= 10.0
    return a


def compute_scaling(
    channel: np.ndarray, region: PadInfo | None = None, m: int = 0
) -> ScalingParams:
    """Full strength computation for a cover channel at level m."""
    mu = mean_luminance(channel, region)
    alpha1 = sigmoid_alpha(mu)
    alpha = scale_alpha(alpha1, m)
    return ScalingParams(mu=mu, alpha1=alpha1, m=int(m), alpha=alpha)
