"""Fast Walsh-Hadamard transform over natural (Sylvester) ordering.

The transform matrix is the unnormalized +-1 Sylvester construction,
H_1 = [1] and H_2k = [[H_k, H_k], [H_k, -H_k]].  The 2-d transform of a
square channel X is H X H / N, which makes the operation its own
inverse: applying it twice returns the input (up to float rounding).

The fast path runs iterative stride-doubling butterflies in place over
vectorized numpy slices.  Butterfly stages use additions and
subtractions only; the single division by N happens once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["TransformPlan", "hadamard_matrix", "fwht_1d_inplace", "fwht_2d"]


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class TransformPlan:
    """Validated transform size (a power of two, at least 2)."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 2 or not _is_pow2(self.size):
            raise ValueError("transform size must be a power of two >= 2")


def hadamard_matrix(n: int) -> np.ndarray:
    """Dense n x n Sylvester-ordered Hadamard matrix with +-1 entries.

    Used only where an explicit matrix is wanted (oracles, inspection);
    the transform itself never materializes it.
    """
    if not _is_pow2(n):
        raise ValueError("order must be a power of two >= 1")
    h = np.array([[1]], dtype=np.int64)
    while h.shape[0] < n:
        h = np.block([[h, h], [h, -h]])
    return h


def _butterfly_stages(a: np.ndarray, axis: int) -> None:
    """Run all radix-2 butterfly stages along one axis, in place.

    `a` must be C-contiguous so the reshapes below are views.  Pair
    stride doubles each stage: elements (i, i+h) combine into their
    sum and difference.
    """
    n = a.shape[axis]
    h = 1
    while h < n:
        if axis == 0:
            v = a.reshape((n // (2 * h), 2, h) + a.shape[1:])
            lo, hi = v[:, 0], v[:, 1]
        else:
            v = a.reshape(a.shape[:-1] + (n // (2 * h), 2, h))
            lo, hi = v[..., 0, :], v[..., 1, :]
        top = lo.copy()
        lo += hi
        hi[...] = top - hi
        h *= 2


def fwht_1d_inplace(v: np.ndarray) -> np.ndarray:
    """Unnormalized transform of a 1-d vector, modifying it in place.

    The result is H v for the Sylvester matrix of matching order; no
    scaling is applied.  Requires a contiguous float vector whose
    length is a power of two.  Returns the same array for convenience.
    """
    if v.ndim != 1 or not _is_pow2(v.shape[0]):
        raise ValueError("expected a 1-d vector with power-of-two length")
    if not np.issubdtype(v.dtype, np.floating):
        raise TypeError("in-place transform requires a float vector")
    if not v.flags.c_contiguous:
        raise ValueError("in-place transform requires a contiguous vector")
    _butterfly_stages(v, 0)
    return v


def fwht_2d(channel: np.ndarray, plan: TransformPlan | None = None) -> np.ndarray:
    """Self-inverse 2-d transform H X H / N of a square channel.

    Rows and columns are transformed by the same butterfly pass, then
    the result is divided by the side length N once.  The input is not
    modified; output is a new float64 array.

    Applying fwht_2d twice reproduces the input exactly for
    dyadic-rational samples and to ~1e-15 otherwise.
    """
    a = np.asarray(channel)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square 2-d channel")
    n = a.shape[0]
    if plan is None:
        plan = TransformPlan(n)
    elif plan.size != n:
        raise ValueError("plan size does not match channel size")
    out = np.array(a, dtype=np.float64, order="C")
    _butterfly_stages(out, 1)
    _butterfly_stages(out, 0)
    out /= n
    return out
