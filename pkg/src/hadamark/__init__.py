"""Adaptive image watermarking in the Walsh-Hadamard transform domain.

The package embeds a watermark into a cover image's luminance by adding
scaled transform coefficients, with the strength derived from the
cover's mean brightness through a logistic curve and attenuated tenfold
per control level m.  Extraction is non-blind (it needs the cover).
Quality and robustness are measured with UIQI, SSIM, and normalized
cross-correlation, and a deterministic attack harness covers noise,
sample corruption, occlusion, and coefficient quantization.
"""

__version__ = "0.1.0"

from .attacks import (
    ATTACK_KINDS,
    AttackSpec,
    apply_attack,
    coeff_quantize,
    crop_fill,
    gaussian_noise,
    salt_pepper,
)
from .codec import (
    EmbedResult,
    ExtractResult,
    embed,
    embed_image,
    embed_yuv,
    extract,
    prepare_watermark,
)
from .fwht import TransformPlan, fwht_1d_inplace, fwht_2d, hadamard_matrix
from .image import (
    PadInfo,
    YuvImage,
    crop,
    denormalize,
    next_pow2,
    normalize,
    pad_pow2,
    rgb_to_yuv,
    to_luminance,
    yuv_to_rgb,
)
from .metrics import (
    SSIM_PRESET_PAPER,
    SSIM_PRESET_STANDARD,
    SSIM_PRESETS,
    ImageStats,
    QualityReport,
    SsimConstants,
    image_stats,
    ncc,
    ssim,
    uiqi,
    uiqi_is_degenerate,
)
from .scaling import (
    ScalingParams,
    compute_scaling,
    mean_luminance,
    scale_alpha,
    sigmoid_alpha,
)

__all__ = [
    "__version__",
    "ATTACK_KINDS",
    "AttackSpec",
    "apply_attack",
    "coeff_quantize",
    "crop_fill",
    "gaussian_noise",
    "salt_pepper",
    "EmbedResult",
    "ExtractResult",
    "embed",
    "embed_image",
    "embed_yuv",
    "extract",
    "prepare_watermark",
    "TransformPlan",
    "fwht_1d_inplace",
    "fwht_2d",
    "hadamard_matrix",
    "PadInfo",
    "YuvImage",
    "crop",
    "denormalize",
    "next_pow2",
    "normalize",
    "pad_pow2",
    "rgb_to_yuv",
    "to_luminance",
    "yuv_to_rgb",
    "SSIM_PRESET_PAPER",
    "SSIM_PRESET_STANDARD",
    "SSIM_PRESETS",
    "ImageStats",
    "QualityReport",
    "SsimConstants",
    "image_stats",
    "ncc",
    "ssim",
    "uiqi",
    "uiqi_is_degenerate",
    "ScalingParams",
    "compute_scaling",
    "mean_luminance",
    "scale_alpha",
    "sigmoid_alpha",
]
