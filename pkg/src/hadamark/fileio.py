"""Image file loading and saving: PNG via Pillow, binary PGM/PPM natively.

Loaded images come back as uint8 arrays, (h, w) for grayscale and
(h, w, 3) for color.  Palette PNGs are expanded to RGB; alpha channels
and sample depths above 8 bits are rejected rather than silently
converted.
"""

from __future__ import annotations

import os

import numpy as np
from PIL import Image

__all__ = ["ImageFormatError", "load_image", "save_image"]


class ImageFormatError(Exception):
    """Raised when a file cannot be decoded into a supported image."""


def _load_png(path: str) -> np.ndarray:
    with Image.open(path) as img:
        if img.mode == "P":
            img = img.convert("RGB")
        if img.mode not in ("L", "RGB"):
            raise ImageFormatError(
                f"unsupported PNG mode {img.mode!r} in {path} (need 8-bit L or RGB)"
            )
        return np.asarray(img, dtype=np.uint8)


def _read_pnm_header(data: bytes, path: str) -> tuple[bytes, list[int], int]:
    if len(data) < 2 or data[:1] != b"P":
        raise ImageFormatError(f"{path} is not a PNM file")
    magic = data[:2]
    pos = 2
    fields: list[int] = []
    while len(fields) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        token = data[start:pos]
        if not token.isdigit():
            raise ImageFormatError(f"malformed PNM header in {path}")
        fields.append(int(token))
    if pos >= len(data):
        raise ImageFormatError(f"truncated PNM header in {path}")
    pos += 1  # single whitespace byte separates header from raster
    return magic, fields, pos


def _read_pnm(path: str) -> np.ndarray:
    with open(path, "rb") as f:
        data = f.read()
    magic, (width, height, maxval), pos = _read_pnm_header(data, path)
    if magic not in (b"P5", b"P6"):
        raise ImageFormatError(f"{path}: only binary P5/P6 PNM is supported")
    if width < 1 or height < 1:
        raise ImageFormatError(f"{path}: bad PNM dimensions {width}x{height}")
    if not 0 < maxval <= 255:
        raise ImageFormatError(f"{path}: only 8-bit PNM (maxval <= 255) is supported")
    channels = 1 if magic == b"P5" else 3
    count = width * height * channels
    raster = data[pos : pos + count]
    if len(raster) != count:
        raise ImageFormatError(f"{path}: PNM raster is truncated")
    arr = np.frombuffer(raster, dtype=np.uint8)
    if channels == 1:
        return arr.reshape(height, width).copy()
    return arr.reshape(height, width, 3).copy()


def load_image(path: str) -> np.ndarray:
    """Read a PNG, PGM, or PPM file into a uint8 array."""
    ext = os.path.splitext(path)[1].lower()
    if ext == ".png":
        return _load_png(path)
    if ext in (".pgm", ".ppm", ".pnm"):
        return _read_pnm(path)
    raise ImageFormatError(f"unsupported image extension {ext!r} for {path}")


def save_image(path: str, arr: np.ndarray) -> None:
    """Write a uint8 array as PNG, PGM (grayscale), or PPM (color)."""
    a = np.asarray(arr)
    if a.dtype != np.uint8:
        raise ValueError("save_image expects a uint8 array")
    gray = a.ndim == 2
    if not gray and (a.ndim != 3 or a.shape[2] != 3):
        raise ValueError("save_image expects (h, w) or (h, w, 3)")
    ext = os.path.splitext(path)[1].lower()
    if ext == ".png":
        Image.fromarray(a, mode="L" if gray else "RGB").save(path, format="PNG")
        return
    if ext == ".pgm" and gray:
        magic = b"P5"
    elif ext == ".ppm" and not gray:
        magic = b"P6"
    else:
        raise ValueError(f"cannot save {'gray' if gray else 'color'} image as {ext!r}")
    h, w = a.shape[:2]
    with open(path, "wb") as f:
        f.write(magic + b"\n%d %d\n255\n" % (w, h))
        f.write(a.tobytes())
