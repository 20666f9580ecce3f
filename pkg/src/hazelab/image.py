"""Image array conventions and validation helpers.

Color images are float64 arrays of shape (height, width, 3) with samples in
[0, 1]; single-channel fields are float64 arrays of shape (height, width).
8-bit data is mapped to [0, 1] by dividing by 255.
"""

import numpy as np

from .errors import InvalidInputError


def as_rgb(img, name="image"):
    """Validate and return a float64 (H, W, 3) color image."""
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise InvalidInputError(f"{name} must have shape (H, W, 3), got {arr.shape}")
    if arr.shape[0] < 2 or arr.shape[1] < 2:
        raise InvalidInputError(f"{name} must be at least 2x2, got {arr.shape[:2]}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains non-finite samples")
    return arr


def as_gray(img, name="field"):
    """Validate and return a float64 (H, W) single-channel field."""
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 2:
        raise InvalidInputError(f"{name} must have shape (H, W), got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains non-finite samples")
    return arr


def as_color_triple(value, name="color"):
    """Validate and return a float64 (3,) RGB triple."""
    arr = np.asarray(value, dtype=np.float64).reshape(-1)
    if arr.shape != (3,):
        raise InvalidInputError(f"{name} must be an RGB triple, got shape {np.shape(value)}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains non-finite values")
    return arr


def require_same_shape(a, b, what="images"):
    if a.shape[:2] != b.shape[:2]:
        raise InvalidInputError(
            f"{what} must share dimensions, got {a.shape[:2]} vs {b.shape[:2]}"
        )


def to_uint8(img):
    """Clamp to [0, 1] and quantize to 8-bit."""
    return np.rint(np.clip(img, 0.0, 1.0) * 255.0).astype(np.uint8)


def from_uint8(arr):
    return np.asarray(arr, dtype=np.float64) / 255.0
