"""Two-level Gaussian/Laplacian pyramid.

The level-1 Gaussian image is the blurred input downsampled by two; the
level-0 Laplacian image is the residual against the upsampled level-1, so
collapsing reproduces the input exactly up to rounding.
"""

from dataclasses import dataclass

import numpy as np
from scipy.ndimage import correlate1d

from .errors import InvalidInputError
from .image import as_rgb

# 5-tap binomial kernel; even and odd taps each sum to 1/2, so zero-stuffed
# upsampling followed by the doubled kernel preserves constants.
BINOMIAL5 = np.array([1.0, 4.0, 6.0, 4.0, 1.0]) / 16.0


@dataclass
class TwoLevelPyramid:
    """Full-resolution Laplacian level plus half-resolution Gaussian level."""

    laplacian0: np.ndarray
    gaussian1: np.ndarray


def blur(img):
    """Separable binomial blur with reflect-101 borders."""
    out = correlate1d(np.asarray(img, dtype=np.float64), BINOMIAL5, axis=0, mode="mirror")
    return correlate1d(out, BINOMIAL5, axis=1, mode="mirror")


def downsample(img):
    """Blur, then keep even-indexed rows and columns (ceil-half size)."""
    return blur(img)[::2, ::2]


def upsample(img, target_hw):
    """Zero-stuff to ``target_hw`` and smooth with the doubled blur kernel."""
    h, w = target_hw
    small = np.asarray(img, dtype=np.float64)
    if small.shape[0] != (h + 1) // 2 or small.shape[1] != (w + 1) // 2:
        raise InvalidInputError(
            f"upsample source {small.shape[:2]} does not match target {(h, w)}"
        )
    up = np.zeros((h, w) + small.shape[2:], dtype=np.float64)
    up[::2, ::2] = small
    up = correlate1d(up, 2.0 * BINOMIAL5, axis=0, mode="mirror")
    return correlate1d(up, 2.0 * BINOMIAL5, axis=1, mode="mirror")


def build_pyramid(img):
    """Decompose a color image into its two-level pyramid."""
    arr = as_rgb(img)
    g1 = downsample(arr)
    l0 = arr - upsample(g1, arr.shape[:2])
    return TwoLevelPyramid(laplacian0=l0, gaussian1=g1)


def collapse_pyramid(pyr, clamp=False):
    """Reconstruct the full-resolution image from its two levels.

    The raw sum is returned by default; pass ``clamp=True`` for display
    output limited to [0, 1].
    """
    l0 = np.asarray(pyr.laplacian0, dtype=np.float64)
    g1 = np.asarray(pyr.gaussian1, dtype=np.float64)
    h, w = l0.shape[:2]
    if g1.shape[:2] != ((h + 1) // 2, (w + 1) // 2):
        raise InvalidInputError(
            f"gaussian1 shape {g1.shape[:2]} does not match laplacian0 {l0.shape[:2]}"
        )
    out = l0 + upsample(g1, (h, w))
    if clamp:
        out = np.clip(out, 0.0, 1.0)
    return out
