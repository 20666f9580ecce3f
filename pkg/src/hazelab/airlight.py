"""Atmospheric light estimation by hierarchical quadtree search.

The image is recursively quartered, descending into the quadrant whose
brightness-minus-variation score is highest; within the final region the
pixel closest to white is taken as the airlight.
"""

import numpy as np

from .errors import InvalidInputError
from .image import as_rgb


def region_score(img, region):
    """Mean-minus-stddev score averaged over the color channels.

    ``region`` is (top, left, height, width); the standard deviation is the
    population one (divisor = pixel count).
    """
    arr = as_rgb(img)
    top, left, h, w = region
    if h <= 0 or w <= 0:
        raise InvalidInputError(f"region {region} is empty")
    if top < 0 or left < 0 or top + h > arr.shape[0] or left + w > arr.shape[1]:
        raise InvalidInputError(f"region {region} exceeds image bounds {arr.shape[:2]}")
    patch = arr[top:top + h, left:left + w]
    mu = patch.mean(axis=(0, 1))
    sigma = patch.std(axis=(0, 1))
    return float(np.mean(mu - sigma))


def _quadrants(top, left, h, w):
    # row-major order TL, TR, BL, BR; odd sizes split ceil/floor
    h1 = (h + 1) // 2
    w1 = (w + 1) // 2
    return [
        (top, left, h1, w1),
        (top, left + w1, h1, w - w1),
        (top + h1, left, h - h1, w1),
        (top + h1, left + w1, h - h1, w - w1),
    ]


def find_airlight_region(img, stop_size=32):
    """Quadtree descent; returns the final (top, left, height, width) region."""
    arr = as_rgb(img)
    if stop_size < 1:
        raise InvalidInputError(f"stop_size must be >= 1, got {stop_size}")
    region = (0, 0, arr.shape[0], arr.shape[1])
    while min(region[2], region[3]) >= stop_size and max(region[2], region[3]) > 1:
        best = None
        best_score = -np.inf
        for quad in _quadrants(*region):
            if quad[2] == 0 or quad[3] == 0:
                continue
            score = region_score(arr, quad)
            if score > best_score:
                best_score = score
                best = quad
        region = best
    return region


def estimate_airlight(img, stop_size=32):
    """Airlight estimate: the final region's pixel color nearest to white."""
    arr = as_rgb(img)
    top, left, h, w = find_airlight_region(arr, stop_size)
    patch = arr[top:top + h, left:left + w].reshape(-1, 3)
    dist2 = np.sum((patch - 1.0) ** 2, axis=1)
    return patch[int(np.argmin(dist2))].copy()
