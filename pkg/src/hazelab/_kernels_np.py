"""Pure-NumPy fallback for the compiled kernels.

Results are bit-identical to ``hazelab._kernels``: minima are exact, and the
nearest-direction dot products accumulate in the same x, y, z order.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

_CHUNK = 4096  # rows per nearest-direction block, bounds the (chunk, k) buffer


def windowed_min(img, radius):
    """Minimum over the (2*radius+1)^2 window with replicate borders."""
    img = np.ascontiguousarray(img, dtype=np.float64)
    if radius == 0:
        return img.copy()
    w = 2 * radius + 1
    padded = np.pad(img, ((0, 0), (radius, radius)), mode="edge")
    rows = sliding_window_view(padded, w, axis=1).min(axis=-1)
    padded = np.pad(rows, ((radius, radius), (0, 0)), mode="edge")
    return sliding_window_view(padded, w, axis=0).min(axis=-1)


def nearest_direction(vecs, dirs):
    """Index of the direction with the largest dot product per vector."""
    vecs = np.ascontiguousarray(vecs, dtype=np.float64)
    dirs = np.ascontiguousarray(dirs, dtype=np.float64)
    if vecs.shape[1] != 3 or dirs.shape[1] != 3:
        raise ValueError("expected arrays of shape (n, 3)")
    if dirs.shape[0] == 0:
        raise ValueError("need at least one direction")
    out = np.empty(vecs.shape[0], dtype=np.int64)
    for start in range(0, vecs.shape[0], _CHUNK):
        v = vecs[start:start + _CHUNK]
        dots = np.outer(v[:, 0], dirs[:, 0])
        dots += np.outer(v[:, 1], dirs[:, 1])
        dots += np.outer(v[:, 2], dirs[:, 2])
        out[start:start + _CHUNK] = np.argmax(dots, axis=1)
    return out
