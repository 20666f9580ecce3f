"""Backend dispatch for the hot kernels.

The compiled extension is used when available; setting HAZELAB_PURE_PYTHON=1
forces the NumPy fallback.  Both backends are bit-identical, so the choice
only affects speed (see benchmarks/bench_kernels.py).
"""

import os

import numpy as np

from . import _kernels_np
from .errors import InvalidInputError
from .image import as_gray

if os.environ.get("HAZELAB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_np
    BACKEND = "numpy"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:  # extension not built; the fallback is equivalent
        _impl = _kernels_np
        BACKEND = "numpy"


def windowed_min(img, radius):
    """Minimum over the (2*radius+1)^2 square window centered at each pixel.

    Borders replicate the nearest edge sample.  The result equals the
    exhaustive per-window scan bit for bit.
    """
    arr = as_gray(img)
    if radius < 0:
        raise InvalidInputError(f"radius must be >= 0, got {radius}")
    return _impl.windowed_min(np.ascontiguousarray(arr), int(radius))


def nearest_direction(vecs, dirs):
    """Assign each 3-vector to the unit direction maximizing the dot product.

    For nonzero vectors this is the argmax-cosine direction.  Ties resolve
    to the lowest index.
    """
    vecs = np.ascontiguousarray(vecs, dtype=np.float64)
    dirs = np.ascontiguousarray(dirs, dtype=np.float64)
    return _impl.nearest_direction(vecs, dirs)
