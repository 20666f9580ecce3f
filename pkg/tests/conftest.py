import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))


@pytest.fixture
def rng():
    return np.random.default_rng(20240901)


def random_rgb(rng, h, w):
    return rng.random((h, w, 3))


def smooth_rgb(rng, h, w, passes=3):
    """Blurred noise, a stand-in for natural image content."""
    from hazelab.pyramid import blur

    img = rng.random((h, w, 3))
    for _ in range(passes):
        img = blur(img)
    return np.clip(img, 0.0, 1.0)
