"""Hazy image synthesis under the atmospheric scattering model.

A hazy observation is the pixel-wise blend Z = I*t + A*(1 - t) of the clean
scene I and the global atmospheric light A, weighted by the transmission
t = exp(-alpha * depth).
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .image import as_color_triple, as_gray, as_rgb, require_same_shape

LIGHT_ALPHA_RANGE = (1.2, 2.0)
HEAVY_ALPHA_RANGE = (2.5, 3.0)
AIRLIGHT_RANGE = (0.625, 1.0)
# one light-haze draw for every four heavy-haze draws
LIGHT_COHORT_PERIOD = 5


@dataclass
class SynthesisParams:
    """Scattering coefficient and airlight for one synthesized scene."""

    alpha: float
    airlight: np.ndarray
    seed: int


def transmission_from_depth(depth, alpha):
    """t(p) = exp(-alpha * d(p)) for a homogeneous atmosphere."""
    d = as_gray(depth, "depth")
    if np.any(d < 0):
        raise InvalidInputError("depth must be non-negative everywhere")
    if alpha <= 0:
        raise InvalidInputError(f"alpha must be > 0, got {alpha}")
    return np.exp(-alpha * d)


def koschmieder_forward(clean, t, airlight):
    """Blend scene radiance with airlight: Z = I*t + A*(1 - t), clamped to [0, 1]."""
    img = as_rgb(clean, "clean")
    tmap = as_gray(t, "transmission")
    require_same_shape(img, tmap, "clean image and transmission")
    a = as_color_triple(airlight, "airlight")
    hazy = img * tmap[..., None] + a * (1.0 - tmap[..., None])
    return np.clip(hazy, 0.0, 1.0)


def invert_koschmieder(hazy, t, airlight):
    """Recover I = (Z - A)/t + A given exact t and A (unclamped)."""
    img = as_rgb(hazy, "hazy")
    tmap = as_gray(t, "transmission")
    require_same_shape(img, tmap, "hazy image and transmission")
    a = as_color_triple(airlight, "airlight")
    return (img - a) / tmap[..., None] + a


def sample_protocol_params(seed, index=0):
    """Draw (alpha, airlight) for sample ``index`` of a seeded stream.

    Every fifth index belongs to the light-haze cohort (alpha uniform in
    [1.2, 2.0]); the rest are heavy (alpha uniform in [2.5, 3.0]).  Airlight
    channels are independent uniforms in [0.625, 1.0].  Repeat calls with
    the same (seed, index) return identical parameters.
    """
    rng = np.random.default_rng([int(seed), int(index)])
    if index % LIGHT_COHORT_PERIOD == 0:
        lo, hi = LIGHT_ALPHA_RANGE
    else:
        lo, hi = HEAVY_ALPHA_RANGE
    alpha = float(rng.uniform(lo, hi))
    airlight = rng.uniform(AIRLIGHT_RANGE[0], AIRLIGHT_RANGE[1], size=3)
    return SynthesisParams(alpha=alpha, airlight=airlight, seed=int(seed))


def generate_depth(kind, height, width, scale=1.0, low=0.25, high=1.0):
    """Procedural depth fields: constant, horizontal ramp, vertical step, radial cone.

    ``scale`` multiplies the unit-range pattern; ``low``/``high`` are the two
    plateau values of the step field.
    """
    if height < 1 or width < 1:
        raise InvalidInputError("depth field needs positive dimensions")
    if kind == "constant":
        return np.full((height, width), float(scale))
    if kind == "ramp":
        col = np.linspace(0.0, 1.0, width)
        return np.tile(col * scale, (height, 1))
    if kind == "step":
        d = np.full((height, width), float(low))
        d[:, width // 2:] = high
        return d * scale
    if kind == "radial":
        yy, xx = np.mgrid[0:height, 0:width]
        cy, cx = (height - 1) / 2.0, (width - 1) / 2.0
        r = np.hypot(yy - cy, xx - cx)
        return scale * r / max(r.max(), 1e-12)
    raise InvalidInputError(f"unknown depth kind {kind!r}")
