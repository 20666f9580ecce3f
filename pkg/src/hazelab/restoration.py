"""Haze-free image recovery.

The dual-scale algorithm inverts the haze model separately on the
half-resolution Gaussian level and the full-resolution Laplacian residual,
guarding every division (and the airlight offset) with the smooth
lower-bounded magnitude phi, then collapses the pyramid.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidInputError
from .image import as_color_triple, as_gray, as_rgb, require_same_shape
from .pyramid import TwoLevelPyramid, blur, build_pyramid, collapse_pyramid

AIRLIGHT_FLOOR = 3.0 / 8.0
TRANSMISSION_FLOOR = 1.0 / 4.0


def phi(z, m):
    """|z| above m, the quadratic (z^2 + m^2)/(2m) below; minimum m/2.

    Continuous and differentiable in z for m > 0.
    """
    if m <= 0:
        raise InvalidInputError(f"phi needs m > 0, got {m}")
    az = np.abs(z)
    out = np.where(az >= m, az, (np.square(z) + m * m) / (2.0 * m))
    if np.ndim(z) == 0:
        return float(out)
    return out


@dataclass
class AugmentedEstimate:
    """Model-based (A, t) plus optional externally supplied correction terms."""

    a_model: np.ndarray
    t_model: np.ndarray
    a_delta: Optional[np.ndarray] = None
    t_delta: Optional[np.ndarray] = None

    def effective_airlight(self):
        a = as_color_triple(self.a_model, "a_model")
        if self.a_delta is not None:
            a = a + as_color_triple(self.a_delta, "a_delta")
        return np.clip(a, 0.0, 1.0)

    def effective_transmission(self):
        t = as_gray(self.t_model, "t_model")
        if self.t_delta is not None:
            delta = as_gray(self.t_delta, "t_delta")
            require_same_shape(t, delta, "t_model and t_delta")
            t = t + delta
        return np.clip(t, 0.0, 1.0)


def dual_scale_dehaze(hazy, estimate, clamp=False):
    """Invert the haze model on both pyramid levels and collapse.

    The Gaussian level removes the airlight offset phi(A, 3/8) and restores
    it after the division; the Laplacian level only divides by the guarded
    transmission, so sky noise is amplified at most eightfold.
    """
    img = as_rgb(hazy, "hazy")
    a = estimate.effective_airlight()
    t = estimate.effective_transmission()
    require_same_shape(img, t, "hazy image and transmission")

    pyr = build_pyramid(img)
    t1 = blur(t)[::2, ::2]

    phi_a = phi(a, AIRLIGHT_FLOOR)
    g1 = (pyr.gaussian1 - phi_a) / phi(t1, TRANSMISSION_FLOOR)[..., None] + phi_a
    l0 = pyr.laplacian0 / phi(t, TRANSMISSION_FLOOR)[..., None]
    return collapse_pyramid(TwoLevelPyramid(laplacian0=l0, gaussian1=g1), clamp=clamp)


def single_scale_dehaze(hazy, estimate, clamp=False):
    """Per-pixel inversion without the pyramid split (ablation baseline)."""
    img = as_rgb(hazy, "hazy")
    a = estimate.effective_airlight()
    t = estimate.effective_transmission()
    require_same_shape(img, t, "hazy image and transmission")

    phi_a = phi(a, AIRLIGHT_FLOOR)
    out = (img - phi_a) / phi(t, TRANSMISSION_FLOOR)[..., None] + phi_a
    if clamp:
        out = np.clip(out, 0.0, 1.0)
    return out
