"""Quality metrics and restoration-loss evaluators over image pairs."""

import numpy as np
from scipy.ndimage import correlate1d

from .errors import InvalidInputError
from .image import as_color_triple, as_gray, as_rgb, require_same_shape
from .kernels import windowed_min
from .synthesis import koschmieder_forward, transmission_from_depth

PSNR_CAP_DB = 100.0
SSIM_WINDOW = 11
SSIM_SIGMA = 1.5
SSIM_K1 = 0.01
SSIM_K2 = 0.03
DEFAULT_RADIUS = 7


def psnr(a, b):
    """Peak signal-to-noise ratio in dB with peak 1.0, capped at 100 dB."""
    x = as_rgb(a, "a")
    y = as_rgb(b, "b")
    require_same_shape(x, y)
    mse = float(np.mean((x - y) ** 2))
    if mse == 0.0:
        return PSNR_CAP_DB
    return min(PSNR_CAP_DB, 10.0 * np.log10(1.0 / mse))


def _gaussian_window(size=SSIM_WINDOW, sigma=SSIM_SIGMA):
    ax = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    g = np.exp(-(ax ** 2) / (2.0 * sigma ** 2))
    return g / g.sum()


def _filter_valid(x, g):
    # separable correlation, cropped to centers where the window fits
    half = len(g) // 2
    y = correlate1d(x, g, axis=0, mode="constant")
    y = correlate1d(y, g, axis=1, mode="constant")
    return y[half:-half, half:-half]


def ssim(a, b):
    """Mean local structural similarity (11x11 Gaussian window, sigma 1.5)."""
    x = as_rgb(a, "a")
    y = as_rgb(b, "b")
    require_same_shape(x, y)
    if min(x.shape[0], x.shape[1]) < SSIM_WINDOW:
        raise InvalidInputError(
            f"images must be at least {SSIM_WINDOW}x{SSIM_WINDOW} for ssim"
        )
    g = _gaussian_window()
    c1 = SSIM_K1 ** 2
    c2 = SSIM_K2 ** 2
    values = []
    for c in range(3):
        xc, yc = x[:, :, c], y[:, :, c]
        mu_x = _filter_valid(xc, g)
        mu_y = _filter_valid(yc, g)
        var_x = _filter_valid(xc * xc, g) - mu_x ** 2
        var_y = _filter_valid(yc * yc, g) - mu_y ** 2
        cov = _filter_valid(xc * yc, g) - mu_x * mu_y
        num = (2.0 * mu_x * mu_y + c1) * (2.0 * cov + c2)
        den = (mu_x ** 2 + mu_y ** 2 + c1) * (var_x + var_y + c2)
        values.append(num / den)
    return float(np.mean(values))


def extreme_channel(img, radius=DEFAULT_RADIUS):
    """Windowed minimum of min_c min(I_c, 1 - I_c).

    Near zero for natural images; symmetric under intensity inversion.
    """
    arr = as_rgb(img)
    folded = np.minimum(arr, 1.0 - arr).min(axis=2)
    return windowed_min(folded, radius)


def loss_extreme(restored, truth, radius=DEFAULT_RADIUS):
    """Mean squared difference between the two extreme channels."""
    x = as_rgb(restored, "restored")
    y = as_rgb(truth, "truth")
    require_same_shape(x, y)
    diff = extreme_channel(x, radius) - extreme_channel(y, radius)
    return float(np.mean(diff ** 2))


def _forward_gradients(img):
    # forward differences; the last column/row gradient is defined as zero
    gh = np.zeros_like(img)
    gv = np.zeros_like(img)
    gh[:, :-1] = img[:, 1:] - img[:, :-1]
    gv[:-1, :] = img[1:, :] - img[:-1, :]
    return gh, gv


def loss_gradient(restored, truth):
    """Mean absolute gradient mismatch, summed over channels."""
    x = as_rgb(restored, "restored")
    y = as_rgb(truth, "truth")
    require_same_shape(x, y)
    gh_x, gv_x = _forward_gradients(x)
    gh_y, gv_y = _forward_gradients(y)
    total = np.sum(np.abs(gh_x - gh_y)) + np.sum(np.abs(gv_x - gv_y))
    return float(total / (x.shape[0] * x.shape[1]))


def loss_dual_recon(restored, restored_half, truth, truth_half):
    """L1 mismatch at both scales, each normalized by the full-resolution pixel count."""
    x0 = as_rgb(restored, "restored")
    y0 = as_rgb(truth, "truth")
    require_same_shape(x0, y0)
    x1 = as_rgb(restored_half, "restored_half")
    y1 = as_rgb(truth_half, "truth_half")
    require_same_shape(x1, y1, "half-resolution images")
    n_full = x0.shape[0] * x0.shape[1]
    return float((np.sum(np.abs(x0 - y0)) + np.sum(np.abs(x1 - y1))) / n_full)


def loss_cnn(l_recon, l_extreme, l_gradient, w_recon=100.0, w_extreme=100.0):
    """Weighted combination w_R*L_r + w_e*L_e + L_t."""
    if w_recon < 0 or w_extreme < 0:
        raise InvalidInputError("loss weights must be non-negative")
    return float(w_recon * l_recon + w_extreme * l_extreme + l_gradient)


def extreme_mse_vs_haze(clean, depth, alphas, airlight=(0.8, 0.8, 0.8),
                        radius=DEFAULT_RADIUS):
    """MSE between hazy and clean extreme channels for each haze degree.

    ``alphas`` must be ascending; heavier haze pushes the hazy extreme
    channel further from the clean one, so the returned sequence is
    expected to be non-decreasing.
    """
    img = as_rgb(clean, "clean")
    d = as_gray(depth, "depth")
    require_same_shape(img, d, "clean image and depth")
    a = as_color_triple(airlight, "airlight")
    alphas = list(alphas)
    if any(b < a_ for a_, b in zip(alphas, alphas[1:])):
        raise InvalidInputError("alphas must be sorted ascending")

    base = extreme_channel(img, radius)
    out = []
    for alpha in alphas:
        t = transmission_from_depth(d, alpha)
        hazy = koschmieder_forward(img, t, a)
        diff = extreme_channel(hazy, radius) - base
        out.append(float(np.mean(diff ** 2)))
    return out
