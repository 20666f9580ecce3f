"""Metrics and loss evaluators against direct-sum references."""

import numpy as np
import pytest

from hazelab.errors import InvalidInputError
from hazelab.pyramid import downsample
from hazelab.quality import (extreme_channel, extreme_mse_vs_haze, loss_cnn,
                             loss_dual_recon, loss_extreme, loss_gradient,
                             psnr, ssim)

from conftest import random_rgb
from oracles import (extreme_channel_ref, loss_dual_recon_ref,
                     loss_extreme_ref, loss_gradient_ref, psnr_ref, ssim_ref)


def test_psnr_cap_on_identical_images(rng):
    img = random_rgb(rng, 8, 8)
    assert psnr(img, img) == 100.0


def test_psnr_constant_offset():
    a = np.full((4, 4, 3), 0.5)
    b = np.full((4, 4, 3), 0.6)
    assert psnr(a, b) == pytest.approx(20.0, abs=1e-12)


def test_psnr_matches_reference_and_is_symmetric(rng):
    a = random_rgb(rng, 16, 16)
    b = random_rgb(rng, 16, 16)
    assert psnr(a, b) == pytest.approx(psnr_ref(a, b), abs=1e-9)
    assert psnr(a, b) == psnr(b, a)
    with pytest.raises(InvalidInputError):
        psnr(a, random_rgb(rng, 8, 16))


def test_ssim_identity_and_inversion(rng):
    img = random_rgb(rng, 16, 16)
    assert ssim(img, img) == pytest.approx(1.0, abs=1e-12)
    assert ssim(img, 1.0 - img) < 1.0


def test_ssim_matches_windowed_reference(rng):
    a = random_rgb(rng, 16, 16)
    b = np.clip(a + 0.1 * rng.standard_normal(a.shape), 0, 1)
    assert ssim(a, b) == pytest.approx(ssim_ref(a, b), abs=1e-6)
    assert ssim(a, b) == pytest.approx(ssim(b, a), abs=1e-12)


def test_ssim_needs_full_window(rng):
    with pytest.raises(InvalidInputError):
        ssim(random_rgb(rng, 10, 16), random_rgb(rng, 10, 16))


def test_extreme_channel_saturated_images():
    assert np.array_equal(extreme_channel(np.ones((6, 6, 3))), np.zeros((6, 6)))
    assert np.array_equal(extreme_channel(np.zeros((6, 6, 3))), np.zeros((6, 6)))


def test_extreme_channel_mid_gray():
    img = np.full((5, 5, 3), 128.0 / 255.0)
    assert np.allclose(extreme_channel(img), 127.0 / 255.0)


def test_extreme_channel_inversion_symmetry(rng):
    img = random_rgb(rng, 12, 12)
    assert np.array_equal(extreme_channel(img), extreme_channel(1.0 - img))


def test_extreme_channel_matches_reference(rng):
    img = random_rgb(rng, 16, 16)
    assert np.array_equal(extreme_channel(img, 7), extreme_channel_ref(img, 7))


def test_loss_extreme_values(rng):
    img = random_rgb(rng, 12, 12)
    assert loss_extreme(img, img) == 0.0
    # constant extreme channels 0.2 and 0.3 differ by 0.1 -> 0.01
    a = np.full((8, 8, 3), 0.2)
    b = np.full((8, 8, 3), 0.3)
    assert loss_extreme(a, b) == pytest.approx(0.01, abs=1e-12)


def test_loss_extreme_matches_reference(rng):
    a = random_rgb(rng, 16, 16)
    b = random_rgb(rng, 16, 16)
    assert loss_extreme(a, b) == pytest.approx(loss_extreme_ref(a, b), abs=1e-9)


def test_loss_gradient_ignores_global_offset(rng):
    img = random_rgb(rng, 10, 10) * 0.5
    assert loss_gradient(img, img) == 0.0
    assert loss_gradient(img, img + 0.2) == pytest.approx(0.0, abs=1e-12)


def test_loss_gradient_matches_reference(rng):
    a = random_rgb(rng, 16, 16)
    b = random_rgb(rng, 16, 16)
    assert loss_gradient(a, b) == pytest.approx(loss_gradient_ref(a, b), abs=1e-9)


def test_loss_dual_recon_values(rng):
    img = random_rgb(rng, 12, 12)
    half = downsample(img)
    assert loss_dual_recon(img, half, img, half) == 0.0
    # 0.1 offset at full resolution only: three channels * 0.1
    b = np.full((6, 6, 3), 0.4)
    bh = np.full((3, 3, 3), 0.4)
    c = np.full((6, 6, 3), 0.5)
    assert loss_dual_recon(b, bh, c, bh) == pytest.approx(0.3, abs=1e-12)


def test_loss_dual_recon_matches_reference(rng):
    a0 = random_rgb(rng, 16, 16)
    b0 = random_rgb(rng, 16, 16)
    a1 = random_rgb(rng, 8, 8)
    b1 = random_rgb(rng, 8, 8)
    assert loss_dual_recon(a0, a1, b0, b1) == \
        pytest.approx(loss_dual_recon_ref(a0, a1, b0, b1), abs=1e-9)


def test_loss_cnn_combination():
    assert loss_cnn(0.0, 0.0, 0.0) == 0.0
    assert loss_cnn(0.01, 0.02, 0.5) == pytest.approx(3.5, abs=1e-12)
    assert loss_cnn(0.01, 0.02, 0.5, w_recon=1.0, w_extreme=1.0) == \
        pytest.approx(0.53, abs=1e-12)
    with pytest.raises(InvalidInputError):
        loss_cnn(0.1, 0.1, 0.1, w_recon=-1.0)


def test_extreme_mse_trend(rng):
    # mid-gray airlight: the hazy extreme channel is 0.5 - t*max|I_c - 0.5|
    # per pixel, so heavier haze strictly pushes it away from the clean one
    airlight = (0.5, 0.5, 0.5)
    clean = random_rgb(rng, 32, 32)
    depth = np.full((32, 32), 1.0)
    depth[:, 16:] = 0.4
    alphas = [0.4, 0.8, 1.2, 1.6, 2.0, 2.5, 3.0]
    values = extreme_mse_vs_haze(clean, depth, alphas, airlight=airlight)
    assert all(b >= a for a, b in zip(values, values[1:]))
    # vanishing haze leaves the extreme channel untouched
    tiny = extreme_mse_vs_haze(clean, depth, [1e-9], airlight=airlight)
    assert tiny[0] < 1e-12
    twice = extreme_mse_vs_haze(clean, depth, [1.5, 1.5], airlight=airlight)
    assert twice[0] == twice[1]
    with pytest.raises(InvalidInputError):
        extreme_mse_vs_haze(clean, depth, [2.0, 1.0])
