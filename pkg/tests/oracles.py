"""Independent brute-force reference implementations.

Everything here is written as plain nested loops (or two-pass statistics)
so the fast library paths can be checked against a second route.  Keep these
slow and obvious; they are the ground truth for the tests.
"""

import numpy as np


def windowed_min_ref(gray, radius):
    h, w = gray.shape
    out = np.empty_like(gray)
    for i in range(h):
        for j in range(w):
            out[i, j] = gray[max(0, i - radius):i + radius + 1,
                             max(0, j - radius):j + radius + 1].min()
    return out


def _reflect101(i, n):
    # fold an index into [0, n) with reflect-101 symmetry (edge not repeated)
    if n == 1:
        return 0
    period = 2 * (n - 1)
    i = i % period
    if i < 0:
        i += period
    return i if i < n else period - i


def blur_ref(img):
    """Separable 5-tap binomial blur with reflect-101 borders, nested loops."""
    k = np.array([1.0, 4.0, 6.0, 4.0, 1.0]) / 16.0
    arr = np.asarray(img, dtype=np.float64)
    h, w = arr.shape[:2]
    mid = np.zeros_like(arr)
    for i in range(h):
        for j in range(w):
            acc = 0.0 * arr[0, 0]
            for u in range(-2, 3):
                acc = acc + k[u + 2] * arr[_reflect101(i + u, h), j]
            mid[i, j] = acc
    out = np.zeros_like(arr)
    for i in range(h):
        for j in range(w):
            acc = 0.0 * arr[0, 0]
            for u in range(-2, 3):
                acc = acc + k[u + 2] * mid[i, _reflect101(j + u, w)]
            out[i, j] = acc
    return out


def downsample_ref(img):
    return blur_ref(img)[::2, ::2]


def region_score_ref(img, region):
    top, left, h, w = region
    patch = img[top:top + h, left:left + w]
    total = 0.0
    for c in range(3):
        vals = patch[:, :, c].ravel()
        mu = sum(vals) / len(vals)
        var = sum((v - mu) ** 2 for v in vals) / len(vals)
        total += mu - var ** 0.5
    return total / 3.0


def ddap_ref(hazy, airlight, radius):
    h, w = hazy.shape[:2]
    ratio = np.empty((h, w))
    for i in range(h):
        for j in range(w):
            ratio[i, j] = min(hazy[i, j, c] / airlight[c] for c in range(3))
    out = np.empty((h, w))
    for i in range(h):
        for j in range(w):
            out[i, j] = ratio[max(0, i - radius):i + radius + 1,
                              max(0, j - radius):j + radius + 1].min()
    return np.clip(1.0 - out, 0.0, 1.0)


def nearest_direction_ref(vecs, dirs):
    out = np.empty(len(vecs), dtype=np.int64)
    for i, v in enumerate(vecs):
        best = 0
        best_d = (dirs[0, 0] * v[0] + dirs[0, 1] * v[1]) + dirs[0, 2] * v[2]
        for j in range(1, len(dirs)):
            d = (dirs[j, 0] * v[0] + dirs[j, 1] * v[1]) + dirs[j, 2] * v[2]
            if d > best_d:
                best_d = d
                best = j
        out[i] = best
    return out


def mse_ref(a, b):
    total = 0.0
    count = 0
    for x, y in zip(a.ravel(), b.ravel()):
        total += (x - y) ** 2
        count += 1
    return total / count


def psnr_ref(a, b, cap=100.0):
    mse = mse_ref(a, b)
    if mse == 0.0:
        return cap
    return min(cap, 10.0 * np.log10(1.0 / mse))


def extreme_channel_ref(img, radius):
    h, w = img.shape[:2]
    folded = np.empty((h, w))
    for i in range(h):
        for j in range(w):
            folded[i, j] = min(min(img[i, j, c], 1.0 - img[i, j, c]) for c in range(3))
    return windowed_min_ref(folded, radius)


def loss_extreme_ref(a, b, radius=7):
    ea = extreme_channel_ref(a, radius)
    eb = extreme_channel_ref(b, radius)
    h, w = ea.shape
    total = 0.0
    for i in range(h):
        for j in range(w):
            total += (ea[i, j] - eb[i, j]) ** 2
    return total / (h * w)


def loss_gradient_ref(a, b):
    h, w = a.shape[:2]
    total = 0.0
    for c in range(3):
        for i in range(h):
            for j in range(w):
                gh_a = a[i, j + 1, c] - a[i, j, c] if j + 1 < w else 0.0
                gh_b = b[i, j + 1, c] - b[i, j, c] if j + 1 < w else 0.0
                gv_a = a[i + 1, j, c] - a[i, j, c] if i + 1 < h else 0.0
                gv_b = b[i + 1, j, c] - b[i, j, c] if i + 1 < h else 0.0
                total += abs(gh_a - gh_b) + abs(gv_a - gv_b)
    return total / (h * w)


def loss_dual_recon_ref(a0, a1, b0, b1):
    h, w = a0.shape[:2]
    total = 0.0
    for x, y in zip(a0.ravel(), b0.ravel()):
        total += abs(x - y)
    for x, y in zip(a1.ravel(), b1.ravel()):
        total += abs(x - y)
    return total / (h * w)


def ssim_ref(a, b, size=11, sigma=1.5, k1=0.01, k2=0.03):
    """Direct windowed statistics at every valid center, Gaussian weights."""
    ax = np.arange(size) - (size - 1) / 2.0
    g1 = np.exp(-(ax ** 2) / (2.0 * sigma ** 2))
    g1 /= g1.sum()
    win = np.outer(g1, g1)
    c1, c2 = k1 ** 2, k2 ** 2
    h, w = a.shape[:2]
    half = size // 2
    vals = []
    for c in range(3):
        for i in range(half, h - half):
            for j in range(half, w - half):
                pa = a[i - half:i + half + 1, j - half:j + half + 1, c]
                pb = b[i - half:i + half + 1, j - half:j + half + 1, c]
                mu_a = np.sum(win * pa)
                mu_b = np.sum(win * pb)
                var_a = np.sum(win * (pa - mu_a) ** 2)
                var_b = np.sum(win * (pb - mu_b) ** 2)
                cov = np.sum(win * (pa - mu_a) * (pb - mu_b))
                num = (2 * mu_a * mu_b + c1) * (2 * cov + c2)
                den = (mu_a ** 2 + mu_b ** 2 + c1) * (var_a + var_b + c2)
                vals.append(num / den)
    return float(np.mean(vals))
