"""Model-based transmission estimation.

The initial map comes from the dark-direct-attenuation assumption (windowed
minimum of the airlight-normalized channels); haze-line averaging then pools
pixels whose color shift from the airlight points the same way, replacing
each pixel's estimate with a per-cluster ratio that suppresses the blocky
artifacts of the windowed minimum.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .image import as_color_triple, as_gray, as_rgb, require_same_shape
from .kernels import nearest_direction, windowed_min

GOLDEN_ANGLE = np.pi * (3.0 - np.sqrt(5.0))


def fibonacci_directions(n):
    """n approximately uniform unit vectors on the sphere (deterministic lattice)."""
    if n < 1:
        raise InvalidInputError(f"need at least one direction, got {n}")
    i = np.arange(n, dtype=np.float64)
    z = 1.0 - (2.0 * i + 1.0) / n
    s = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    theta = GOLDEN_ANGLE * i
    return np.stack([s * np.cos(theta), s * np.sin(theta), z], axis=1)


@dataclass
class HazeLinePartition:
    """Per-pixel haze-line membership with per-cluster aggregates.

    ``cluster_of`` holds a direction index in [0, K) for pixels whose color
    shift from the airlight is nonzero, and K (the degenerate bin) where the
    shift vanishes.  ``sum_t0`` is populated when an initial transmission map
    is supplied at build time.
    """

    cluster_of: np.ndarray
    radius: np.ndarray
    directions: np.ndarray
    sum_t0: np.ndarray
    sum_r: np.ndarray
    count: np.ndarray

    @property
    def n_directions(self):
        return self.directions.shape[0]

    @property
    def degenerate_index(self):
        return self.directions.shape[0]


def ddap_init(hazy, airlight, radius=7):
    """Initial transmission: one minus the windowed dark channel of Z/A."""
    img = as_rgb(hazy, "hazy")
    a = as_color_triple(airlight, "airlight")
    if np.any(a <= 0):
        raise InvalidInputError("airlight channels must be positive")
    if radius < 0:
        raise InvalidInputError(f"radius must be >= 0, got {radius}")
    dark = windowed_min((img / a).min(axis=2), radius)
    return np.clip(1.0 - dark, 0.0, 1.0)


def build_haze_lines(hazy, airlight, n_directions=1000, t0=None):
    """Cluster pixels by the direction of their color shift from the airlight.

    Each pixel with shift radius r(p) = ||Z(p) - A|| > 0 joins the lattice
    direction of maximal cosine similarity; zero-shift pixels fall into a
    dedicated degenerate cluster.  Per-cluster sums of r (and of t0, when
    given) are accumulated for the averaging step.
    """
    img = as_rgb(hazy, "hazy")
    a = as_color_triple(airlight, "airlight")
    dirs = fibonacci_directions(n_directions)

    shift = (img - a).reshape(-1, 3)
    r = np.linalg.norm(shift, axis=1)
    nonzero = r > 0.0

    cluster = np.full(r.shape[0], n_directions, dtype=np.int64)
    if np.any(nonzero):
        cluster[nonzero] = nearest_direction(shift[nonzero], dirs)

    n_bins = n_directions + 1
    count = np.bincount(cluster, minlength=n_bins)
    sum_r = np.bincount(cluster, weights=r, minlength=n_bins)
    if t0 is not None:
        t0_arr = as_gray(t0, "t0")
        require_same_shape(img, t0_arr, "hazy image and t0")
        sum_t0 = np.bincount(cluster, weights=t0_arr.reshape(-1), minlength=n_bins)
    else:
        sum_t0 = np.zeros(n_bins)

    h, w = img.shape[:2]
    return HazeLinePartition(
        cluster_of=cluster.reshape(h, w),
        radius=r.reshape(h, w),
        directions=dirs,
        sum_t0=sum_t0,
        sum_r=sum_r,
        count=count,
    )


def hla_refine(t0, partition):
    """Haze-line averaging: t_m(p) = (sum t0 / sum r over the cluster) * r(p).

    Aggregates are recomputed from the supplied map, so refining a refined
    map with the same partition is a fixed point.  Degenerate (zero-shift)
    pixels keep their initial values.  The result is clamped to [0, 1].
    """
    t0_arr = as_gray(t0, "t0")
    require_same_shape(t0_arr, partition.radius, "t0 and partition")

    cluster = partition.cluster_of.reshape(-1)
    r = partition.radius.reshape(-1)
    n_bins = partition.n_directions + 1
    sum_t = np.bincount(cluster, weights=t0_arr.reshape(-1), minlength=n_bins)
    sum_r = np.bincount(cluster, weights=r, minlength=n_bins)
    count = np.bincount(cluster, minlength=n_bins)

    populated = count[:-1] > 0
    assert not np.any(populated & (sum_r[:-1] <= 0.0)), \
        "cluster with members but zero shift radius"

    ratio = np.zeros(n_bins)
    np.divide(sum_t, sum_r, out=ratio, where=sum_r > 0.0)

    tm = ratio[cluster] * r
    degenerate = cluster == partition.degenerate_index
    tm[degenerate] = t0_arr.reshape(-1)[degenerate]
    return np.clip(tm.reshape(t0_arr.shape), 0.0, 1.0)


def estimate_transmission(hazy, airlight, radius=7, n_directions=1000):
    """DDAP initialization followed by haze-line averaging.

    Returns (t_m, t_0, partition).
    """
    t0 = ddap_init(hazy, airlight, radius)
    partition = build_haze_lines(hazy, airlight, n_directions, t0=t0)
    tm = hla_refine(t0, partition)
    return tm, t0, partition
