# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: windowed running minimum and nearest-direction search.

The pure-NumPy equivalents live in ``hazelab._kernels_np``; both backends
must return bit-identical results.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline Py_ssize_t _clampi(Py_ssize_t v, Py_ssize_t lo, Py_ssize_t hi) noexcept nogil:
    if v < lo:
        return lo
    if v > hi:
        return hi
    return v


cdef void _running_min_1d(const double* src, double* dst, Py_ssize_t n,
                          Py_ssize_t radius, double* pad, double* pre,
                          double* suf) noexcept nogil:
    # van Herk/Gil-Werman sliding minimum over a replicate-padded line:
    # block prefix minima + block suffix minima, one min per output sample.
    cdef Py_ssize_t w = 2 * radius + 1
    cdef Py_ssize_t m = n + 2 * radius
    cdef Py_ssize_t i

    for i in range(m):
        pad[i] = src[_clampi(i - radius, 0, n - 1)]

    for i in range(m):
        if i % w == 0:
            pre[i] = pad[i]
        else:
            pre[i] = pre[i - 1] if pre[i - 1] < pad[i] else pad[i]

    for i in range(m - 1, -1, -1):
        if i % w == w - 1 or i == m - 1:
            suf[i] = pad[i]
        else:
            suf[i] = suf[i + 1] if suf[i + 1] < pad[i] else pad[i]

    for i in range(n):
        dst[i] = suf[i] if suf[i] < pre[i + w - 1] else pre[i + w - 1]


def windowed_min(double[:, ::1] img, Py_ssize_t radius):
    """Minimum over the (2*radius+1)^2 square window centered at each pixel.

    Out-of-bounds window positions replicate the nearest edge sample, which
    is equivalent to clipping the window at the image border.
    """
    cdef Py_ssize_t h = img.shape[0]
    cdef Py_ssize_t w = img.shape[1]
    cdef Py_ssize_t i, j

    out_arr = np.empty((h, w), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    if radius == 0:
        out[:, :] = img
        return out_arr

    cdef Py_ssize_t m = (h if h > w else w) + 2 * radius
    pad_arr = np.empty(m, dtype=np.float64)
    pre_arr = np.empty(m, dtype=np.float64)
    suf_arr = np.empty(m, dtype=np.float64)
    col_in_arr = np.empty(h, dtype=np.float64)
    col_out_arr = np.empty(h, dtype=np.float64)
    cdef double[::1] pad = pad_arr
    cdef double[::1] pre = pre_arr
    cdef double[::1] suf = suf_arr
    cdef double[::1] col_in = col_in_arr
    cdef double[::1] col_out = col_out_arr

    with nogil:
        for i in range(h):
            _running_min_1d(&img[i, 0], &out[i, 0], w, radius,
                            &pad[0], &pre[0], &suf[0])
        for j in range(w):
            for i in range(h):
                col_in[i] = out[i, j]
            _running_min_1d(&col_in[0], &col_out[0], h, radius,
                            &pad[0], &pre[0], &suf[0])
            for i in range(h):
                out[i, j] = col_out[i]
    return out_arr


def nearest_direction(double[:, ::1] vecs, double[:, ::1] dirs):
    """Index of the unit direction with the largest dot product per vector.

    First index wins on ties.  Dot products accumulate left to right
    (x, then y, then z) so results match the NumPy fallback exactly.
    """
    cdef Py_ssize_t n = vecs.shape[0]
    cdef Py_ssize_t k = dirs.shape[0]
    if vecs.shape[1] != 3 or dirs.shape[1] != 3:
        raise ValueError("expected arrays of shape (n, 3)")
    if k == 0:
        raise ValueError("need at least one direction")

    out_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    cdef Py_ssize_t i, j, best
    cdef double vx, vy, vz, d, best_d

    with nogil:
        for i in range(n):
            vx = vecs[i, 0]
            vy = vecs[i, 1]
            vz = vecs[i, 2]
            best = 0
            best_d = dirs[0, 0] * vx + dirs[0, 1] * vy + dirs[0, 2] * vz
            for j in range(1, k):
                d = dirs[j, 0] * vx + dirs[j, 1] * vy + dirs[j, 2] * vz
                if d > best_d:
                    best_d = d
                    best = j
            out[i] = best
    return out_arr
