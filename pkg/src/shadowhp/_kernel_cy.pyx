# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Faddeeva kernel, the hot path of every amplitude evaluation.

Same two-regime algorithm as shadowhp._kernel_py; keep them in lockstep.
"""

cimport libc.math as cm


cdef extern from "complex.h" nogil:
    double complex cexp(double complex)


cdef double _TWO_OVER_SQRTPI = 1.1283791670955126


cdef double complex _w_upper_pos(double x, double y):
    # first quadrant only: x >= 0, y >= 0
    cdef double qx = x / 6.3
    cdef double qy = y / 4.4
    cdef double qrho = qx * qx + qy * qy
    cdef double complex zsq = x * x - y * y + 2.0j * x * y
    cdef double complex s, z
    cdef double q, t, h, h2, rx, ry, sx, sy, qlam, tx, ty, c, tx2, u, v
    cdef int n, m, kapn, nu, np1

    if qrho < 0.085264:
        # w = exp(-z^2) (1 + (2i z / sqrt(pi)) S), S = sum_m z^(2m) / (m! (2m+1))
        q = (1.0 - 0.85 * qy) * cm.sqrt(qrho)
        n = <int> cm.round(6.0 + 72.0 * q)
        s = 1.0 / (2.0 * n + 1.0)
        for m in range(n, 0, -1):
            s = s * zsq / m + 1.0 / (2.0 * m - 1.0)
        z = x + 1j * y
        return cexp(-zsq) * (1.0 + _TWO_OVER_SQRTPI * 1j * z * s)
    if qrho >= 1.0:
        h = 0.0
        kapn = 0
        t = cm.sqrt(qrho)
        nu = <int> (3.0 + 1442.0 / (26.0 * t + 77.0))
    else:
        t = (1.0 - qy) * cm.sqrt(1.0 - qrho)
        h = 1.88 * t
        kapn = <int> cm.round(7.0 + 34.0 * t)
        nu = <int> cm.round(16.0 + 26.0 * t)
    h2 = 2.0 * h
    rx = 0.0
    ry = 0.0
    sx = 0.0
    sy = 0.0
    qlam = cm.pow(h2, kapn) if h > 0.0 else 0.0
    for n in range(nu, -1, -1):
        np1 = n + 1
        tx = y + h + np1 * rx
        ty = x - np1 * ry
        c = 0.5 / (tx * tx + ty * ty)
        rx = c * tx
        ry = c * ty
        if h > 0.0 and n <= kapn:
            tx2 = qlam + sx
            sx = rx * tx2 - ry * sy
            sy = ry * tx2 + rx * sy
            qlam = qlam / h2
    if h == 0.0:
        u = _TWO_OVER_SQRTPI * rx
        v = _TWO_OVER_SQRTPI * ry
    else:
        u = _TWO_OVER_SQRTPI * sx
        v = _TWO_OVER_SQRTPI * sy
    if y == 0.0:
        # the real part is exactly exp(-x^2) on the real axis
        u = cm.exp(-x * x)
    return u + 1j * v


cdef double complex _w_upper(double x, double y):
    cdef double complex w
    if x >= 0.0:
        return _w_upper_pos(x, y)
    w = _w_upper_pos(-x, y)
    return w.real - 1j * w.imag


def faddeeva_w(double complex z):
    """Evaluate w(z) anywhere; raises OverflowError deep in the lower half-plane."""
    cdef double x = z.real
    cdef double y = z.imag
    cdef double re_mz2
    cdef double complex mz2
    if y >= 0.0:
        return _w_upper(x, y)
    re_mz2 = y * y - x * x
    if re_mz2 > 708.0:
        raise OverflowError(f"w(z) overflows at z = {complex(z)!r}: exp({re_mz2:.1f})")
    mz2 = re_mz2 - 2.0j * x * y
    return 2.0 * cexp(mz2) - _w_upper(-x, -y)
