"""Pure-Python Faddeeva kernel: w(z) = exp(-z^2) erfc(-iz).

Two-regime evaluation in the first quadrant: a Maclaurin series of the
Dawson-type factor near the origin and a backward continued-fraction
recurrence elsewhere, with the truncation orders tied to a scaled radius
so the relative error stays near 1e-14 across the crossover. The other
quadrants are reached through w(-conj(z)) = conj(w(z)) and
w(-z) = 2 exp(-z^2) - w(z).

This module is the fallback backend; shadowhp.kernel prefers the compiled
twin when it is importable. Keep the two implementations in lockstep.
"""

from __future__ import annotations

import cmath
import math

_TWO_OVER_SQRTPI = 1.1283791670955126


def _w_upper_pos(x: float, y: float) -> complex:
    # first quadrant only: x >= 0, y >= 0
    qx = x / 6.3
    qy = y / 4.4
    qrho = qx * qx + qy * qy
    zsq = complex(x * x - y * y, 2.0 * x * y)
    if qrho < 0.085264:
        # w = exp(-z^2) (1 + (2i z / sqrt(pi)) S), S = sum_m z^(2m) / (m! (2m+1)),
        # summed backwards; the order grows with the scaled radius
        q = (1.0 - 0.85 * qy) * math.sqrt(qrho)
        n = int(round(6.0 + 72.0 * q))
        s = 1.0 / (2.0 * n + 1.0) + 0j
        for m in range(n, 0, -1):
            s = s * zsq / m + 1.0 / (2.0 * m - 1.0)
        z = complex(x, y)
        return cmath.exp(-zsq) * (1.0 + _TWO_OVER_SQRTPI * 1j * z * s)
    if qrho >= 1.0:
        # pure continued fraction, no power-series correction
        h = 0.0
        kapn = 0
        t = math.sqrt(qrho)
        nu = int(3.0 + 1442.0 / (26.0 * t + 77.0))
    else:
        t = (1.0 - qy) * math.sqrt(1.0 - qrho)
        h = 1.88 * t
        kapn = int(round(7.0 + 34.0 * t))
        nu = int(round(16.0 + 26.0 * t))
    h2 = 2.0 * h
    rx = ry = sx = sy = 0.0
    qlam = h2**kapn if h > 0.0 else 0.0
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
        u = math.exp(-x * x)
    return complex(u, v)


def _w_upper(x: float, y: float) -> complex:
    if x >= 0.0:
        return _w_upper_pos(x, y)
    return _w_upper_pos(-x, y).conjugate()


def faddeeva_w(z: complex) -> complex:
    """Evaluate w(z) anywhere; raises OverflowError deep in the lower half-plane.

    For Im z < 0 the reflection w(z) = 2 exp(-z^2) - w(-z) applies, and
    exp(-z^2) overflows once Im(z)^2 - Re(z)^2 exceeds the double-precision
    exponent range.
    """
    z = complex(z)
    x, y = z.real, z.imag
    if y >= 0.0:
        return _w_upper(x, y)
    re_mz2 = y * y - x * x
    if re_mz2 > 708.0:
        raise OverflowError(f"w(z) overflows at z = {z!r}: exp({re_mz2:.1f})")
    mz2 = complex(re_mz2, -2.0 * x * y)
    return 2.0 * cmath.exp(mz2) - _w_upper(-x, -y)
