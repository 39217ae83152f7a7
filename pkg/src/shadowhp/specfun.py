"""Complex Fresnel integral Fr, its bounded companion F, and validation oracles.

Fr(z) = (1/2) erfc(e^{-i pi/4} z) is entire; F(z) = e^{-i z^2} Fr(z) equals
half the Faddeeva function at the rotated argument, (1/2) w(e^{i pi/4} z),
so it stays bounded for arg z in [-pi/2, pi] and grows like
exp(|z|^2 sin(2 arg z)) in the remaining sector.

Two independent evaluation routes are kept deliberately separate:
fresnel_fr / big_f run on the in-house Faddeeva kernel, while
fresnel_oracle integrates the defining improper integral along a rotated
contour with adaptive quadrature. Their agreement is the primary
correctness check for both.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from shadowhp.errors import CertificationError, DomainError, OracleError
from shadowhp.kernel import faddeeva_w

_EIPI4 = cmath.exp(0.25j * math.pi)
_SQRTPI = math.sqrt(math.pi)
_EXP_MAX = 709.0  # exp overflows just above this in double precision

__all__ = [
    "SectorBoundCert",
    "big_f",
    "fresnel_fr",
    "fresnel_oracle",
    "sector_bound_cert",
]


def _finite_complex(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"argument must have finite components, got {z!r}")
    return z


def fresnel_fr(z: complex) -> complex:
    """Fresnel integral Fr(z) = (1/2) erfc(e^{-i pi/4} z), entire in z.

    Raises OverflowError when the factor e^{i z^2} exceeds the double range
    (only possible in the half-plane handled by the symmetry reflection).
    """
    z = _finite_complex(z)
    zeta = _EIPI4 * z
    if zeta.imag >= 0.0:
        iz2 = 1j * z * z
        if iz2.real > _EXP_MAX:
            raise OverflowError(f"exp(i z^2) overflows at z = {z!r}")
        return 0.5 * cmath.exp(iz2) * faddeeva_w(zeta)
    # Fr(z) = 1 - Fr(-z); -z lands in the directly computable half-plane
    return 1.0 - fresnel_fr(-z)


def big_f(z: complex) -> complex:
    """F(z) = e^{-i z^2} Fr(z) = (1/2) w(e^{i pi/4} z), evaluated without
    forming the product of two overflowing factors.

    Bounded on arg z in [-pi/2, pi]; in the growth sector arg z in
    (-pi, -pi/2) it equals e^{-i z^2} - F(-z) and raises OverflowError once
    the exponential factor leaves the double range.
    """
    z = _finite_complex(z)
    zeta = _EIPI4 * z
    if zeta.imag >= 0.0:
        return 0.5 * faddeeva_w(zeta)
    m_iz2 = -1j * z * z
    if m_iz2.real > _EXP_MAX:
        raise OverflowError(f"exp(-i z^2) overflows at z = {z!r}")
    return cmath.exp(m_iz2) - 0.5 * faddeeva_w(-zeta)


def fresnel_oracle(z: complex, tol: float = 1e-13) -> complex:
    """Independent Fr(z) via adaptive quadrature, kernel-free.

    Substituting t = z + e^{i pi/4} u into the defining improper integral
    rotates the tail onto the steepest-descent direction:

        Fr(z) = e^{i z^2} / sqrt(pi) * int_0^inf exp(-u^2 + b u) du,
        b = 2 i e^{i pi/4} z.

    When Re b > 0 the symmetry Fr(z) = 1 - Fr(-z) is applied first so the
    integrand decays from u = 0 on; the integral is then truncated where
    the envelope falls below exp(-746) and handed to adaptive quadrature.
    Raises OracleError when the declared quadrature error exceeds tol.
    """
    z = _finite_complex(z)
    if tol < 1e-14:
        raise DomainError(f"oracle tolerance must be >= 1e-14, got {tol}")
    b = 2j * _EIPI4 * z
    if b.real > 0.0:
        return 1.0 - fresnel_oracle(-z, tol)
    c = b.real
    upper = 0.5 * (c + math.sqrt(c * c + 4.0 * 746.0))

    def f_re(u: float) -> float:
        return cmath.exp(-u * u + b * u).real

    def f_im(u: float) -> float:
        return cmath.exp(-u * u + b * u).imag

    # full_output=1 silences the roundoff warning; the declared error is
    # checked explicitly below instead
    out_re = quad(f_re, 0.0, upper, epsabs=1e-15, epsrel=tol / 4, limit=400, full_output=1)
    out_im = quad(f_im, 0.0, upper, epsabs=1e-15, epsrel=tol / 4, limit=400, full_output=1)
    integral = complex(out_re[0], out_im[0])
    declared = math.hypot(out_re[1], out_im[1])
    if declared > tol * max(abs(integral), 1e-300):
        raise OracleError(
            f"quadrature declared error {declared:.3e} exceeds tol {tol:.3e} at z = {z!r}"
        )
    iz2 = 1j * z * z
    if iz2.real > _EXP_MAX:
        raise OverflowError(f"exp(i z^2) overflows at z = {z!r}")
    return cmath.exp(iz2) * integral / _SQRTPI


@dataclass(frozen=True)
class SectorBoundCert:
    """Certificate for the boundedness of F on arg z in [-pi/2, pi].

    c_upper is the proved constant; max_observed is the sampled maximum of
    |F| (the sharp value is about 1.17). Construction fails rather than
    recording a violated bound.
    """

    c_upper: float
    n_samples: int
    max_observed: float

    def __post_init__(self) -> None:
        if self.max_observed > self.c_upper:
            raise CertificationError(
                f"observed |F| = {self.max_observed} exceeds the bound {self.c_upper}"
            )


_C_UPPER = 1.59


def sector_bound_cert(n_samples: int) -> SectorBoundCert:
    """Sample |F| over the bounded sector and certify its bounds.

    Uses a deterministic boundary-inclusive polar grid (the maximum of |F|
    sits on the arg z = -pi/2 ray, so that ray must be in the sample)
    topped up with seeded uniform draws to reach n_samples. Also checks the
    two-sided growth estimate

        e^X - 1/2 <= |F(z)| <= e^X + 1/2,   X = |z|^2 sin(2 arg z),

    on a grid in the growth sector arg z in (-pi, -pi/2), restricted to
    radii where e^X is representable. Any violation raises
    CertificationError naming the point.
    """
    if n_samples < 1000:
        raise DomainError(f"n_samples must be >= 1000, got {n_samples}")

    points: list[complex] = []
    thetas = np.linspace(-0.5 * math.pi, math.pi, 25)
    radii = np.geomspace(0.05, 40.0, 40)
    for th in thetas:
        for rad in radii:
            points.append(rad * cmath.exp(1j * th))
    rng = np.random.default_rng(0)
    while len(points) < n_samples:
        th = rng.uniform(-0.5 * math.pi, math.pi)
        rad = rng.uniform(1e-3, 40.0)
        points.append(rad * cmath.exp(1j * th))
    points = points[:n_samples]

    max_observed = 0.0
    arg_max = 0j
    for zp in points:
        mag = abs(big_f(zp))
        if mag > max_observed:
            max_observed = mag
            arg_max = zp
    if max_observed > _C_UPPER:
        raise CertificationError(
            f"|F({arg_max!r})| = {max_observed} exceeds the sector bound {_C_UPPER}"
        )

    # growth sector: both angle endpoints are excluded (open sector) and the
    # per-angle radius is capped to keep e^X inside the double range; the
    # +-1/2 corridor is widened by a relative slack because once e^X exceeds
    # ~1e16 the corridor is narrower than one ulp of either side
    for th in np.linspace(-math.pi + 0.02, -0.5 * math.pi - 0.02, 21):
        growth = math.sin(2.0 * th)
        r_cap = min(40.0, math.sqrt(693.0 / max(growth, 1e-6)))
        for rad in np.geomspace(0.05, r_cap, 20):
            zp = rad * cmath.exp(1j * th)
            mag = abs(big_f(zp))
            envelope = math.exp(rad * rad * growth)
            if abs(mag - envelope) > 0.5 + 1e-10 * envelope:
                raise CertificationError(
                    f"growth bound violated at z = {zp!r}: |F| = {mag}, envelope = {envelope}"
                )

    return SectorBoundCert(c_upper=_C_UPPER, n_samples=len(points), max_observed=max_observed)
