"""Fresnel integral, bounded companion, oracle and sector certification."""

import cmath
import math

import numpy as np
import pytest

from shadowhp.errors import CertificationError, DomainError
from shadowhp.specfun import big_f, fresnel_fr, fresnel_oracle, sector_bound_cert


def test_fr_at_zero():
    assert fresnel_fr(0.0) == 0.5 + 0j


def test_fr_symmetry_point():
    z = 1.3 + 0.4j
    assert abs(fresnel_fr(-z) + fresnel_fr(z) - 1.0) <= 1e-13


def test_fr_matches_oracle_at_two():
    a = fresnel_fr(2.0)
    b = fresnel_oracle(2.0, 1e-13)
    assert abs(a - b) <= 1e-13 * abs(b)


def test_big_f_at_zero():
    assert big_f(0.0) == 0.5 + 0j


def test_big_f_symmetry_point():
    z = 0.7 - 0.2j
    lhs = big_f(-z) + big_f(z) - cmath.exp(-1j * z * z)
    assert abs(lhs) <= 1e-13


def test_big_f_consistent_with_fr():
    rng = np.random.default_rng(21)
    for _ in range(300):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        lhs = big_f(z)
        rhs = cmath.exp(-1j * z * z) * fresnel_fr(z)
        assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1e-300)


def test_cauchy_riemann_residual():
    # entirety proxy: df/dx + i df/dy = 0, measured against the local
    # derivative scale (|Fr| reaches e^{2|xy|} inside the disk, so an
    # absolute gate would only measure float cancellation)
    rng = np.random.default_rng(22)
    h = 1e-5
    for _ in range(100):
        rad = 5.0 * math.sqrt(rng.uniform())
        z = rad * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
        dx = (fresnel_fr(z + h) - fresnel_fr(z - h)) / (2 * h)
        dy = (fresnel_fr(z + 1j * h) - fresnel_fr(z - 1j * h)) / (2 * h)
        assert abs(dx + 1j * dy) <= 1e-6 * max(1.0, abs(dx))


def test_ode_residual():
    # F'(z) = e^{i 3pi/4}/sqrt(pi) - 2 i z F(z)
    rng = np.random.default_rng(23)
    h = 1e-5
    const = cmath.exp(0.75j * math.pi) / math.sqrt(math.pi)
    for _ in range(100):
        theta = rng.uniform(-0.5 * math.pi, math.pi)
        z = rng.uniform(0.05, 10.0) * cmath.exp(1j * theta)
        fd = (big_f(z + h) - big_f(z - h)) / (2 * h)
        assert abs(fd - (const - 2j * z * big_f(z))) <= 1e-7


def test_fr_overflow_raises():
    with pytest.raises(OverflowError):
        fresnel_fr(complex(-21.0, 21.0))


def test_big_f_growth_sector_overflow_raises():
    with pytest.raises(OverflowError):
        big_f(40.0 * cmath.exp(-0.75j * math.pi))


def test_big_f_growth_sector_value():
    z = 2.0 * cmath.exp(-0.75j * math.pi)
    mag = abs(big_f(z))
    envelope = math.exp(4.0)
    assert envelope - 0.5 <= mag <= envelope + 0.5


def test_oracle_at_zero():
    assert abs(fresnel_oracle(0.0, 1e-13) - 0.5) <= 1e-13


def test_oracle_symmetry():
    a = fresnel_oracle(1 + 1j, 1e-13)
    b = fresnel_oracle(-1 - 1j, 1e-13)
    assert abs(a + b - 1.0) <= 1e-12


def test_oracle_rejects_too_tight_tolerance():
    with pytest.raises(DomainError):
        fresnel_oracle(1.0, 1e-15)


def test_non_finite_input_rejected():
    with pytest.raises(DomainError):
        fresnel_fr(complex(math.nan, 0.0))
    with pytest.raises(DomainError):
        big_f(complex(0.0, math.inf))


def test_sector_cert_requires_min_samples():
    with pytest.raises(DomainError):
        sector_bound_cert(999)


def test_sector_cert_passes_and_sees_the_true_maximum():
    cert = sector_bound_cert(10000)
    assert cert.n_samples == 10000
    assert cert.max_observed <= cert.c_upper == 1.59
    assert 1.10 <= cert.max_observed <= 1.25


def test_sector_cert_dataclass_enforces_invariant():
    from shadowhp.specfun import SectorBoundCert

    with pytest.raises(CertificationError):
        SectorBoundCert(c_upper=1.59, n_samples=1000, max_observed=1.60)
