import math

import mpmath
import pytest

from torusspec.bessel import (
    BesselZero,
    bessel_j0,
    bessel_j1,
    faber_krahn_constant,
    j01,
    ratio_bound,
)

mpmath.mp.dps = 50


def bisect_j01_oracle() -> float:
    """Independent oracle: bisection on mpmath's 50-digit J0."""
    a, b = mpmath.mpf(2), mpmath.mpf(3)
    for _ in range(200):
        mid = (a + b) / 2
        if mpmath.besselj(0, mid) > 0:
            a = mid
        else:
            b = mid
    return float((a + b) / 2)


def test_j0_at_zero():
    assert bessel_j0(0.0) == 1.0


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0, 2.404825557695773, 5.0, 10.0, 20.0, 29.9])
def test_j0_against_mpmath(x):
    # cancellation in the alternating series costs ~eps * sum(|terms|) = eps * I0(x)
    tol = max(1e-14, 1e-15 * float(mpmath.besseli(0, x)))
    assert bessel_j0(x) == pytest.approx(float(mpmath.besselj(0, x)), abs=tol)
    assert bessel_j0(-x) == bessel_j0(x)


@pytest.mark.parametrize("x", [0.1, 1.0, 3.83170597020751, 7.0, 15.0, 29.9])
def test_j1_against_mpmath(x):
    tol = max(1e-14, 1e-15 * float(mpmath.besseli(1, x)))
    assert bessel_j1(x) == pytest.approx(float(mpmath.besselj(1, x)), abs=tol)


def test_j0_near_first_zero():
    assert abs(bessel_j0(2.404825557695773)) < 1e-10


def test_series_range_guard():
    with pytest.raises(ValueError):
        bessel_j0(30.1)
    with pytest.raises(ValueError):
        bessel_j1(-31.0)


def test_j01_value():
    z = j01()
    assert isinstance(z, BesselZero)
    assert 2.40 < z.value < 2.41
    assert z.residual <= z.tolerance
    assert abs(z.value - bisect_j01_oracle()) < 1e-12
    assert abs(z.value - 2.404825557695773) < 1e-12


def test_j01_newton_fixed_point():
    z = j01().value
    step = bessel_j0(z) / (-bessel_j1(z))
    assert abs(step) < 1e-12


def test_j01_deterministic():
    a = j01().value
    j01.cache_clear()
    b = j01().value
    assert a == b


def test_constants():
    z = j01().value
    fk = faber_krahn_constant()
    assert fk == pytest.approx(math.pi * z * z)
    assert fk == pytest.approx(18.168, abs=5e-4)
    assert round(z * z / (4 * math.pi), 4) == 0.4602
    assert round(fk / (4 * math.pi**2), 4) == 0.4602
    assert round(ratio_bound(), 4) == 0.4602
    # algebraic identity between the two published constants
    assert fk == pytest.approx(4 * math.pi**2 * ratio_bound())
