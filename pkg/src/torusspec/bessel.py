"""Bessel function J0, its first positive zero, and derived constants.

The zero j_{0,1} is computed from scratch (power series + bisection +
Newton polish) rather than taken from a table, so that downstream checks
against published 4-decimal constants genuinely validate the numerics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

SERIES_RANGE = 30.0
SERIES_EPS = 1e-16
ZERO_TOL = 1e-12
BISECTION_WIDTH = 1e-14


def _alternating_series(x: float, first_term: float, ratio_num) -> float:
    """Kahan-compensated sum of an alternating series with term ratio ratio_num(k)."""
    term = first_term
    total = 0.0
    comp = 0.0
    k = 0
    while True:
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        k += 1
        term *= ratio_num(k)
        if abs(term) <= SERIES_EPS * (1.0 + abs(total)):
            return total
        if k > 200:  # series for |x| <= 30 converges long before this
            raise RuntimeError("Bessel series failed to converge")


def bessel_j0(x: float) -> float:
    """J0(x) by its power series sum_k (-1)^k (x/2)^{2k} / (k!)^2."""
    if abs(x) > SERIES_RANGE:
        raise ValueError(f"|x| must be <= {SERIES_RANGE}, got {x}")
    q = -0.25 * x * x
    return _alternating_series(x, 1.0, lambda k: q / (k * k))


def bessel_j1(x: float) -> float:
    """J1(x) by its power series; J0'(x) = -J1(x)."""
    if abs(x) > SERIES_RANGE:
        raise ValueError(f"|x| must be <= {SERIES_RANGE}, got {x}")
    q = -0.25 * x * x
    return _alternating_series(x, 0.5 * x, lambda k: q / (k * (k + 1)))


@dataclass(frozen=True)
class BesselZero:
    value: float
    residual: float
    tolerance: float

    def __post_init__(self):
        assert self.residual <= self.tolerance <= ZERO_TOL
        assert 2.40 < self.value < 2.41


@lru_cache(maxsize=1)
def j01() -> BesselZero:
    """First positive zero of J0, bracketed in [2, 3]; deterministic."""
    a, b = 2.0, 3.0
    fa, fb = bessel_j0(a), bessel_j0(b)
    if not (fa > 0.0 > fb):
        raise RuntimeError("J0 does not change sign on [2, 3]; series is broken")
    while b - a > BISECTION_WIDTH:
        mid = 0.5 * (a + b)
        if bessel_j0(mid) > 0.0:
            a = mid
        else:
            b = mid
    x = 0.5 * (a + b)
    for _ in range(3):  # Newton polish; converges immediately from the bisection root
        x -= bessel_j0(x) / (-bessel_j1(x))
    return BesselZero(value=x, residual=abs(bessel_j0(x)), tolerance=ZERO_TOL)


@lru_cache(maxsize=1)
def faber_krahn_constant() -> float:
    """pi * j01^2: the scale-invariant product lambda_1(D)*area(D) for a planar disk."""
    z = j01().value
    return math.pi * z * z


def ratio_bound() -> float:
    """j01^2 / (4*pi): the exclusion bound for the eigenvalue/index ratio test."""
    return faber_krahn_constant() / (4.0 * math.pi**2)
