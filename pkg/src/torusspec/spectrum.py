"""Exact spectrum of the Laplacian on the unit flat torus (R/Z)^2.

Eigenvalues are 4*pi^2*(m^2 + n^2) for (m, n) in N^2, so every distinct
eigenvalue is identified by the integer norm s = m^2 + n^2.  All counting
is done in integer arithmetic on s; the floating value 4*pi^2*s is derived
on demand, which removes boundary ambiguity when a query lambda equals an
eigenvalue exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import isqrt

FOUR_PI_SQ = 4.0 * math.pi**2

# Resource guard: the exhaustive lattice scan is O(cutoff_s).
MAX_CUTOFF_S = 10**7

# Absolute lambdas within this relative distance of an integer multiple of
# 4*pi^2 are snapped to that multiple before flooring.
SNAP_TOL = 1e-9


def multiplicity_of(m: int, n: int) -> int:
    """Dimension of the eigenspace attached to the lattice point (m, n)."""
    if m < 0 or n < 0:
        raise ValueError(f"lattice index must be in N^2, got ({m}, {n})")
    if m == 0 and n == 0:
        return 1
    if m == 0 or n == 0:
        return 2
    return 4


@dataclass(frozen=True)
class EigenvalueClass:
    """One distinct eigenvalue of the torus Laplacian.

    s is the integer norm m^2 + n^2; the eigenvalue itself is 4*pi^2*s.
    representatives lists the (m, n) in N^2 with m^2 + n^2 = s, ordered by
    decreasing m.  first_index/last_index locate the eigenvalue in the
    multiplicity-counted non-decreasing ordering (1-based).
    """

    s: int
    representatives: tuple[tuple[int, int], ...]
    multiplicity: int
    first_index: int
    last_index: int

    @property
    def value(self) -> float:
        return FOUR_PI_SQ * self.s

    def __post_init__(self):
        assert self.multiplicity == sum(
            multiplicity_of(m, n) for m, n in self.representatives
        )
        assert self.last_index - self.first_index + 1 == self.multiplicity


@dataclass(frozen=True)
class SpectrumTable:
    """Ordered distinct eigenvalues up to norm cutoff_s, with cumulative indices."""

    classes: tuple[EigenvalueClass, ...]
    cutoff_s: int

    def class_for_s(self, s: int) -> EigenvalueClass:
        for c in self.classes:
            if c.s == s:
                return c
        raise KeyError(f"s={s} is not an eigenvalue norm <= {self.cutoff_s}")

    def class_for_index(self, k: int) -> EigenvalueClass:
        """The distinct eigenvalue whose index range contains k."""
        if k < 1:
            raise ValueError("eigenvalue index must be >= 1")
        for c in self.classes:
            if c.first_index <= k <= c.last_index:
                return c
        raise IndexError(f"index {k} beyond table (cutoff_s={self.cutoff_s})")

    @property
    def total_count(self) -> int:
        return self.classes[-1].last_index if self.classes else 0

    def to_csv(self) -> str:
        """Stable CSV rendering: s, representatives, multiplicity, cumulative."""
        lines = ["s,representatives,multiplicity,cumulative"]
        for c in self.classes:
            reps = ";".join(f"{m},{n}" for m, n in c.representatives)
            lines.append(f"{c.s},{reps},{c.multiplicity},{c.last_index}")
        return "\n".join(lines) + "\n"


def _representatives(s: int) -> tuple[tuple[int, int], ...]:
    reps = []
    for m in range(isqrt(s), -1, -1):
        r = s - m * m
        n = isqrt(r)
        if n * n == r:
            reps.append((m, n))
    return tuple(reps)


def build_spectrum_table(cutoff_s: int) -> SpectrumTable:
    """All distinct eigenvalues with norm s <= cutoff_s, by exhaustive scan."""
    if cutoff_s < 0:
        raise ValueError("cutoff_s must be >= 0")
    if cutoff_s > MAX_CUTOFF_S:
        raise ValueError(f"cutoff_s={cutoff_s} exceeds safety bound {MAX_CUTOFF_S}")
    by_s: dict[int, list[tuple[int, int]]] = {}
    for m in range(isqrt(cutoff_s) + 1):
        for n in range(isqrt(cutoff_s - m * m) + 1):
            by_s.setdefault(m * m + n * n, []).append((m, n))
    classes = []
    cum = 0
    for s in sorted(by_s):
        reps = tuple(sorted(by_s[s], key=lambda p: -p[0]))
        mult = sum(multiplicity_of(m, n) for m, n in reps)
        classes.append(
            EigenvalueClass(
                s=s,
                representatives=reps,
                multiplicity=mult,
                first_index=cum + 1,
                last_index=cum + mult,
            )
        )
        cum += mult
    return SpectrumTable(classes=tuple(classes), cutoff_s=cutoff_s)


def to_s_units(lam: float) -> float:
    """Convert an absolute lambda to s-units, snapping near-integers."""
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    t = lam / FOUR_PI_SQ
    nearest = round(t)
    if abs(t - nearest) <= SNAP_TOL * max(1.0, abs(t)):
        return float(nearest)
    return t


def lattice_count_s(t: float) -> int:
    """#{(m, n) in N^2 : m^2 + n^2 <= t}, t in s-units."""
    if t < 0:
        raise ValueError("t must be >= 0")
    cap = math.floor(t)
    return sum(isqrt(cap - m * m) + 1 for m in range(isqrt(cap) + 1))


def lattice_count(lam: float) -> int:
    """#{(m, n) in N^2 : 4*pi^2*(m^2 + n^2) <= lam}."""
    return lattice_count_s(to_s_units(lam))


def counting_function_exact_s(t: float) -> int:
    """Number of eigenvalues (with multiplicity) <= 4*pi^2*t, exactly."""
    n = lattice_count_s(t)
    return 4 * n - 4 * isqrt(math.floor(t)) - 3


def counting_function_exact(lam: float) -> int:
    return counting_function_exact_s(to_s_units(lam))


def weyl_lower_bound(lam: float) -> float:
    """Explicit lower bound lam/(4*pi) - 2*sqrt(lam)/pi - 3 for the counting function."""
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    return lam / (4.0 * math.pi) - 2.0 * math.sqrt(lam) / math.pi - 3.0


def lambda_k(k: int, table: SpectrumTable | None = None) -> tuple[float, EigenvalueClass]:
    """The k-th eigenvalue (with multiplicity) and its class; auto-extends the table."""
    if k < 1:
        raise ValueError("k must be >= 1")
    cutoff = table.cutoff_s if table is not None else 16
    while True:
        t = table if table is not None else build_spectrum_table(cutoff)
        if t.total_count >= k:
            cls = t.class_for_index(k)
            return cls.value, cls
        table = None
        cutoff = max(2 * cutoff, 16)


def nu_of(cls: EigenvalueClass) -> int:
    """Minimal index k with lambda_k equal to this class's eigenvalue."""
    return cls.first_index
