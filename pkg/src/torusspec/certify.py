"""Finite exclusion pipeline certifying the Courant-sharp eigenvalues.

Large indices are excluded by comparing an explicit upper bound on the
k-th eigenvalue against the area/Bessel lower bound forced by k nodal
domains; the finitely many remaining candidates are excluded by an exact
rational ratio test; the two surviving eigenvalues are confirmed
Courant-sharp by explicit nodal witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import nodal
from .bessel import faber_krahn_constant, j01, ratio_bound
from .spectrum import SpectrumTable, build_spectrum_table

THRESHOLD_INDEX = 50  # smallest integer above the explicit threshold


class Verdict(Enum):
    COURANT_SHARP_CONFIRMED = "CourantSharpConfirmed"
    EXCLUDED_BY_THRESHOLD = "ExcludedByThreshold"
    EXCLUDED_BY_RATIO = "ExcludedByRatio"
    REQUIRES_NODAL_CHECK = "RequiresNodalCheck"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CertificationVerdict:
    k: int
    lam_over_4pi2: int
    nu: int
    verdict: Verdict
    ratio: Fraction | None = None
    bound_used: float | None = None
    witness_mu: int | None = None


@dataclass(frozen=True)
class CertificationReport:
    verdicts: tuple[CertificationVerdict, ...]
    threshold_k: float
    ratio_table: tuple[tuple[int, Fraction], ...]
    courant_sharp_indices: tuple[int, ...]


def pleijel_lower_bound(k: int) -> float:
    """Minimum eigenvalue admitting an eigenfunction with k nodal domains, k >= 4.

    With k >= 4 domains on the unit-area torus, some domain has area <= 1/k
    <= 1/pi, and the small-area Faber-Krahn inequality forces
    lambda >= pi*j01^2*k.
    """
    if k < 4:
        raise ValueError(
            f"k={k}: the nodal-domain area bound requires k >= 4 "
            "(smallest domain area must be <= 1/pi)"
        )
    return faber_krahn_constant() * k

def upper_bound_lambda_k(k: int) -> float:
    """Explicit upper bound (4 + 2*sqrt(4 + pi*(k+3)))^2 on the k-th eigenvalue."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return (4.0 + 2.0 * math.sqrt(4.0 + math.pi * (k + 3))) ** 2


def threshold_k() -> float:
    """Index beyond which the upper bound drops below the nodal lower bound.

    Solves (4 + 2*sqrt(4 + pi*(k+3)))^2 = pi*j01^2*k for k in closed form.
    """
    z = j01().value
    z2 = z * z
    num = (4.0 * z + 2.0 * math.sqrt(4.0 * z2 + 3.0 * math.pi * (z2 - 4.0))) ** 2
    return num / (math.pi * (z2 - 4.0) ** 2)


def candidate_indices(table: SpectrumTable) -> list[int]:
    """First indices of distinct eigenvalues with 4 <= nu < 50, from the table."""
    if table.cutoff_s < 17 or table.total_count < THRESHOLD_INDEX:
        raise ValueError("spectrum table must cover s <= 17 (indices through 50)")
    return [
        c.first_index
        for c in table.classes
        if 4 <= c.first_index < THRESHOLD_INDEX
    ]


def ratio(k: int, table: SpectrumTable | None = None) -> Fraction:
    """lambda_k / (4*k*pi^2) as the exact rational s/k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if table is None:
        table = build_spectrum_table(17)
    cls = table.class_for_index(k)
    return Fraction(cls.s, k)


def _ratio_verdict(k: int, table: SpectrumTable) -> CertificationVerdict:
    r = ratio(k, table)
    bound = ratio_bound()
    rv = float(r)
    cls = table.class_for_index(k)
    if rv < bound:
        v = Verdict.EXCLUDED_BY_RATIO
    elif rv == bound:
        v = Verdict.INCONCLUSIVE
    else:
        v = Verdict.REQUIRES_NODAL_CHECK
    return CertificationVerdict(
        k=k, lam_over_4pi2=cls.s, nu=cls.first_index, verdict=v, ratio=r, bound_used=bound
    )


def certify_all(witness_grid: int = 64) -> CertificationReport:
    """Classify every distinct eigenvalue with nu <= 50 and confirm the sharp set.

    Eigenvalues with nu >= 50 are excluded wholesale by the threshold
    comparison; 4 <= nu < 50 by the ratio test; nu in {1, 2} are confirmed
    by nodal witnesses (the constant function, and a single sine mode).
    """
    table = build_spectrum_table(17)
    thr = threshold_k()
    if not (THRESHOLD_INDEX > thr and upper_bound_lambda_k(THRESHOLD_INDEX) < pleijel_lower_bound(THRESHOLD_INDEX)):
        raise RuntimeError("threshold exclusion failed at its boundary index")

    verdicts: list[CertificationVerdict] = []
    sharp: list[int] = []
    candidates = candidate_indices(table)
    ratio_rows = []
    for cls in table.classes:
        nu = cls.first_index
        if nu >= THRESHOLD_INDEX:
            verdicts.append(
                CertificationVerdict(
                    k=nu,
                    lam_over_4pi2=cls.s,
                    nu=nu,
                    verdict=Verdict.EXCLUDED_BY_THRESHOLD,
                    bound_used=thr,
                )
            )
        elif nu >= 4:
            v = _ratio_verdict(nu, table)
            verdicts.append(v)
            ratio_rows.append((nu, v.ratio))
        else:
            # nu in {1, 2}: confirm with an explicit eigenfunction witness
            if cls.s == 0:
                witness = nodal.constant_eigenfunction()
            else:
                witness = nodal.single_mode(1, 0, sin_coeff=1.0)
            check = nodal.check_courant(witness, table, grid_size=witness_grid)
            if check.courant_sharp:
                verdict = Verdict.COURANT_SHARP_CONFIRMED
                sharp.extend(range(cls.first_index, cls.last_index + 1))
            else:
                verdict = Verdict.REQUIRES_NODAL_CHECK
            verdicts.append(
                CertificationVerdict(
                    k=nu,
                    lam_over_4pi2=cls.s,
                    nu=nu,
                    verdict=verdict,
                    witness_mu=check.mu,
                )
            )
    assert candidates == [v.k for v in verdicts if v.verdict in (Verdict.EXCLUDED_BY_RATIO, Verdict.INCONCLUSIVE, Verdict.REQUIRES_NODAL_CHECK) and v.nu >= 4]
    return CertificationReport(
        verdicts=tuple(verdicts),
        threshold_k=thr,
        ratio_table=tuple(ratio_rows),
        courant_sharp_indices=tuple(sorted(sharp)),
    )


def report_to_dict(report: CertificationReport) -> dict:
    """JSON-ready rendering with stable key order and 4-decimal ratios."""
    return {
        "threshold_k": round(report.threshold_k, 4),
        "ratio_bound": round(ratio_bound(), 4),
        "ratio_table": [
            {"k": k, "ratio_exact": f"{r.numerator}/{r.denominator}", "ratio": round(float(r), 4)}
            for k, r in report.ratio_table
        ],
        "verdicts": [
            {
                "k": v.k,
                "s": v.lam_over_4pi2,
                "nu": v.nu,
                "verdict": v.verdict.value,
                **({"ratio": round(float(v.ratio), 4)} if v.ratio is not None else {}),
                **({"witness_mu": v.witness_mu} if v.witness_mu is not None else {}),
            }
            for v in report.verdicts
        ],
        "courant_sharp_indices": list(report.courant_sharp_indices),
    }


def report_to_table(report: CertificationReport) -> str:
    """Human-readable summary mirroring the ratio-table layout."""
    ks = [k for k, _ in report.ratio_table]
    ratios = [f"{float(r):.4f}" for _, r in report.ratio_table]
    lines = [
        "k     | " + " | ".join(f"{k:6d}" for k in ks),
        "ratio | " + " | ".join(f"{r:>6s}" for r in ratios),
        f"ratio bound : {ratio_bound():.4f}",
        f"threshold k : {report.threshold_k:.4f}",
        "courant-sharp indices: "
        + "{" + ", ".join(str(i) for i in report.courant_sharp_indices) + "}",
    ]
    return "\n".join(lines) + "\n"
