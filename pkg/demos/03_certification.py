"""Run the full Courant-sharp certification pipeline and print the evidence.

Three mechanisms combine: indices >= 50 are excluded because an explicit
eigenvalue upper bound falls below the nodal-domain lower bound; the eight
remaining candidate indices are excluded by an exact rational ratio test;
the first two distinct eigenvalues are confirmed sharp by nodal witnesses.
"""

from torusspec import certify_all, pleijel_lower_bound, threshold_k, upper_bound_lambda_k
from torusspec.certify import report_to_table

print(f"exclusion threshold index: {threshold_k():.4f}\n")

print("bound comparison around the threshold:")
for k in (48, 49, 50, 51, 60):
    up = upper_bound_lambda_k(k)
    lo = pleijel_lower_bound(k)
    tag = "excluded" if up < lo else "not excluded"
    print(f"  k={k}: upper {up:8.2f} vs lower {lo:8.2f}  -> {tag}")

report = certify_all()
print()
print(report_to_table(report))

print("per-eigenvalue verdicts:")
for v in report.verdicts:
    extra = f" ratio={float(v.ratio):.4f}" if v.ratio is not None else ""
    extra += f" witness_mu={v.witness_mu}" if v.witness_mu is not None else ""
    print(f"  k={v.k:3d} (s={v.lam_over_4pi2:2d}): {v.verdict.value}{extra}")
