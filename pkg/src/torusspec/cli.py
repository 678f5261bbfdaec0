"""Command-line interface: spectrum, count, certify, nodal, report.

Output is machine-readable (JSON or CSV) and byte-identical across runs
for identical flags.  Exit codes: 0 success/verified, 1 verification
failure, 2 usage error.  Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import certify, nodal, spectrum
from .bessel import faber_krahn_constant, j01, ratio_bound

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def _sig10(v: float) -> float:
    return float(f"{v:.10g}")


def _constants() -> dict:
    return {
        "j01": _sig10(j01().value),
        "pi_j01_sq": _sig10(faber_krahn_constant()),
        "ratio_bound": _sig10(ratio_bound()),
    }


def _envelope(command: str, parameters: dict, results) -> str:
    return json.dumps(
        {
            "command": command,
            "parameters": parameters,
            "results": results,
            "constants": _constants(),
        },
        indent=2,
    )


def parse_eigenfunction_spec(spec: str) -> nodal.Eigenfunction:
    """Grammar: 'mode:s=<s>;terms=m,n,c,d[;m,n,c,d...]' or 'random:s=<s>;seed=<u64>'."""
    try:
        kind, rest = spec.split(":", 1)
        fields = dict(part.split("=", 1) for part in rest.split(";") if "=" in part)
        s = int(fields["s"])
        if kind == "random":
            return nodal.random_eigenfunction(s, int(fields["seed"]))
        if kind == "mode":
            raw = [part for part in rest.split(";") if not part.startswith("s=")]
            terms = []
            # terms=... starts the comma list; subsequent ';'-separated chunks continue it
            joined = ";".join(raw)
            if not joined.startswith("terms="):
                raise ValueError("missing terms=")
            for chunk in joined[len("terms="):].split(";"):
                m, n, c, d = chunk.split(",")
                terms.append((int(m), int(n), float(c), float(d)))
            return nodal.Eigenfunction(s=s, terms=tuple(terms))
        raise ValueError(f"unknown spec kind {kind!r}")
    except (KeyError, IndexError) as exc:
        raise ValueError(f"malformed eigenfunction spec {spec!r}: {exc}") from exc


def cmd_spectrum(args) -> int:
    table = spectrum.build_spectrum_table(args.cutoff_s)
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        rows = [
            {
                "s": c.s,
                "representatives": [list(p) for p in c.representatives],
                "multiplicity": c.multiplicity,
                "first_index": c.first_index,
                "cumulative": c.last_index,
            }
            for c in table.classes
        ]
        print(_envelope("spectrum", {"cutoff_s": args.cutoff_s}, rows))
    return EXIT_OK


def cmd_count(args) -> int:
    t = args.s_lambda
    lam = spectrum.FOUR_PI_SQ * t
    results = {
        "s_lambda": t,
        "counting_function": spectrum.counting_function_exact_s(t),
        "lattice_count": spectrum.lattice_count_s(t),
        "weyl_lower_bound": _sig10(spectrum.weyl_lower_bound(lam)),
        "lattice_lower_bound": _sig10(lam / (16.0 * math.pi)),
    }
    print(_envelope("count", {"s_lambda": t}, results))
    return EXIT_OK


def cmd_certify(args) -> int:
    report = certify.certify_all()
    if args.format == "table":
        sys.stdout.write(certify.report_to_table(report))
    else:
        print(_envelope("certify", {}, certify.report_to_dict(report)))
    ok = report.courant_sharp_indices == (1, 2, 3, 4, 5)
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


def cmd_nodal(args) -> int:
    u = parse_eigenfunction_spec(args.spec)
    if args.format == "csv":
        grid = nodal.sign_grid(u, args.grid_size, args.zero_tol)
        for row in grid:
            sys.stdout.write(",".join(str(int(v)) for v in row) + "\n")
        return EXIT_OK
    dec = nodal.count_nodal_domains_adaptive(u, args.grid_size, args.zero_tol)
    results = {
        "s": u.s,
        "grid_size": dec.grid_size,
        "mu": dec.mu,
        "zero_cell_count": dec.zero_cell_count,
        "domains": [
            {
                "cell_count": d.cell_count,
                "area": _sig10(d.area),
                "boundary_edge_count": d.boundary_edge_count,
                "perimeter_estimate": _sig10(d.perimeter_estimate),
                "sign": d.sign,
            }
            for d in dec.domains
        ],
    }
    failed = False
    table = spectrum.build_spectrum_table(max(17, u.s))
    if args.check_courant:
        c = nodal.check_courant(u, table, grid_size=args.grid_size)
        results["courant"] = {
            "mu": c.mu,
            "nu": c.nu,
            "last_index": c.last_index,
            "satisfied": c.satisfied,
            "courant_sharp": c.courant_sharp,
        }
        failed = failed or not c.satisfied
    lam = spectrum.FOUR_PI_SQ * u.s
    if args.check_fk:
        checks = nodal.check_faber_krahn(dec, lam, args.geo_tol)
        results["faber_krahn"] = [
            {
                "domain_id": c.domain_id,
                "in_hypothesis": c.in_hypothesis,
                "product": _sig10(c.lhs),
                "passes": c.passes,
            }
            for c in checks
        ]
        failed = failed or any(c.in_hypothesis and not c.passes for c in checks)
    if args.check_iso:
        checks = nodal.check_isoperimetric(dec, args.geo_tol)
        results["isoperimetric"] = [
            {
                "domain_id": c.domain_id,
                "in_hypothesis": c.in_hypothesis,
                "lhs": _sig10(c.lhs),
                "rhs": _sig10(c.rhs),
                "passes": c.passes,
            }
            for c in checks
        ]
        failed = failed or any(c.in_hypothesis and not c.passes for c in checks)
    print(
        _envelope(
            "nodal",
            {"spec": args.spec, "grid_size": args.grid_size},
            results,
        )
    )
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def cmd_report(args) -> int:
    table = spectrum.build_spectrum_table(17)
    report = certify.certify_all()
    results = {
        "spectrum": [
            {"s": c.s, "multiplicity": c.multiplicity, "cumulative": c.last_index}
            for c in table.classes
        ],
        "certification": certify.report_to_dict(report),
    }
    if args.sweep_seeds > 0:
        s_values = [int(v) for v in args.sweep_s.split(",")]
        violations = []
        for s in s_values:
            for seed in range(args.sweep_seeds):
                u = nodal.random_eigenfunction(s, seed)
                c = nodal.check_courant(u, table, grid_size=args.grid_size)
                if not c.satisfied or (c.nu >= 4 and c.courant_sharp):
                    violations.append({"s": s, "seed": seed, "mu": c.mu, "nu": c.nu})
        results["sweep"] = {
            "seeds": args.sweep_seeds,
            "s_values": s_values,
            "violations": violations,
        }
        if violations:
            print(_envelope("report", vars(args), results))
            return EXIT_VERIFICATION_FAILED
    print(
        _envelope(
            "report",
            {
                "sweep_seeds": args.sweep_seeds,
                "sweep_s": args.sweep_s,
                "grid_size": args.grid_size,
            },
            results,
        )
    )
    return EXIT_OK if report.courant_sharp_indices == (1, 2, 3, 4, 5) else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="torusspec",
        description="Flat-torus Laplacian spectrum, nodal domains, and Courant-sharp certification",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="distinct eigenvalues up to a norm cutoff")
    sp.add_argument("--cutoff-s", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_spectrum)

    cn = sub.add_parser("count", help="counting function and bounds at lambda = 4*pi^2*s")
    cn.add_argument("--s-lambda", type=float, required=True)
    cn.set_defaults(func=cmd_count)

    ce = sub.add_parser("certify", help="run the Courant-sharp exclusion pipeline")
    ce.add_argument("--format", choices=("json", "table"), default="json")
    ce.set_defaults(func=cmd_certify)

    nd = sub.add_parser("nodal", help="count nodal domains of an explicit eigenfunction")
    nd.add_argument("spec", help="mode:s=<s>;terms=m,n,c,d[;...] or random:s=<s>;seed=<u64>")
    nd.add_argument("--grid-size", type=int, default=nodal.DEFAULT_GRID)
    nd.add_argument("--zero-tol", type=float, default=nodal.DEFAULT_ZERO_TOL)
    nd.add_argument("--geo-tol", type=float, default=nodal.DEFAULT_GEO_TOL)
    nd.add_argument("--check-courant", action="store_true")
    nd.add_argument("--check-fk", action="store_true")
    nd.add_argument("--check-iso", action="store_true")
    nd.add_argument("--format", choices=("json", "csv"), default="json")
    nd.set_defaults(func=cmd_nodal)

    rp = sub.add_parser("report", help="spectrum + certification + optional random sweep")
    rp.add_argument("--sweep-seeds", type=int, default=0)
    rp.add_argument("--sweep-s", default="1,2,4,5,8,9,10,13,16,17")
    rp.add_argument("--grid-size", type=int, default=nodal.DEFAULT_GRID)
    rp.set_defaults(func=cmd_report)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except nodal.RefinementError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
