"""Command-line interface.

Exit codes: 0 success, 2 invalid arguments, 3 mathematical mismatch,
4 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .contour import NoConvergence, PhiSpec, contour_integral_detailed, random_y
from .identities import all_checks
from .laurent import LaurentQuotient
from .macdonald_op import apply_E, solve_P
from .onerow import PoleProximity, corollary_P, residue_sum, theorem2_constant
from .qfield import eigenvalue_c
from .weyl import orbit_monomial

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_NOCONV = 0, 2, 3, 4
CONTOUR_TOL = 1e-8


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _poly_payload(P: LaurentQuotient, lam, n, k, method) -> dict:
    return {"lambda": lam, "n": n, "k": k, "method": method, **P.to_json()}


def cmd_poly(args) -> int:
    lam, n, k = args.lam, args.n, args.k
    polys = {}
    if args.method in ("corollary", "both"):
        polys["corollary"] = corollary_P(lam, n, k)
    if args.method in ("eigensolve", "both"):
        polys["eigensolve"] = solve_P((lam,), n, k)
    P = polys.get("corollary", polys.get("eigensolve"))
    if args.format == "json":
        print(_dump(_poly_payload(P, lam, n, k, args.method)))
    else:
        print(P.pretty())
    if args.method == "both" and polys["corollary"] != polys["eigensolve"]:
        print("corollary and eigensolve results differ", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_eigencheck(args) -> int:
    lam, n, k = args.lam, args.n, args.k
    P = corollary_P(lam, n, k)
    if args.perturb:
        P = P + LaurentQuotient(orbit_monomial((lam + 1,), n))
    c = eigenvalue_c((lam,), n, k)
    diff = (apply_E(P, n, k) - P.scale(c)).numerator
    first = None
    if diff:
        e, coeff = next(iter(diff.terms().items()))
        first = {"y_exp": list(e), "coeff": coeff.to_json()}
    print(_dump({
        "lambda": lam, "n": n, "k": k, "perturbed": bool(args.perturb),
        "eigenvalue": c.to_json(), "equal": first is None, "first_difference": first,
    }))
    return EXIT_OK if first is None else EXIT_MISMATCH


def cmd_contour(args) -> int:
    lam, n, k, qv = args.lam, args.n, args.k, args.q
    rng = np.random.default_rng(args.seed)
    y = random_y(rng, n, k, qv)
    spec = PhiSpec(lam, n, k, qv, y)
    if args.radius is not None and args.radius <= spec.max_pole:
        print(f"error: radius {args.radius} does not enclose all poles "
              f"(max modulus {spec.max_pole:.6g})", file=sys.stderr)
        return EXIT_USAGE
    try:
        res = contour_integral_detailed(spec, args.radius, args.nodes)
    except NoConvergence as exc:
        print(_dump({"error": str(exc), "last_values": [[v.real, v.imag] for v in exc.last_values]}))
        return EXIT_NOCONV
    poly_val = theorem2_constant(lam, n, k).evaluate_q(qv) * corollary_P(lam, n, k).eval_numeric(qv, y)
    try:
        res_val = residue_sum(lam, n, k, qv, y)
    except PoleProximity as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    scale = max(abs(res.value), 1e-300)
    r_poly = abs(res.value - poly_val) / scale
    r_res = abs(res.value - res_val) / scale
    ok = r_poly < CONTOUR_TOL and r_res < CONTOUR_TOL
    print(_dump({
        "lambda": lam, "n": n, "k": k, "q": qv, "seed": args.seed,
        "y": [[a.real, a.imag] for a in y],
        "value_re": res.value.real, "value_im": res.value.imag,
        "nodes_used": res.nodes, "radius": res.radius,
        "residual_vs_polynomial": r_poly, "residual_vs_residues": r_res,
        "pass": ok,
    }))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify_identities(args) -> int:
    reports = all_checks(args.n, args.k, args.trials, args.seed, args.lambda_max)
    print(_dump([r.to_dict() for r in reports]))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def _nonneg(s):
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {s}")
    return v


def _pos(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _unit_q(s):
    v = float(s)
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError(f"q must satisfy 0 < q < 1, got {s}")
    return v


def _posfloat(s):
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmacdonald", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--lambda", dest="lam", type=_nonneg, required=True)
        sp.add_argument("--n", type=_pos, required=True)
        sp.add_argument("--k", type=_pos, required=True)

    sp = sub.add_parser("poly", help="one-row Macdonald polynomial P_(lambda,0,...,0)")
    common(sp)
    sp.add_argument("--method", choices=("corollary", "eigensolve", "both"), default="corollary")
    sp.add_argument("--format", choices=("json", "pretty"), default="json")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("eigencheck", help="exact check of E P = c P")
    common(sp)
    sp.add_argument("--perturb", action="store_true", help="negative control: corrupt P first")
    sp.set_defaults(func=cmd_eigencheck)

    sp = sub.add_parser("contour", help="numeric contour integral against the closed forms")
    common(sp)
    sp.add_argument("--q", type=_unit_q, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--radius", type=_posfloat, default=None)
    sp.add_argument("--nodes", type=int, default=64)
    sp.set_defaults(func=cmd_contour)

    sp = sub.add_parser("verify-identities", help="random-point and exact identity checks")
    sp.add_argument("--n", type=_pos, required=True)
    sp.add_argument("--k", type=_pos, required=True)
    sp.add_argument("--trials", type=_pos, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--lambda-max", dest="lambda_max", type=_nonneg, default=6)
    sp.set_defaults(func=cmd_verify_identities)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "nodes", 64) < 64:
        print("error: --nodes must be at least 64", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "verify-identities" and args.n > 4:
        print("error: --n must be at most 4", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
