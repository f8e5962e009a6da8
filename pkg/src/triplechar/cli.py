"""Command-line entry point.

Every subcommand emits a machine-readable JSON report carrying a schema
number, the fully resolved configuration, and a timestamp; identical seeds
and flags reproduce the report byte-for-byte except for the timestamp
line.  Exit codes: 0 on success with all asserted certifications passing,
2 on a certification failure, 1 on usage errors.

Set TRIPLECHAR_THREADS to parallelize the identity sweep.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import counterexample as cx
from . import energy as en
from . import stokes as st
from . import symbolgeometry as sg
from . import zerolocator as zl
from ._backend import BACKEND_NAME
from .errors import TripleCharError
from .pathint import IntegratorConfig
from .sibuya import CanonicalSolution, asymptotic_coeffs, evaluate_with_trace

SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CERT_FAIL = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_USAGE)


def _n_workers() -> int:
    try:
        return max(1, int(os.environ.get("TRIPLECHAR_THREADS", "1")))
    except ValueError:
        return 1


def _emit(args, payload: dict, passed: bool = True) -> int:
    report = {
        "schema": SCHEMA,
        "backend": BACKEND_NAME,
        "config": {k: v for k, v in sorted(vars(args).items())
                   if k not in ("func",)},
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        "passed": passed,
    }
    report.update(payload)
    text = json.dumps(report, indent=2, sort_keys=True, default=_jsonable)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if passed else EXIT_CERT_FAIL


def _jsonable(obj):
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    raise TypeError(f"not JSON serializable: {type(obj)}")


def _cfg(args) -> IntegratorConfig:
    return IntegratorConfig(rel_tol=args.rel_tol, abs_tol=args.abs_tol)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rel-tol", type=float, default=1e-12)
    p.add_argument("--abs-tol", type=float, default=1e-14)
    p.add_argument("--output", "-o", default=None,
                   help="write the JSON report here instead of stdout")


def _csv_rows(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow(row)


# ---------------------------------------------------------------- sibuya


def cmd_sibuya_eval(args) -> int:
    sol = CanonicalSolution(zeta=complex(args.zeta_re, args.zeta_im),
                            k=args.k)
    state, trace = evaluate_with_trace(
        sol, complex(args.y_re, args.y_im), _cfg(args), collect_steps=True)
    if args.trace_csv:
        trace.to_csv(args.trace_csv)
    payload = {
        "w": state.w, "wprime": state.wprime, "scale_exp2": state.exp2,
        "log_abs_w": state.log_abs_w(),
        "trace_points": len(trace),
        "coeffs": None,
    }
    if args.coeffs:
        B, C = asymptotic_coeffs(sol.rotated_zeta, args.coeffs)
        payload["coeffs"] = {"B": list(B), "C": list(C)}
    return _emit(args, payload)


# ---------------------------------------------------------------- stokes


def cmd_stokes_table(args) -> int:
    table = st.stokes_coefficients(
        complex(args.zeta_re, args.zeta_im),
        y_eval=complex(args.y_eval_re, args.y_eval_im), cfg=_cfg(args))
    return _emit(args, {"table": table.as_dict()})


def cmd_verify_identities(args) -> int:
    cfg = _cfg(args)
    cache: dict = {}
    n = args.grid
    radii = [args.radius * (i + 1) / n for i in range(n)]
    angles = [2.0 * math.pi * j / n for j in range(n)]
    zetas = [r * cmath.exp(1j * a) for r in radii for a in angles]

    def work(z):
        cyc = st.verify_cyclic_identity(z, cfg, cache=cache)
        mat = st.verify_matrix_product(z, cfg)
        sym = st.verify_conjugation_symmetry(z, cfg, cache=cache)
        return cyc, mat, sym

    workers = _n_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, zetas))
    else:
        results = [work(z) for z in zetas]

    table0 = st.stokes_coefficients(0.0, cfg=cfg)
    om = st.OMEGA
    ck0 = max(abs(c - (1.0 + om)) for c in table0.C)
    ctil = max(abs(c + om) for c in table0.C_tilde)
    report = {
        "grid": n, "radius": args.radius,
        "max_cyclic": max(r[0] for r in results),
        "max_matrix": max(r[1] for r in results),
        "max_symmetry": max(r[2] for r in results),
        "max_ck_at_zero": ck0,
        "max_ctilde_dev": ctil,
        "n_points": len(zetas),
        "n_c0_evaluations": len(cache),
    }
    passed = (report["max_cyclic"] < args.tol_cyclic
              and report["max_matrix"] < args.tol_matrix
              and report["max_symmetry"] < args.tol_symmetry
              and ck0 < args.tol_spot and ctil < args.tol_spot)
    return _emit(args, report, passed)


# ---------------------------------------------------------------- zeros


def cmd_zero_find(args) -> int:
    contour = zl.SectorContour(r_min=args.rmin, r_max=args.rmax,
                               arg_min=args.argmin, arg_max=args.argmax,
                               n_samples=args.n_samples)
    cert = zl.find_zero(contour, tol=args.tol, cfg=_cfg(args))
    zl.save_certificate(cert, args.cert_out)
    payload = {"certificate": cert.as_dict(), "certificate_path": args.cert_out}
    passed = cert.residual < args.tol and cert.winding >= 1
    return _emit(args, payload, passed)


# ---------------------------------------------------------- counterexample


def cmd_counterexample(args) -> int:
    try:
        zeta0 = zl.load_zeta0(args.zeta0)
    except FileNotFoundError:
        sys.stderr.write(
            f"error: zero certificate {args.zeta0!r} not found; run "
            f"`triplechar zero-find` first\n")
        return EXIT_USAGE
    cfg = _cfg(args)
    params = cx.make_params(zeta0, args.lam, args.b0)
    res = cx.residual_check(params, cfg=cfg)
    sch = cx.schwartz_check(params, cfg)
    growth = cx.growth_profile(params, [-1.0])[0]
    moments = cx.moment_table(zeta0, args.b0, cfg)
    witness = cx.gevrey_witness(params, s=args.witness_s)

    if args.profile_csv:
        grid = cx.default_grid(params)
        tr = cx.build_solution(params, grid, cfg)
        la = tr.log_abs_u()
        rows = [(repr(float(x)), repr(float(v)))
                for x, v in zip(tr.x1, la)]
        _csv_rows(args.profile_csv, ("x1", "log_abs_u"), rows)
    if args.witness_csv:
        _csv_rows(args.witness_csv,
                  ("lambda", "growth_exponent", "gevrey_budget", "excess"),
                  [(r["lambda"], repr(r["growth_exponent"]),
                    repr(r["gevrey_budget"]), repr(r["excess"]))
                   for r in witness])

    payload = {
        "params": params.as_dict(),
        "mu_abs": abs(params.mu),
        "residuals": res,
        "growth_slope_per_sqrt_lambda_x0": growth / math.sqrt(args.lam),
        "growth_rate": params.growth_rate,
        "schwartz": sch,
        "moments": moments,
        "gevrey_witness": witness,
    }
    passed = (res["ode_substitution"] < 1e-8
              and res["finite_difference"] < 1e-4
              and moments["nondegenerate"]
              and all(d["tail_below_u0"] and d["tail_monotone"]
                      for d in sch.values()))
    return _emit(args, payload, passed)


# ---------------------------------------------------------------- energy


def cmd_energy_check(args) -> int:
    reports = []
    rows = []
    all_ok = True
    for i in range(args.n_samples):
        u = en.random_bumps(args.seed + i, args.xin)
        w = en.WeightParams(tau=args.tau0, s=args.s, xi_n=args.xin, a=1.0)
        rep_m = en.verify_multiplier_estimate(u, w)
        rep_f = en.verify_full_estimate(u, w, args.b0)
        dec = en.energy_decomposition(u, args.b0, args.xin)
        ok = (rep_m.monotone_after_star
              and (rep_f.status != "ok" or rep_f.monotone_after_star)
              and dec.rel_diff < args.tol_decomposition)
        all_ok = all_ok and ok
        reports.append({
            "sample": i, "passed": ok,
            "multiplier": rep_m.as_dict(),
            "full": rep_f.as_dict(),
            "decomposition": dec.as_dict(),
        })
        for tau, lhs, rhs, holds in zip(rep_f.tau_grid, rep_f.lhs,
                                        rep_f.rhs, rep_f.holds):
            rows.append((i, args.s, args.xin, repr(float(tau)),
                         repr(float(lhs)), repr(float(rhs)), int(holds)))
    if args.sweep_csv:
        _csv_rows(args.sweep_csv,
                  ("sample", "s", "xi_n", "tau", "lhs", "rhs", "holds"),
                  rows)
    return _emit(args, {"reports": reports}, all_ok)


# ------------------------------------------------------------- geometry


def cmd_roots(args) -> int:
    roots, vanishing = sg.cubic_roots(args.x, args.xi, args.b)
    s1 = sum(roots)
    s2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2]
    s3 = roots[0] * roots[1] * roots[2]
    payload = {
        "roots": list(roots),
        "vanishing_root": vanishing,
        "discriminant": sg.discriminant(args.x, args.xi, args.b),
        "vieta_residuals": {
            "sum": abs(s1),
            "pair_sum": abs(s2 + 3.0 * (args.x ** 2 + args.xi ** 2)),
            "product": abs(s3 - 2.0 * args.b * args.x ** 3),
        },
    }
    if args.witness_csv:
        wit = sg.nonsmoothness_witness(args.b)
        rows = []
        for phi, data in wit["table"].items():
            for eps, val in zip(wit["eps_list"], data["scaled"]):
                rows.append((repr(float(phi)), repr(float(eps)),
                             repr(float(val)),
                             repr(float(data["limit_formula"]))))
        _csv_rows(args.witness_csv,
                  ("phi", "eps", "tau_over_eps", "limit_formula"), rows)
        payload["nonsmoothness"] = {
            "certificate": wit["nonlinearity_certificate"],
            "threshold": wit["certificate_threshold"],
        }
    return _emit(args, payload)


def cmd_cones(args) -> int:
    rep = sg.cone_analysis(args.b0, n_samples=args.n_samples, seed=args.seed)
    passed = (rep.dv_in_cone and rep.dv_in_tangent
              and rep.off_tangent_component > 1e-3
              and rep.off_tangent_pairing_max <= 0.0)
    return _emit(args, {"cones": rep.as_dict()}, passed)


# ------------------------------------------------------------------ main


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="triplechar",
                 description="Cubic-oscillator Stokes data and "
                             "triple-characteristic certification tools")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sibuya-eval", help="evaluate a family member")
    p.add_argument("--zeta-re", type=float, required=True)
    p.add_argument("--zeta-im", type=float, default=0.0)
    p.add_argument("--k", type=int, default=0, choices=range(5))
    p.add_argument("--y-re", type=float, required=True)
    p.add_argument("--y-im", type=float, default=0.0)
    p.add_argument("--trace-csv", default=None)
    p.add_argument("--coeffs", type=int, default=0,
                   help="also emit this many asymptotic coefficients")
    _add_common(p)
    p.set_defaults(func=cmd_sibuya_eval)

    p = sub.add_parser("stokes-table", help="Stokes coefficients at zeta")
    p.add_argument("--zeta-re", type=float, required=True)
    p.add_argument("--zeta-im", type=float, default=0.0)
    p.add_argument("--y-eval-re", type=float, default=0.0)
    p.add_argument("--y-eval-im", type=float, default=0.0)
    _add_common(p)
    p.set_defaults(func=cmd_stokes_table)

    p = sub.add_parser("verify-identities",
                       help="sweep the coefficient identities on a polar grid")
    p.add_argument("--grid", type=int, default=20)
    p.add_argument("--radius", type=float, default=3.0)
    p.add_argument("--tol-cyclic", type=float, default=1e-7)
    p.add_argument("--tol-matrix", type=float, default=1e-7)
    p.add_argument("--tol-symmetry", type=float, default=1e-7)
    p.add_argument("--tol-spot", type=float, default=1e-8)
    _add_common(p)
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("zero-find", help="certify a zero of C_0 in the sector")
    p.add_argument("--rmin", type=float, default=0.5)
    p.add_argument("--rmax", type=float, default=8.0)
    p.add_argument("--argmin", type=float, default=zl.DEFAULT_ARG_MIN)
    p.add_argument("--argmax", type=float, default=zl.SECTOR_ARG_MAX)
    p.add_argument("--n-samples", type=int, default=128)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--cert-out", default="certificates/zeta0.json")
    _add_common(p)
    p.set_defaults(func=cmd_zero_find)

    p = sub.add_parser("counterexample",
                       help="assemble the solution family and its checks")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--b0", type=float, default=cx.B0_DEFAULT)
    p.add_argument("--zeta0", default="certificates/zeta0.json",
                   help="zero-certificate JSON produced by zero-find")
    p.add_argument("--witness-s", type=float, default=3.0)
    p.add_argument("--profile-csv", default=None)
    p.add_argument("--witness-csv", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("energy-check", help="weighted energy inequalities")
    p.add_argument("--s", type=float, default=2.0)
    p.add_argument("--xin", type=float, default=100.0)
    p.add_argument("--b0", type=float, default=cx.B0_DEFAULT)
    p.add_argument("--seed", type=int, default=20250810)
    p.add_argument("--n-samples", type=int, default=5)
    p.add_argument("--tau0", type=float, default=0.02)
    p.add_argument("--tol-decomposition", type=float, default=1e-6)
    p.add_argument("--sweep-csv", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_energy_check)

    p = sub.add_parser("roots", help="trigonometric roots of the reduced cubic")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--witness-csv", default=None,
                   help="also emit the directional-limit table")
    _add_common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("cones", help="sampled propagation-cone certificates")
    p.add_argument("--b0", type=float, default=cx.B0_DEFAULT)
    p.add_argument("--n-samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=20250810)
    _add_common(p)
    p.set_defaults(func=cmd_cones)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except TripleCharError as exc:
        sys.stderr.write(f"certification error: {exc}\n")
        return EXIT_CERT_FAIL


if __name__ == "__main__":
    sys.exit(main())
