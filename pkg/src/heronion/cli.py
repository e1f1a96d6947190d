"""Command-line surface: expand and export the named area polynomials,
enumerate realizable areas, run verification suites, and emit the
Moebius radius polynomials.

Exit codes: 0 all checks pass, 1 check failure, 2 usage error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time

from . import geom_solver, goldens, heron_engine, symgen
from .poly_core import mp_eval, to_json, to_text

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_EXPAND_MATRIX = {
    ("alpha", 3, 0): lambda: heron_engine.alpha_cyclic_small(3),
    ("alpha", 4, 0): lambda: heron_engine.alpha_cyclic_small(4, 1)
    * heron_engine.alpha_cyclic_small(4, -1),
    ("alpha", 5, 0): lambda: heron_engine.alpha_cyclic_small(5),
    ("alpha", 6, 0): lambda: heron_engine.alpha_cyclic_small(6, 1)
    * heron_engine.alpha_cyclic_small(6, -1),
    ("beta", 4, 1): lambda: heron_engine.alpha_cyclic_small(4, 1),
    ("beta", 4, -1): lambda: heron_engine.alpha_cyclic_small(4, -1),
    ("beta", 6, 1): lambda: heron_engine.alpha_cyclic_small(6, 1),
    ("beta", 6, -1): lambda: heron_engine.alpha_cyclic_small(6, -1),
    ("alpha_semi", 2, 0): lambda: heron_engine.alpha_semicyclic(2),
    ("alpha_semi", 3, 0): lambda: heron_engine.alpha_semicyclic(3),
    ("alpha_semi", 4, 0): lambda: heron_engine.alpha_semicyclic(4),
    ("alpha_semi", 5, 0): lambda: heron_engine.alpha_semicyclic(5),
    ("alpha_semi", 6, 0): lambda: heron_engine.alpha_semicyclic(6),
    ("beta_semi", 4, 1): lambda: heron_engine.alpha_semicyclic(4, "plus"),
    ("beta_semi", 4, -1): lambda: heron_engine.alpha_semicyclic(4, "minus"),
    ("beta_semi", 6, 1): lambda: heron_engine.alpha_semicyclic(6, "plus"),
    ("beta_semi", 6, -1): lambda: heron_engine.alpha_semicyclic(6, "minus"),
}


def _supported_matrix() -> str:
    rows = sorted(
        "  %-10s n=%d%s" % (f, n, "  parity %+d" % p if p else "")
        for (f, n, p) in _EXPAND_MATRIX
    )
    return "supported combinations:\n" + "\n".join(rows)


def cmd_expand(args) -> int:
    key = (args.family, args.n, args.parity)
    if key not in _EXPAND_MATRIX:
        print(
            "unsupported combination: family=%s n=%d parity=%d\n%s"
            % (args.family, args.n, args.parity, _supported_matrix()),
            file=sys.stderr,
        )
        return EXIT_USAGE
    poly = _EXPAND_MATRIX[key]()
    text = to_json(poly) if args.format == "json" else to_text(poly)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        where = args.out
    else:
        sys.stdout.write(text)
        where = "<stdout>"
    print(
        "wrote %s: %d terms, weighted degree %s, degree %d in 16K^2"
        % (where, len(poly.terms), poly.weighted_degree(), poly.degree_in("K16")),
        file=sys.stderr,
    )
    return EXIT_OK


def solution_residual(sol: geom_solver.AreaSolution, family: str):
    """Residual of the matching shipped polynomial at this solution, or
    None when no polynomial covers this (family, n)."""
    n = len(sol.sides)
    name = goldens.area_polynomial_name(family, n, sol.parity)
    if name is None:
        return None
    try:
        poly = goldens.load_golden(name)
    except FileNotFoundError:
        return None
    sig = symgen.elementary_symmetric([s * s for s in sol.sides])
    point = {"K16": 16 * sol.K2}
    point.update({"sigma%d" % i: sig[i] for i in range(1, n + 1)})
    if "s" in poly.table.names:
        point["s"] = math.sqrt(sig[n])
    if "w" in poly.table.names:
        point["w"] = (
            4 * sol.parity * math.sqrt(max(sol.K2, 0.0) * sig[n])
        )
    return heron_engine.relative_residual(poly, point)


def cmd_areas(args) -> int:
    try:
        sides = [float(s) for s in args.sides.split(",")]
    except ValueError:
        print("could not parse --sides %r" % args.sides, file=sys.stderr)
        return EXIT_USAGE
    if any(s <= 0 for s in sides):
        print("sides must be positive", file=sys.stderr)
        return EXIT_USAGE
    sols = geom_solver.enumerate_areas(sides, family=args.family, tol=args.tol)
    print(
        "%3s %-6s %6s %15s %15s %15s %10s"
        % ("#", "branch", "parity", "r", "K^2", "K", "residual")
    )
    worst = 0.0
    records = []
    for i, sol in enumerate(sols):
        res = solution_residual(sol, args.family)
        if res is not None:
            worst = max(worst, res)
        K = math.sqrt(sol.K2) if sol.K2 >= 0 else float("nan")
        print(
            "%3d %-6s %+6d %15.9g %15.9g %15.9g %10s"
            % (
                i,
                sol.branch,
                sol.parity,
                sol.r,
                sol.K2,
                K,
                "%.3e" % res if res is not None else "n/a",
            )
        )
        rec = sol.to_record()
        rec["residual"] = res
        records.append(rec)
    print("%d solution(s); worst residual %.3e" % (len(sols), worst))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"sides": sides, "family": args.family,
                       "solutions": records}, fh, indent=2, sort_keys=True)
    if worst > args.check_tol:
        return EXIT_CHECK_FAILED
    return EXIT_OK


# -- verify suites ------------------------------------------------------------


def _random_config(rng, n, delta):
    for _ in range(200):
        try:
            angles = [rng.uniform(0.05, 2.9) for _ in range(n - 1)]
            return geom_solver.config_from_angles(n, delta, angles=angles)
        except geom_solver.GeomError:
            continue
    raise geom_solver.GeomError("could not sample a configuration")


def _suite_identity(rng, trials):
    from fractions import Fraction

    worst = 0.0
    for n in range(3, 13):
        for delta in (1, -1):
            for _ in range(trials):
                cfg = _random_config(rng, n, delta)
                worst = max(worst, symgen.main_identity_residual(cfg))
    # exact negative-real-branch configurations must give exactly zero
    exact_zero = True
    for n, delta in ((3, -1), (4, 1), (5, -1), (6, 1)):
        qs = [
            -Fraction(rng.randint(2, 9), rng.randint(2, 9)) for _ in range(n - 1)
        ]
        try:
            cfg = geom_solver.config_from_angles(
                n, delta, negative_reals=qs, r=Fraction(1),
                allow_degenerate=True,
            )
        except geom_solver.GeomError:
            continue
        if symgen.main_identity_residual(cfg) != 0:
            exact_zero = False
    status = "passed" if worst < 1e-9 and exact_zero else "failed"
    return {"name": "identity", "status": status, "worst_residual": worst,
            "exact_zero_on_rational_branch": exact_zero}


def _suite_factorization(rng, trials):
    worst = 0.0
    for n in range(3, 9):
        for delta in (1, -1):
            if delta == -1 and n > 6:
                continue
            for _ in range(trials):
                cfg = _random_config(rng, n, delta)
                rep = heron_engine.factorization_witness(cfg)
                worst = max(worst, rep.max_discrepancy())
    return {
        "name": "factorization",
        "status": "passed" if worst < 1e-9 else "failed",
        "worst_discrepancy": worst,
    }


def _suite_specializations(rng, trials):
    out = []
    ok = True
    for which in ("const5", "degen5"):
        rep = heron_engine.specialization_checks(which)
        ok = ok and rep.passed
        out.append({"which": which, "passed": rep.passed, "detail": rep.detail})
    return {
        "name": "specializations",
        "status": "passed" if ok else "failed",
        "checks": out,
    }


def _dyadic_near(x, bits=20):
    from fractions import Fraction

    return Fraction(round(x * (1 << bits)), 1 << bits)


def _suite_alpha7(rng, trials):
    from fractions import Fraction

    worst = 0.0
    sets = 0
    for _ in range(max(1, trials // 30)):
        sides = [Fraction(rng.randint(8, 24), 8) for _ in range(7)]
        sigma = symgen.elementary_symmetric([a * a for a in sides])[1:]
        try:
            a7 = heron_engine.alpha7_specialized(sigma)
        except heron_engine.EngineError:
            continue
        sets += 1
        sols = geom_solver.enumerate_areas(
            [float(a) for a in sides], family="cyclic"
        )
        for sol in sols:
            worst = max(
                worst,
                heron_engine.relative_residual(a7, {"K16": 16 * sol.K2}),
            )
    status = "passed" if sets and worst < 1e-6 else "failed"
    return {"name": "alpha7", "status": status, "sigma_sets": sets,
            "worst_root_residual": worst}


def _suite_mplcty(rng, trials, budget=600.0):
    rep = heron_engine.mplcty_divisibility_check(budget)
    rep = dict(rep)
    rep["name"] = "mplcty"
    rep["optional"] = True
    return rep


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    suites = {
        "identity": _suite_identity,
        "factorization": _suite_factorization,
        "specializations": _suite_specializations,
        "alpha7": _suite_alpha7,
        "mplcty": lambda r, t: _suite_mplcty(r, t, args.budget),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    checks = []
    for name in sorted(names):
        start = time.time()
        rep = suites[name](rng, args.trials)
        checks.append(rep)
        # timing goes to stderr only so the report is byte-deterministic
        # for a fixed seed
        print("%-16s %6.1fs" % (name, time.time() - start), file=sys.stderr)
    report = {
        "command": "verify",
        "suite": args.suite,
        "seed": args.seed,
        "trials": args.trials,
        "checks": checks,
    }
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    failed = [
        c for c in checks
        if c["status"] == "failed" and not c.get("optional")
    ]
    for c in checks:
        tag = c["status"]
        if c.get("optional") and tag == "skipped":
            tag = "skipped (optional)"
        print("%-16s %s" % (c["name"], tag), file=sys.stderr)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


_MOBIUS_DEFAULT_Y2 = [2, 3, 5, 7, 11, 13, 17]


def cmd_mobius(args) -> int:
    y2 = None
    if args.y2:
        try:
            y2 = [int(v) for v in args.y2.split(",")]
        except ValueError:
            print("could not parse --y2 %r" % args.y2, file=sys.stderr)
            return EXIT_USAGE
    elif args.n > 4:
        y2 = _MOBIUS_DEFAULT_Y2[: args.n]
    try:
        m = geom_solver.mobius_polynomial(args.n, args.family, y2)
    except geom_solver.GeomError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    text = to_json(m.poly) if args.format == "json" else to_text(m.poly)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(
        "degree %d in r^2 after stripping r^%d"
        % (m.degree_r2, 2 * m.stripped_power),
        file=sys.stderr,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="heronion",
        description="Area polynomials of cyclic and semicyclic polygons",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("expand", help="expand a named area polynomial")
    pe.add_argument("--family", required=True,
                    choices=["alpha", "beta", "alpha_semi", "beta_semi"])
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--parity", type=int, default=0, choices=[-1, 0, 1])
    pe.add_argument("--format", default="text", choices=["text", "json"])
    pe.add_argument("--out")
    pe.set_defaults(func=cmd_expand)

    pa = sub.add_parser("areas", help="enumerate realizable areas")
    pa.add_argument("--sides", required=True, help="comma-separated lengths")
    pa.add_argument("--family", default="cyclic",
                    choices=["cyclic", "semicyclic"])
    pa.add_argument("--tol", type=float, default=1e-12)
    pa.add_argument("--check-tol", type=float, default=1e-6)
    pa.add_argument("--out")
    pa.set_defaults(func=cmd_areas)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument("--suite", default="all",
                    choices=["identity", "factorization", "specializations",
                             "alpha7", "mplcty", "all"])
    pv.add_argument("--trials", type=int, default=100)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--budget", type=float, default=600.0,
                    help="wall-clock budget (s) for the optional mplcty check")
    pv.add_argument("--out")
    pv.set_defaults(func=cmd_verify)

    pm = sub.add_parser("mobius", help="emit a Moebius radius polynomial")
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--family", default="cyclic",
                    choices=["cyclic", "semicyclic"])
    pm.add_argument("--y2", help="comma-separated integer squared half-sides "
                    "(required meaningfully for n > 4)")
    pm.add_argument("--format", default="text", choices=["text", "json"])
    pm.add_argument("--out")
    pm.set_defaults(func=cmd_mobius)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except MemoryError:
        print("resource limit exceeded", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
