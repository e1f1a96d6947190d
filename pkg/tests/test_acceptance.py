"""Acceptance gate: one criterion per test, one pass/fail line per
criterion on the terminal, pinned tolerances.

Tolerances (fixed):
  identity / witness residuals   1e-9
  polynomial root residuals      1e-6
"""

import math
import os
import random
import time
from fractions import Fraction

import pytest

from heronion import (
    MultiPoly,
    alpha7_specialized,
    alpha_cyclic_small,
    alpha_semicyclic,
    config_from_angles,
    crossing_parity,
    delta_count,
    discriminant,
    enumerate_areas,
    factorization_witness,
    fg_polynomials,
    ideal_membership_cofactors,
    main_identity_residual,
    mobius_polynomial,
    mobius_prestrip_degree,
    mobius_prestrip_leading,
    mplcty_divisibility_check,
    quintic_covariant_C,
    relative_residual,
    specialization_checks,
)
from heronion.geom_solver import GeomError
from heronion.heron_engine import FG_TABLE, BinaryForm
from heronion.poly_core import UniView, VarTable, mp_eval
from heronion.symgen import elementary_symmetric

TOL_IDENTITY = 1e-9
TOL_ROOT = 1e-6


def report(capsys, k, ok, text):
    with capsys.disabled():
        print("CRITERION %2d: %s - %s" % (k, "PASS" if ok else "FAIL", text))
    assert ok, "criterion %d failed: %s" % (k, text)


def _rand_config(rng, n, delta, span=None):
    if span is None:
        span = 2.5 if delta == 1 else 1.2
    for _ in range(300):
        try:
            return config_from_angles(
                n, delta, angles=[rng.uniform(0.1, span) for _ in range(n - 1)]
            )
        except GeomError:
            continue
    raise GeomError("sampling failed")


def _var(table, name, p=1):
    return MultiPoly.var(table, name, p)


def test_criterion_01_closed_forms(capsys):
    t0 = time.monotonic()
    a3 = alpha_cyclic_small(3)
    T = a3.table
    ok = a3 == (_var(T, "K16") - MultiPoly.const(T, 4) * _var(T, "sigma2")
                + _var(T, "sigma1", 2))
    for eps in (1, -1):
        b4 = alpha_cyclic_small(4, eps)
        T4 = b4.table
        expect = (
            _var(T4, "K16")
            - MultiPoly.const(T4, 4) * _var(T4, "sigma2")
            + _var(T4, "sigma1", 2)
            - MultiPoly.const(T4, 8 * eps) * _var(T4, "s")
        )
        ok = ok and b4 == expect
    sig = elementary_symmetric([9, 16, 25])
    ok = ok and mp_eval(
        a3, {"K16": 576, "sigma1": sig[1], "sigma2": sig[2]}
    ) == 0
    sq = elementary_symmetric([1, 1, 1, 1])
    ok = ok and mp_eval(
        alpha_cyclic_small(4, 1),
        {"K16": 16, "sigma1": sq[1], "sigma2": sq[2], "sigma3": sq[3],
         "sigma4": sq[4], "s": 1},
    ) == 0
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 1.0
    report(capsys, 1, ok,
           "alpha_3 / beta_4 / beta_4* closed forms, 3-4-5 and unit square "
           "exact zeros (%.2fs < 1s)" % elapsed)


def test_criterion_02_pentagon_hexagon(capsys):
    t0 = time.monotonic()
    a5 = alpha_cyclic_small(5)
    ok = (a5.degree_in("K16") == 7 and a5.weighted_degree() == 14
          and a5.coefficient((7, 0, 0, 0, 0, 0)) == 1)
    b6p = alpha_cyclic_small(6, 1)
    b6m = alpha_cyclic_small(6, -1)
    ok = ok and (b6p * b6m).degree_in("s") == 0
    rng = random.Random(2024)
    worst = 0.0
    for _ in range(100):
        cfg = _rand_config(rng, 5, 1)
        sig = elementary_symmetric(cfg.sides2)
        pt = {"sigma%d" % i: sig[i] for i in range(1, 6)}
        pt["K16"] = 16 * cfg.K2
        worst = max(worst, relative_residual(a5, pt))
    for _ in range(100):
        cfg = _rand_config(rng, 6, 1)
        sig = elementary_symmetric(cfg.sides2)
        pt = {"sigma%d" % i: sig[i] for i in range(1, 7)}
        pt["K16"] = 16 * cfg.K2
        pt["s"] = math.sqrt(sig[6])
        poly = b6p if crossing_parity(cfg) == 1 else b6m
        worst = max(worst, relative_residual(poly, pt))
    elapsed = time.monotonic() - t0
    ok = ok and worst < TOL_ROOT and elapsed < 60.0
    report(capsys, 2, ok,
           "alpha_5 monic deg 7 wdeg 14; beta_6*beta_6star radical-free; "
           "200 residuals %.2e < 1e-6 (%.1fs < 60s)" % (worst, elapsed))


def test_criterion_03_main_identity(capsys):
    t0 = time.monotonic()
    rng = random.Random(3)
    worst = 0.0
    for n in range(3, 13):
        for delta in (1, -1):
            for _ in range(100):
                worst = max(
                    worst, main_identity_residual(_rand_config(rng, n, delta))
                )
    exact_ok = True
    for n, delta in ((3, -1), (4, 1), (5, -1), (6, 1)):
        qs = [-Fraction(rng.randint(2, 9), rng.randint(2, 9))
              for _ in range(n - 1)]
        try:
            cfg = config_from_angles(n, delta, negative_reals=qs,
                                     r=Fraction(1), allow_degenerate=True)
        except GeomError:
            continue
        res = main_identity_residual(cfg)
        exact_ok = exact_ok and isinstance(res, Fraction) and res == 0
    elapsed = time.monotonic() - t0
    ok = worst < TOL_IDENTITY and exact_ok and elapsed < 60.0
    report(capsys, 3, ok,
           "main identity residual %.2e < 1e-9 over 2000 configs, exact 0 "
           "on rational branch (%.1fs < 60s)" % (worst, elapsed))


def test_criterion_04_factorization_witness(capsys):
    rng = random.Random(4)
    worst = 0.0
    for family, rng_n in (("cyclic", range(3, 9)), ("semicyclic", range(2, 7))):
        delta = 1 if family == "cyclic" else -1
        for n in rng_n:
            for _ in range(100):
                cfg = _rand_config(rng, n, delta)
                worst = max(worst,
                            factorization_witness(cfg).max_discrepancy())
    ok = worst < TOL_IDENTITY
    report(capsys, 4, ok,
           "factorization witness discrepancy %.2e < 1e-9 over 100 configs "
           "per (n, family), incl. u2 = -4K^2 and odd-n t_n ~ 0" % worst)


def test_criterion_05_semicyclic_pipeline(capsys):
    # alpha'_3 closed form: 16 discr_z(z^3 + s1 z^2 + (s2 - K16/4) z + s3)
    T = VarTable(["K16", "sigma1", "sigma2", "sigma3", "z"], [2, 1, 2, 3, 1])
    z = _var(T, "z")
    cubic = (z ** 3 + _var(T, "sigma1") * z ** 2
             + (_var(T, "sigma2")
                - _var(T, "K16").scale2(-2)) * z
             + _var(T, "sigma3"))
    d = discriminant(UniView(cubic, "z")) * MultiPoly.const(T, 16)
    a3 = alpha_semicyclic(3)
    closed = {tuple(e[:4]): Fraction(c, 1 << a3.den2)
              for e, c in a3.terms.items()} == {
        tuple(e[:4]): Fraction(c, 1 << d.den2) for e, c in d.terms.items()
    }
    a5 = alpha_semicyclic(5)
    a5_ok = (a5.weighted_degree() == 30 and a5.degree_in("K16") == 15
             and a5.coefficient((15,) + (0,) * 5) == 1)
    # the beta'_6 pipeline performs the exact division by 4 u2^6 and
    # raises if the remainder is nonzero
    try:
        a6 = alpha_semicyclic(6)
        div_ok = True
    except Exception:
        a6 = None
        div_ok = False
    rng = random.Random(5)
    worst = 0.0
    for n in range(2, 7):
        poly = alpha_semicyclic(n)
        for _ in range(25):
            cfg = _rand_config(rng, n, -1)
            sig = elementary_symmetric(cfg.sides2)
            pt = {"sigma%d" % i: sig[i] for i in range(1, n + 1)}
            pt["K16"] = 16 * cfg.K2
            worst = max(worst, relative_residual(poly, pt))
    ok = closed and a5_ok and div_ok and worst < TOL_ROOT
    report(capsys, 5, ok,
           "alpha'_3 closed form exact; alpha'_5 monic wdeg 30; beta'_6 "
           "division by 4u2^6 exact; root residuals %.2e < 1e-6" % worst)


def test_criterion_06_heptagon_octagon_specialization(capsys):
    rng = random.Random(6)
    checked = 0
    worst = 0.0
    budgets_ok = True
    # two heptagon sets and one octagon set, all with dyadic sides
    for trial in range(2):
        t0 = time.monotonic()
        sides = [Fraction(rng.randint(8, 24), 8) for _ in range(7)]
        sigma = elementary_symmetric([a * a for a in sides])[1:]
        a7 = alpha7_specialized(sigma)
        assert a7.degree_in("K16") == 38
        assert a7.coefficient((38,)) == 1
        sols = enumerate_areas([float(a) for a in sides], family="cyclic")
        assert sols
        for sol in sols:
            worst = max(worst,
                        relative_residual(a7, {"K16": 16 * sol.K2}))
        budgets_ok = budgets_ok and (time.monotonic() - t0) < 1800
        checked += 1
    t0 = time.monotonic()
    sides8 = [Fraction(rng.randint(8, 20), 8) for _ in range(8)]
    sigma8 = elementary_symmetric([a * a for a in sides8])[1:]
    root8 = Fraction(1)
    for a in sides8:
        root8 *= a
    b8 = {
        eps: alpha7_specialized(sigma8, eps=eps, sqrt_sigma_n=root8)
        for eps in (1, -1)
    }
    for eps in (1, -1):
        assert b8[eps].degree_in("K16") == 38
        assert b8[eps].coefficient((38,)) == 1
    sols8 = enumerate_areas([float(a) for a in sides8], family="cyclic")
    assert sols8
    for sol in sols8:
        worst = max(worst,
                    relative_residual(b8[sol.parity], {"K16": 16 * sol.K2}))
    budgets_ok = budgets_ok and (time.monotonic() - t0) < 1800
    checked += 1
    ok = checked >= 3 and worst < TOL_ROOT and budgets_ok
    report(capsys, 6, ok,
           "%d exact sigma sets: quotient monic deg 38, enumerated areas "
           "are roots to %.2e < 1e-6, each set < 30min" % (checked, worst))


def test_criterion_07_specializations(capsys):
    r1 = specialization_checks("const5")
    r2 = specialization_checks("degen5")
    ok = r1.passed and r2.passed and r1.gamma is not None
    report(capsys, 7, ok,
           "constant term of alpha_5 is a perfect square gamma_5^2 and the "
           "sigma_5 = 0 specialization factors exactly")


def test_criterion_08_covariant_law(capsys):
    rng = random.Random(8)

    def conv(f, g):
        out = [Fraction(0)] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            for j, b in enumerate(g):
                out[i + j] += Fraction(a) * Fraction(b)
        return out

    planted_ok = True
    planted = 0
    while planted < 50:
        lin = [rng.randint(-9, 9) for _ in range(2)]
        quad = [rng.randint(-9, 9) for _ in range(3)]
        if lin[0] == 0 or quad[0] == 0:
            continue
        q = BinaryForm(5, tuple(conv(lin, conv(quad, quad))))
        planted_ok = planted_ok and quintic_covariant_C(q).is_zero()
        planted += 1
    generic_nonzero = all(
        not quintic_covariant_C(
            BinaryForm(5, tuple(Fraction(rng.randint(1, 9))
                                for _ in range(6)))
        ).is_zero()
        for _ in range(50)
    )
    F, G, F1, G1 = fg_polynomials()
    # display spot checks (full coefficient-for-coefficient equality is
    # asserted in test_heron_engine)
    disp_ok = (
        F.coefficient((0, 2, 3, 0, 0, 0)) == 1       # u3^2 t4^3
        and F.coefficient((2, 1, 0, 1, 1, 0)) == 54   # 54 u2^2 u3 t5 t6
        and G.coefficient((0, 2, 2, 1, 0, 0)) == 1    # u3^2 t4^2 t5
        and G.coefficient((3, 0, 0, 0, 1, 1)) == -200  # -200 u2^3 t6 t7
        and F1.coefficient((0, 3, 0, 0, 0, 0)) == 4
        and G1.coefficient((0, 2, 1, 0, 0, 0)) == 7
    )
    u2 = _var(FG_TABLE, "u2")
    u3 = _var(FG_TABLE, "u3")
    cof = ideal_membership_cofactors()
    targets = {"u2*F": u2 * F, "u3*F": u3 * F, "u2*G": u2 * G, "u3*G": u3 * G}
    members_ok = len(cof) == 4 and all(
        A * F1 + B * G1 == targets[name] * MultiPoly.const(FG_TABLE, d)
        for name, (A, B, d) in cof.items()
    )
    ok = planted_ok and generic_nonzero and disp_ok and members_ok
    report(capsys, 8, ok,
           "C = 0 on 50 planted (linear)(quadratic)^2 quintics, C != 0 on 50 "
           "generic; F/G displays; 4 ideal memberships with cofactors")


def test_criterion_09_mobius_degrees(capsys):
    ok = True
    for n in range(3, 7):
        for family in ("cyclic", "semicyclic"):
            y2 = None if n <= 4 else [2, 3, 5, 7, 11, 13][:n]
            m = mobius_polynomial(n, family, y2)
            ok = ok and m.degree_r2 == delta_count(n, family)
            if family == "semicyclic":
                ok = ok and mobius_prestrip_degree(m) == n * 2 ** (n - 2)
                ok = ok and mobius_prestrip_leading(m) == 1
    report(capsys, 9, ok,
           "stripped Moebius degrees match Delta_n / Delta'_n for n in 3..6; "
           "pre-strip M' monic of degree n*2^(n-2)")


def test_criterion_10_enumeration_counts(capsys):
    pent = enumerate_areas([1.0, 1.01, 0.99, 1.02, 0.98], family="cyclic")
    k2s = sorted(s.K2 for s in pent)
    pent_ok = len(k2s) == 7 and all(b - a > 1e-9
                                    for a, b in zip(k2s, k2s[1:]))
    semi = enumerate_areas([20.0, 20.5, 21.0, 21.5, 2.0], family="semicyclic")
    semi_ok = len(semi) == 15
    ok = pent_ok and semi_ok
    report(capsys, 10, ok,
           "near-equal pentagon: 7 distinct K^2; long-edge semicyclic "
           "hexagon: 15 solutions")


def test_criterion_11_mplcty_optional(capsys):
    budget = float(os.environ.get("HERONION_MPLCTY_BUDGET", "600"))
    rep = mplcty_divisibility_check(budget)
    if rep["status"] == "skipped":
        with capsys.disabled():
            print("CRITERION 11: SKIP - u2-multiplicity of Res(F,G) "
                  "exceeded the %.0fs budget (optional)" % budget)
        pytest.skip("optional-expensive check skipped on budget")
    ok = (rep["status"] == "passed" and rep["u2_power"] == 7
          and rep["divisible_by_u2^7"] and not rep["divisible_by_u2^8"])
    report(capsys, 11, ok,
           "u2^7 divides Res(F,G,u3) and u2^8 does not")
