"""Numeric model of inscribed polygons.

A configuration is a radius r and vertex quotients q_1..q_n with
product q_1...q_n = delta (+1: the polygon closes up; -1: it closes onto
the antipode, i.e. one extra side is a diameter).  Quotients are either
unit-modulus complex numbers or negative reals (the small-radius branch,
where the "polygon" is an algebraic configuration rather than a drawing).

enumerate_areas walks every edge-direction sign pattern, locates closure
radii by bracketed bisection on the signed half-angle sum, and reports
one solution per (pattern, angle-sum level) up to orientation reversal.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import comb
from typing import Sequence

from . import symgen
from .poly_core import MultiPoly, VarTable


class GeomError(Exception):
    pass


def delta_count(n: int, family: str) -> int:
    """Generic number of distinct squared areas (degree in 16K^2)."""
    if family == "cyclic":
        if n < 3:
            raise GeomError("cyclic requires n >= 3")
        v = Fraction(n, 2) * comb(n - 1, (n - 1) // 2) - 2 ** (n - 2)
    elif family == "semicyclic":
        if n < 2:
            raise GeomError("semicyclic requires n >= 2")
        v = Fraction(n, 2) * comb(n - 1, (n - 1) // 2)
    else:
        raise GeomError("unknown family %r" % family)
    assert v.denominator == 1
    return int(v)


@dataclass(frozen=True)
class PolygonConfig:
    n: int
    delta: int
    r: object  # positive real (float or Fraction)
    q: tuple

    def __post_init__(self):
        if self.delta not in (1, -1):
            raise GeomError("delta must be +-1")
        if len(self.q) != self.n:
            raise GeomError("expected %d quotients" % self.n)

    @property
    def exact(self) -> bool:
        return isinstance(self.r, (int, Fraction)) and all(
            isinstance(qi, (int, Fraction)) for qi in self.q
        )

    @property
    def r2(self):
        return self.r * self.r

    @property
    def sides2(self) -> tuple:
        r2 = self.r2
        if self.exact:
            return tuple(r2 * (2 - qi - Fraction(1, 1) / qi) for qi in self.q)
        return tuple((r2 * (2 - qi - 1 / qi)).real for qi in self.q)

    @property
    def sigma(self) -> tuple:
        return tuple(symgen.elementary_symmetric(list(self.sides2)))

    @property
    def tau(self) -> symgen.TauVector:
        return symgen.TauVector.from_quotients(list(self.q))

    @property
    def sixteen_K2(self):
        t = self.tau.tau
        v = t[1] - self.delta * t[self.n - 1]
        r2 = self.r2
        if self.exact:
            return -(r2 * r2) * v * v
        return (-(r2 * r2) * v * v).real

    @property
    def K2(self):
        return self.sixteen_K2 / 16

    def signed_area(self) -> float:
        """Shoelace area of the vertex chain; independent cross-check of
        the quotient-based formula (unit-modulus branch only)."""
        v = complex(self.r)
        total = 0.0
        pts = [v]
        for qi in self.q:
            v = v * complex(qi)
            pts.append(v)
        if self.delta == -1:
            pts.append(complex(self.r))  # close across the diameter
        for a, b in zip(pts, pts[1:]):
            total += (a.conjugate() * b).imag
        return total / 2


def config_from_angles(
    n: int, delta: int, angles: Sequence[float] | None = None,
    negative_reals: Sequence | None = None, r=1.0,
    allow_degenerate: bool = False,
) -> PolygonConfig:
    """Build a configuration from n-1 free quotients; the last quotient
    is solved from the closure product."""
    if (angles is None) == (negative_reals is None):
        raise GeomError("give exactly one of angles / negative_reals")
    if angles is not None:
        if len(angles) != n - 1:
            raise GeomError("need n-1 angles")
        qs = [cmath.exp(1j * a) for a in angles]
        prod = 1
        for qi in qs:
            prod *= qi
        qs.append(delta / prod)
    else:
        if len(negative_reals) != n - 1:
            raise GeomError("need n-1 quotient values")
        if any(v >= 0 for v in negative_reals):
            raise GeomError("negative-real branch requires q_i < 0")
        qs = list(negative_reals)
        prod = 1
        for qi in qs:
            prod = prod * qi
        last = Fraction(delta) / prod if isinstance(prod, (int, Fraction)) else delta / prod
        if last >= 0:
            raise GeomError("closure quotient is not on the negative-real branch")
        qs.append(last)
    cfg = PolygonConfig(n, delta, r, tuple(qs))
    if not allow_degenerate:
        for a2 in cfg.sides2:
            if not (a2 > 0):
                raise GeomError("degenerate edge (a^2 <= 0)")
    return cfg


def crossing_parity(config: PolygonConfig) -> int:
    """Sign of prod(1 - q_i); 0 for odd n.  Distinguishes the two
    branches of the even-n area polynomial."""
    if config.n % 2 == 1:
        return 0
    prod = 1
    for qi in config.q:
        if 1 - qi == 0:
            raise GeomError("zero-length edge")
        prod = prod * (1 - qi)
    if config.exact:
        return 1 if prod > 0 else -1
    prod = complex(prod)
    if abs(prod.imag) > 1e-6 * max(1.0, abs(prod)):
        raise GeomError("crossing product is not real: %r" % prod)
    return 1 if prod.real > 0 else -1


def semicyclic_parity(config: PolygonConfig) -> int:
    """Sign of the real product e_1 * e_{n/2} / 2 for even-n semicyclic
    configurations; 0 for odd n by convention."""
    if config.delta != -1:
        raise GeomError("semicyclic parity needs delta = -1")
    if config.n % 2 == 1:
        return 0
    de = symgen.de_coeffs(config.tau)
    prod = de.e[1] * de.e[config.n // 2] / 2
    if config.exact:
        return (prod > 0) - (prod < 0)
    prod = complex(prod)
    if abs(prod.imag) > 1e-6 * max(1.0, abs(prod)):
        raise GeomError("parity product is not real: %r" % prod)
    return (prod.real > 0) - (prod.real < 0)


# -- enumeration ---------------------------------------------------------------


@dataclass(frozen=True)
class AreaSolution:
    sides: tuple
    r: float
    q: tuple
    K2: float
    parity: int
    branch: str

    def to_record(self) -> dict:
        return {
            "sides": list(self.sides),
            "r": self.r,
            "q": [[complex(qi).real, complex(qi).imag] for qi in self.q],
            "K2": self.K2,
            "parity": self.parity,
            "branch": self.branch,
        }


def _bisect(fn, lo, hi, flo, tol):
    tol = min(tol, 1e-14)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if fm == 0.0 or hi - lo < tol * max(1.0, abs(mid)):
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _upper_branch_solutions(sides, delta, tol):
    n = len(sides)
    rmin = max(sides) / 2
    out = []
    grid = [rmin] + [rmin * (1 + 10 ** g) for g in _linspace(-12, 7, 700)]
    for pattern in iproduct((1, -1), repeat=n):

        def angle_sum(r, pattern=pattern):
            return sum(
                eps * math.asin(min(1.0, a / (2 * r)))
                for eps, a in zip(pattern, sides)
            )

        npos = sum(1 for e in pattern if e > 0)
        if delta == 1:
            # k = 0 occurs for mixed sign patterns (e.g. the circumcenter
            # outside an obtuse triangle); negative k are the k > 0 levels
            # of the negated pattern.
            levels = [k * math.pi for k in range(0, n)]
        else:
            levels = [(2 * k + 1) * math.pi / 2 for k in range(n)]
        levels = [L for L in levels if L < npos * math.pi / 2 + 1e-9]
        if not levels:
            continue
        vals = [angle_sum(r) for r in grid]
        for L in levels:
            if abs(vals[0] - L) < 1e-9:
                # Root sits on the domain boundary r = max(a)/2, where the
                # longest side subtends a straight angle (it is a diameter).
                q = tuple(
                    cmath.exp(2j * eps * math.asin(min(1.0, a / (2 * rmin))))
                    for eps, a in zip(pattern, sides)
                )
                out.append((rmin, q))
            for (r0, v0), (r1, v1) in zip(
                zip(grid, vals), zip(grid[1:], vals[1:])
            ):
                if (
                    (v0 - L) != 0
                    and ((v0 - L) > 0) != ((v1 - L) > 0)
                    # reject sign flips within rounding noise (exactly
                    # cancelling side patterns at the L = 0 level decay
                    # like 1/r^3 and never truly cross)
                    and max(abs(v0 - L), abs(v1 - L)) > 1e-13
                ):
                    r = _bisect(lambda rr: angle_sum(rr) - L, r0, r1, v0 - L, tol)
                    q = tuple(
                        cmath.exp(2j * eps * math.asin(min(1.0, a / (2 * r))))
                        for eps, a in zip(pattern, sides)
                    )
                    out.append((r, q))
    return out


def _lower_branch_solutions(sides, delta, tol):
    n = len(sides)
    if (-1) ** n != delta:
        return []
    rmax = min(sides) / 2
    out = []
    grid = [rmax * (1 - 10 ** g) for g in _linspace(-12, -0.001, 700)]
    grid.sort()
    for pattern in iproduct((1, -1), repeat=n):

        def log_prod(r, pattern=pattern):
            s = 0.0
            for eps, a in zip(pattern, sides):
                A = (a / r) ** 2 - 2
                root = (A + math.sqrt(max(0.0, A * A - 4))) / 2
                s += eps * math.log(root)
            return s

        vals = [log_prod(r) for r in grid]
        for (r0, v0), (r1, v1) in zip(zip(grid, vals), zip(grid[1:], vals[1:])):
            if v0 == 0 or (v0 > 0) != (v1 > 0):
                r = _bisect(log_prod, r0, r1, v0, tol)
                q = []
                for eps, a in zip(pattern, sides):
                    A = (a / r) ** 2 - 2
                    root = (A + math.sqrt(max(0.0, A * A - 4))) / 2
                    q.append(-root if eps > 0 else -1 / root)
                out.append((r, tuple(q)))
    return out


def _linspace(a, b, num):
    step = (b - a) / (num - 1)
    return [a + i * step for i in range(num)]


def enumerate_areas(
    sides: Sequence[float], family: str = "cyclic", tol: float = 1e-12
) -> list[AreaSolution]:
    """All areas realizable from the given side lengths: the large-radius
    branch (unit-modulus quotients) plus the small-radius branch
    (negative-real quotients, squared area <= 0), deduplicated up to
    orientation reversal and sorted by K^2."""
    sides = tuple(float(s) for s in sides)
    if any(s <= 0 for s in sides):
        raise GeomError("sides must be positive")
    delta = 1 if family == "cyclic" else -1
    if family not in ("cyclic", "semicyclic"):
        raise GeomError("unknown family %r" % family)
    n = len(sides)
    raw = [
        (r, q, "r>max") for r, q in _upper_branch_solutions(sides, delta, tol)
    ] + [(r, q, "r<min") for r, q in _lower_branch_solutions(sides, delta, tol)]

    sols = []
    seen = []
    for r, q, branch in raw:
        cfg = PolygonConfig(n, delta, r, q)
        K2 = cfg.K2
        key_fwd = tuple(sorted(_round_c(qi) for qi in q))
        key_rev = tuple(sorted(_round_c(1 / qi) for qi in q))
        key = (round(r, 8), min(key_fwd, key_rev))
        dup = False
        for k2s, ks in seen:
            if ks == key and abs(k2s - K2) < 1e-8 * max(1.0, abs(K2)):
                dup = True
                break
        if dup:
            continue
        seen.append((K2, key))
        if delta == 1:
            parity = crossing_parity(cfg) if n % 2 == 0 else 0
        else:
            parity = semicyclic_parity(cfg) if n % 2 == 0 else 0
        sols.append(AreaSolution(sides, r, q, K2, parity, branch))
    sols.sort(key=lambda s: (s.K2, s.r))
    return sols


def _round_c(z):
    z = complex(z)
    return (round(z.real, 7), round(z.imag, 7))


def max_threads() -> int:
    try:
        return max(1, int(os.environ.get("HERONION_THREADS", "1")))
    except ValueError:
        return 1


# -- Moebius radius polynomials ------------------------------------------------


@dataclass(frozen=True)
class MobiusPoly:
    """Polynomial relation between r^2 and the squared half-sides
    y_j^2 = (a_j/2)^2.  For n <= 4 it is fully symbolic; for n >= 5 the
    y_j^2 must be supplied as exact integers and the result is the exact
    univariate polynomial in r^2 at those values."""

    n: int
    family: str
    poly: MultiPoly
    stripped_power: int
    y_squares: tuple | None = None

    @property
    def degree_r2(self) -> int:
        return self.poly.degree_in("r2")


_SYMBOLIC_LIMIT = 4


def mobius_polynomial(
    n: int, family: str = "cyclic", y_squares: Sequence[int] | None = None
) -> MobiusPoly:
    if not 3 <= n <= 7:
        raise GeomError("mobius polynomial supported for 3 <= n <= 7")
    if family not in ("cyclic", "semicyclic"):
        raise GeomError("unknown family %r" % family)
    if y_squares is None and n > _SYMBOLIC_LIMIT:
        raise GeomError(
            "full symbolic expansion is supported for n <= %d; "
            "pass integer y_squares for larger n" % _SYMBOLIC_LIMIT
        )
    if y_squares is not None and len(y_squares) != n:
        raise GeomError("need %d squared half-sides" % n)

    symbolic = y_squares is None
    sqnames = ["Y%d" % (j + 1) for j in range(n)] if symbolic else []
    xnames = ["x%d" % (j + 1) for j in range(n)]
    ynames = ["y%d" % (j + 1) for j in range(n)]
    # x_j, y_j are the radical symbols sqrt(r^2 - y_j^2) and y_j; their
    # squares reduce to polynomials, so all flags stay 0/1.
    table = VarTable(
        ["r2"] + sqnames + xnames + ynames,
        [2] * (1 + len(sqnames)) + [1] * (2 * n),
    )
    r2 = MultiPoly.var(table, "r2")
    for j in range(n):
        ysq = (
            MultiPoly.var(table, "Y%d" % (j + 1))
            if symbolic
            else MultiPoly.const(table, int(y_squares[j]))
        )
        table.add_reduction("x%d" % (j + 1), r2 - ysq)
        table.add_reduction("y%d" % (j + 1), ysq)

    want_parity = 1 if family == "cyclic" else 0  # y-count parity per term
    acc = MultiPoly.const(table, 1)
    for eps_tail in iproduct((1, -1), repeat=n - 1):
        eps = (1,) + eps_tail
        terms: dict = {}
        for mask in range(1 << n):
            k = mask.bit_count()
            if k % 2 != want_parity:
                continue
            coeff = (-1) ** ((k - want_parity) // 2)
            e = [0] * len(table.names)
            for j in range(n):
                if mask >> j & 1:
                    coeff *= eps[j]
                    e[table.index["y%d" % (j + 1)]] = 1
                else:
                    e[table.index["x%d" % (j + 1)]] = 1
            terms[tuple(e)] = coeff
        acc = acc * MultiPoly(table, terms)

    # all radical flags must have cancelled to even powers
    xy = [table.index[nm] for nm in xnames + ynames]
    assert all(all(e[i] == 0 for i in xy) for e in acc.terms)
    assert acc.den2 == 0

    out_names = ["r2"] + ["y%dsq" % (j + 1) for j in range(n)]
    out_table = VarTable(out_names, [1] * len(out_names)) if symbolic else VarTable(
        ["r2"], [1]
    )
    strip = min(e[0] for e in acc.terms)
    out_terms = {}
    for e, c in acc.terms.items():
        ne = (e[0] - strip,) + (tuple(e[1 : 1 + n]) if symbolic else ())
        out_terms[ne] = c
    poly = MultiPoly(out_table, out_terms)
    return MobiusPoly(
        n, family, poly, strip, None if symbolic else tuple(int(v) for v in y_squares)
    )


def mobius_prestrip_degree(m: MobiusPoly) -> int:
    return m.degree_r2 + m.stripped_power


def mobius_prestrip_leading(m: MobiusPoly) -> Fraction:
    """Leading coefficient in r^2 before stripping (a constant for the
    semicyclic family, which is monic)."""
    i = m.poly.table.index["r2"]
    d = m.degree_r2
    lead = [
        (e, c) for e, c in m.poly.terms.items() if e[i] == d
    ]
    if len(lead) == 1 and all(
        v == 0 for k, v in enumerate(lead[0][0]) if k != i
    ):
        return Fraction(lead[0][1], 1 << m.poly.den2)
    raise GeomError("leading r^2 coefficient is not constant")
