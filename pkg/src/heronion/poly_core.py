"""Exact sparse multivariate polynomial arithmetic.

Coefficients are arbitrary-precision integers with a single global
power-of-two denominator per polynomial, so the quarter and half factors
showing up in the substitution formulas stay exact without leaving
integer arithmetic.  A variable table may carry quadratic reduction
rules (v**2 -> polynomial) used to adjoin square roots such as
sqrt(sigma_n); reductions are applied eagerly after every product.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class PolyError(Exception):
    pass


class TableMismatch(PolyError):
    pass


class UnknownVariable(PolyError):
    pass


class NotDivisible(PolyError):
    """Exact division failed; carries the nonzero remainder as witness."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class VarTable:
    """Ordered variable names with positive integer grading weights."""

    __slots__ = ("names", "weights", "index", "reductions")

    def __init__(self, names: Sequence[str], weights: Sequence[int]):
        names = tuple(names)
        weights = tuple(int(w) for w in weights)
        if len(names) != len(weights):
            raise ValueError("names and weights differ in length")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be strictly positive")
        self.names = names
        self.weights = weights
        self.index = {n: i for i, n in enumerate(names)}
        # var index -> (terms, den_pow2) standing for var**2
        self.reductions: dict[int, tuple[dict, int]] = {}

    def add_reduction(self, name: str, square: "MultiPoly") -> None:
        """Declare name**2 == square, applied eagerly after products."""
        i = self.index[name]
        if square.table is not self and square.table.names != self.names:
            raise TableMismatch("reduction polynomial uses a different table")
        if any(e[i] for e in square.terms):
            raise ValueError("reduction must not mention the reduced variable")
        if square.den2 != 0:
            raise ValueError("reduction polynomial must have integer coefficients")
        self.reductions[i] = dict(square.terms)

    def weight_of(self, exps: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def compatible(self, other: "VarTable") -> bool:
        return self is other or (
            self.names == other.names and self.weights == other.weights
        )

    def __repr__(self):
        return "VarTable(%r)" % (
            " ".join("%s:%d" % nw for nw in zip(self.names, self.weights)),
        )


def _grevlex_key(exps, weight):
    return (weight, tuple(-e for e in reversed(exps)))


class MultiPoly:
    """Sparse polynomial: exponent tuple -> nonzero integer coefficient,
    scaled by 2**-den2 overall.  Canonical after normalization."""

    __slots__ = ("table", "terms", "den2")

    def __init__(self, table: VarTable, terms: Mapping | None = None, den2: int = 0):
        self.table = table
        self.terms = dict(terms) if terms else {}
        self.den2 = den2
        self._normalize()

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, table: VarTable) -> "MultiPoly":
        return cls(table, {})

    @classmethod
    def const(cls, table: VarTable, c: int, den2: int = 0) -> "MultiPoly":
        if c == 0:
            return cls.zero(table)
        return cls(table, {(0,) * len(table.names): int(c)}, den2)

    @classmethod
    def var(cls, table: VarTable, name: str, power: int = 1) -> "MultiPoly":
        if name not in table.index:
            raise UnknownVariable(name)
        e = [0] * len(table.names)
        e[table.index[name]] = power
        return cls(table, {tuple(e): 1})

    @classmethod
    def from_rational(cls, table: VarTable, value: Fraction | int) -> "MultiPoly":
        value = Fraction(value)
        den = value.denominator
        k = den.bit_length() - 1
        if den != 1 << k:
            raise ValueError("coefficient denominator must be a power of two")
        return cls.const(table, value.numerator, k)

    # -- normalization ---------------------------------------------------------

    def _normalize(self):
        if self.table.reductions:
            self._reduce()
        self.terms = {e: c for e, c in self.terms.items() if c}
        if not self.terms:
            self.den2 = 0
            return
        while self.den2 > 0 and all(c % 2 == 0 for c in self.terms.values()):
            self.terms = {e: c // 2 for e, c in self.terms.items()}
            self.den2 -= 1
        if self.den2 < 0:
            scale = 1 << (-self.den2)
            self.terms = {e: c * scale for e, c in self.terms.items()}
            self.den2 = 0

    def _reduce(self):
        red = self.table.reductions
        if not any(e[i] >= 2 for e in self.terms for i in red):
            return
        out: dict = {}
        stack = list(self.terms.items())
        while stack:
            exps, coeff = stack.pop()
            hit = next((i for i in red if exps[i] >= 2), None)
            if hit is None:
                out[exps] = out.get(exps, 0) + coeff
                continue
            base = list(exps)
            base[hit] -= 2
            for re_, rc in red[hit].items():
                ne = list(base)
                for j, rj in enumerate(re_):
                    ne[j] += rj
                stack.append((tuple(ne), coeff * rc))
        self.terms = out

    # -- basics ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degree(self):
        """Max weighted degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.table.weight_of(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {self.table.weight_of(e) for e in self.terms}
        return len(degs) == 1

    def degree_in(self, name: str) -> int:
        if name not in self.table.index:
            raise UnknownVariable(name)
        i = self.table.index[name]
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def leading_term(self):
        """(exps, coeff) maximal in weighted grevlex order."""
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        w = self.table.weight_of
        e = max(self.terms, key=lambda x: _grevlex_key(x, w(x)))
        return e, self.terms[e]

    def sorted_terms(self):
        w = self.table.weight_of
        return sorted(
            self.terms.items(),
            key=lambda it: _grevlex_key(it[0], w(it[0])),
            reverse=True,
        )

    def coefficient(self, exps) -> Fraction:
        return Fraction(self.terms.get(tuple(exps), 0), 1 << self.den2)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.table.compatible(other.table)
            and self.den2 == other.den2
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.table.names, self.den2, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for e, c in self.sorted_terms()[:8]:
            mono = " ".join(
                "%s^%d" % (n, p)
                for n, p in zip(self.table.names, e)
                if p
            )
            bits.append("%+d %s" % (c, mono) if mono else "%+d" % c)
        s = " ".join(bits)
        if len(self.terms) > 8:
            s += " ... (%d terms)" % len(self.terms)
        if self.den2:
            s = "(%s) / 2^%d" % (s, self.den2)
        return "MultiPoly(%s)" % s

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if self.table.compatible(other.table):
                return other
            return lift(other, self.table)
        if isinstance(other, int):
            return MultiPoly.const(self.table, other)
        if isinstance(other, Fraction):
            return MultiPoly.from_rational(self.table, other)
        raise TableMismatch("cannot combine %r with MultiPoly" % (other,))

    def __add__(self, other):
        other = self._coerce(other)
        den = max(self.den2, other.den2)
        sa = 1 << (den - self.den2)
        sb = 1 << (den - other.den2)
        terms = {e: c * sa for e, c in self.terms.items()}
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c * sb
        return MultiPoly(self.table, terms, den)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.table, {e: -c for e, c in self.terms.items()}, self.den2)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero(self.table)
            return MultiPoly(
                self.table, {e: c * other for e, c in self.terms.items()}, self.den2
            )
        other = self._coerce(other)
        if len(self.terms) < len(other.terms):
            a, b = self, other
        else:
            a, b = other, self
        terms: dict = {}
        bt = list(b.terms.items())
        for ea, ca in a.terms.items():
            for eb, cb in bt:
                e = tuple(map(sum, zip(ea, eb)))
                terms[e] = terms.get(e, 0) + ca * cb
        return MultiPoly(self.table, terms, self.den2 + other.den2)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.table, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale2(self, k: int) -> "MultiPoly":
        """Multiply by 2**k (k may be negative)."""
        return MultiPoly(self.table, dict(self.terms), self.den2 - k)

    def derivative(self, name: str) -> "MultiPoly":
        i = self.table.index[name]
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                ne = tuple(ne)
                terms[ne] = terms.get(ne, 0) + c * e[i]
        return MultiPoly(self.table, terms, self.den2)


def lift(p: MultiPoly, table: VarTable) -> MultiPoly:
    """Re-express p in a larger table containing all of p's variables."""
    if p.table.compatible(table):
        return MultiPoly(table, p.terms, p.den2)
    try:
        pos = [table.index[n] for n in p.table.names]
    except KeyError as exc:
        raise TableMismatch("variable %s missing from target table" % exc) from exc
    n = len(table.names)
    terms = {}
    for e, c in p.terms.items():
        ne = [0] * n
        for j, ej in enumerate(e):
            ne[pos[j]] = ej
        terms[tuple(ne)] = c
    return MultiPoly(table, terms, p.den2)


def mp_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % op)


def mp_substitute(p: MultiPoly, bindings: Mapping[str, MultiPoly]) -> MultiPoly:
    """Exact composition; unbound variables pass through."""
    for name in bindings:
        if name not in p.table.index:
            raise UnknownVariable(name)
    if not bindings:
        return p
    target = next(iter(bindings.values())).table
    for v in bindings.values():
        if not target.compatible(v.table):
            raise TableMismatch("bindings use different tables")
    # passthrough variables must exist in the target table
    bound = {p.table.index[n] for n in bindings}
    sub = {p.table.index[n]: v for n, v in bindings.items()}
    passthrough = {}
    for i, n in enumerate(p.table.names):
        if i not in bound:
            if n not in target.index:
                raise TableMismatch("unbound variable %s missing from target" % n)
            passthrough[i] = MultiPoly.var(target, n)
    powers: dict[tuple[int, int], MultiPoly] = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            base = sub[i] if i in sub else passthrough[i]
            powers[key] = base**k
        return powers[key]

    acc = MultiPoly.zero(target)
    for e, c in p.terms.items():
        term = MultiPoly.const(target, c, p.den2)
        for i, ei in enumerate(e):
            if ei:
                term = term * power(i, ei)
        acc = acc + term
    return acc


def mp_eval(p: MultiPoly, point: Mapping[str, object]):
    """Evaluate at a point; exact (Fraction) when inputs are exact."""
    for n in p.table.names:
        if any(e[p.table.index[n]] for e in p.terms) and n not in point:
            raise UnknownVariable("unbound variable %s" % n)
    vals = [point.get(n, 0) for n in p.table.names]
    exact = all(isinstance(v, (int, Fraction)) for v in vals)
    total = Fraction(0) if exact else 0.0
    for e, c in p.terms.items():
        v = c if exact else float(c)
        for i, ei in enumerate(e):
            if ei:
                v = v * vals[i] ** ei
        total = total + v
    if exact:
        return total / (1 << p.den2)
    return total / float(1 << p.den2)


# -- univariate view, resultants, discriminants -------------------------------


class UniView:
    """A MultiPoly read as a univariate polynomial in one chosen variable;
    coeffs[k] is the coefficient of main_var**k (main_var zeroed out)."""

    __slots__ = ("base", "main_var", "coeffs")

    def __init__(self, base: MultiPoly, main_var: str):
        if main_var not in base.table.index:
            raise UnknownVariable(main_var)
        self.base = base
        self.main_var = main_var
        i = base.table.index[main_var]
        d = base.degree_in(main_var)
        buckets: list[dict] = [{} for _ in range(d + 1)]
        for e, c in base.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            buckets[k][tuple(ne)] = c
        self.coeffs = [MultiPoly(base.table, b, base.den2) for b in buckets]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def reassemble(self) -> MultiPoly:
        t = self.base.table
        v = MultiPoly.var(t, self.main_var)
        acc = MultiPoly.zero(t)
        for k, c in enumerate(self.coeffs):
            acc = acc + c * v**k
        return acc


def _bareiss_det(mat: list[list[MultiPoly]], table: VarTable) -> MultiPoly:
    """Fraction-free determinant; entries are MultiPolys over table."""
    n = len(mat)
    if n == 0:
        return MultiPoly.const(table, 1)
    m = [row[:] for row in mat]
    sign = 1
    prev = MultiPoly.const(table, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next(
                (r for r in range(k + 1, n) if not m[r][k].is_zero()), None
            )
            if pivot_row is None:
                return MultiPoly.zero(table)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = m[i][j] * pkk - mik * m[k][j]
                m[i][j] = exact_divide(num, prev)
            m[i][k] = MultiPoly.zero(table)
        prev = pkk
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f: UniView, g: UniView) -> list[list[MultiPoly]]:
    if f.main_var != g.main_var:
        raise PolyError("main-variable mismatch: %s vs %s" % (f.main_var, g.main_var))
    if f.base.is_zero() or g.base.is_zero():
        raise PolyError("zero polynomial input to resultant")
    table = f.base.table
    p, q = f.degree, g.degree
    if p == 0 and q == 0:
        return []
    zero = MultiPoly.zero(table)
    n = p + q
    rows = []
    fre = list(reversed(f.coeffs))  # highest power leftmost
    gre = list(reversed(g.coeffs))
    for r in range(q):
        rows.append([zero] * r + fre + [zero] * (q - 1 - r))
    for r in range(p):
        rows.append([zero] * r + gre + [zero] * (p - 1 - r))
    assert all(len(row) == n for row in rows)
    return rows


def resultant(f: UniView, g: UniView) -> MultiPoly:
    """Determinant of the Sylvester matrix, f's rows first, computed by
    fraction-free (Bareiss) elimination."""
    table = f.base.table
    p, q = f.degree, g.degree
    if p == 0 and q == 0:
        return MultiPoly.const(table, 1)
    if p == 0:
        return f.coeffs[0] ** q
    if q == 0:
        return g.coeffs[0] ** p
    return _bareiss_det(sylvester_matrix(f, g), table)


def _u_strip(coeffs: list) -> list:
    k = len(coeffs)
    while k > 0 and coeffs[k - 1].is_zero():
        k -= 1
    return coeffs[:k]


def _u_prem(A: list, B: list, table: VarTable) -> list:
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, as a
    coefficient list (low power first)."""
    c = B[-1]
    b = len(B) - 1
    e = len(A) - 1 - b + 1
    R = A[:]
    while R and len(R) - 1 >= b:
        lead = R[-1]
        shift = len(R) - 1 - b
        R = [ri * c for ri in R]
        for j, bj in enumerate(B):
            R[shift + j] = R[shift + j] - lead * bj
        R = _u_strip(R)
        e -= 1
    if e > 0:
        ce = c**e
        R = [ri * ce for ri in R]
    return R


def resultant_prs(f: UniView, g: UniView) -> MultiPoly:
    """Resultant via the subresultant pseudo-remainder sequence.  Much
    faster than the Sylvester/Bareiss route when the inputs have high
    degree in the main variable; identical output (cross-checked in the
    test suite).  Like exact_divide, valid only over free tables."""
    table = f.base.table
    if f.main_var != g.main_var:
        raise PolyError("main-variable mismatch")
    if f.base.is_zero() or g.base.is_zero():
        raise PolyError("zero polynomial input to resultant")
    A = _u_strip(f.coeffs[:])
    B = _u_strip(g.coeffs[:])
    if len(A) - 1 == 0 and len(B) - 1 == 0:
        return MultiPoly.const(table, 1)
    if len(A) - 1 == 0:
        return A[0] ** (len(B) - 1)
    if len(B) - 1 == 0:
        return B[0] ** (len(A) - 1)
    sign = 1
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2:
            sign = -sign
        A, B = B, A
    one = MultiPoly.const(table, 1)
    gc = one
    h = one
    while True:
        a = len(A) - 1
        b = len(B) - 1
        d = a - b
        if (a * b) % 2:
            sign = -sign
        R = _u_prem(A, B, table)
        if not R:
            return MultiPoly.zero(table)
        A = B
        den = gc * h**d
        B = [exact_divide(ri, den) for ri in R]
        gc = A[-1]
        if d == 0:
            pass  # h unchanged
        elif d == 1:
            h = gc
        else:
            h = exact_divide(gc**d, h ** (d - 1))
        if len(B) - 1 == 0:
            a = len(A) - 1
            res = exact_divide(B[0] ** a, h ** (a - 1)) if a > 1 else B[0]
            return res if sign == 1 else -res


def discriminant(f: UniView) -> MultiPoly:
    """(-1)^(d(d-1)/2) Res(f, f') / lc(f), exact."""
    d = f.degree
    if d < 2:
        raise PolyError("discriminant needs degree >= 2, got %d" % d)
    fp = f.base.derivative(f.main_var)
    res = resultant(f, UniView(fp, f.main_var))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    out = exact_divide(res, f.coeffs[d])
    return out if sign == 1 else -out


def exact_divide(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Quotient q with num == q*den, or NotDivisible with the remainder."""
    if den.is_zero():
        raise PolyError("division by zero polynomial")
    table = num.table
    if not table.compatible(den.table):
        den = lift(den, table)
    if num.is_zero():
        return MultiPoly.zero(table)
    de, dc = den.leading_term()
    dden2 = den.den2
    q_terms: dict = {}
    q_den2 = 0
    rem = num
    w = table.weight_of
    while rem.terms:
        ne, nc = rem.leading_term()
        diff = [a - b for a, b in zip(ne, de)]
        if any(x < 0 for x in diff):
            raise NotDivisible("leading monomial not divisible", rem)
        # coefficient ratio must be dyadic: nc/2^nden / (dc/2^dden)
        ratio = Fraction(nc, dc)
        dd = ratio.denominator
        k = dd.bit_length() - 1
        if dd != 1 << k:
            raise NotDivisible("leading coefficient not dyadic-divisible", rem)
        shift = rem.den2 - dden2 + k
        # quotient term: ratio.numerator / 2^shift * x^diff
        if shift > q_den2:
            q_terms = {e: c << (shift - q_den2) for e, c in q_terms.items()}
            q_den2 = shift
        q_terms[tuple(diff)] = q_terms.get(tuple(diff), 0) + (
            ratio.numerator << (q_den2 - shift)
        )
        qt = MultiPoly(table, {tuple(diff): ratio.numerator}, shift)
        rem = rem - qt * den
        if rem.terms:
            re_, _ = rem.leading_term()
            if _grevlex_key(re_, w(re_)) >= _grevlex_key(ne, w(ne)):
                raise NotDivisible("non-decreasing remainder", rem)
    return MultiPoly(table, q_terms, q_den2)


def poly_sqrt(p: MultiPoly) -> MultiPoly:
    """Exact square root in the polynomial ring, or NotDivisible."""
    if p.is_zero():
        return p
    le, lc = p.leading_term()
    if any(x % 2 for x in le):
        raise NotDivisible("leading monomial is not a square", p)
    # leading coefficient of the root: sqrt of lc / 2^den2
    c = Fraction(lc, 1 << p.den2)
    if c < 0:
        raise NotDivisible("negative leading coefficient", p)
    rn = _isqrt_exact(c.numerator)
    rd = _isqrt_exact(c.denominator)
    if rn is None or rd is None:
        raise NotDivisible("leading coefficient is not a square", p)
    table = p.table
    he = tuple(x // 2 for x in le)
    root = MultiPoly.from_rational(table, Fraction(rn, rd)) * MultiPoly(
        table, {he: 1}
    )
    # iterate: root += (p - root^2).lead / (2 * root.lead)
    lead = root
    while True:
        rem = p - root * root
        if rem.is_zero():
            return root
        re_, rc = rem.leading_term()
        le2, lc2 = lead.leading_term()
        diff = [a - b for a, b in zip(re_, le2)]
        if any(x < 0 for x in diff):
            raise NotDivisible("not a perfect square", rem)
        coeff = Fraction(rc, 1 << rem.den2) / (2 * Fraction(lc2, 1 << lead.den2))
        dd = coeff.denominator
        k = dd.bit_length() - 1
        if dd != 1 << k:
            raise NotDivisible("non-dyadic square root coefficient", rem)
        term = MultiPoly(table, {tuple(diff): coeff.numerator}, k)
        new_root = root + term
        if new_root == root:
            raise NotDivisible("square root iteration stalled", rem)
        root = new_root


def _isqrt_exact(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


# -- serialization -------------------------------------------------------------


def to_text(p: MultiPoly) -> str:
    lines = [
        "vars: " + " ".join("%s:%d" % nw for nw in zip(p.table.names, p.table.weights))
    ]
    if p.den2:
        lines.append("den2: %d" % p.den2)
    for e, c in p.sorted_terms():
        mono = " ".join(
            "%s^%d" % (n, k) for n, k in zip(p.table.names, e) if k
        )
        lines.append(("%+d %s" % (c, mono)).rstrip())
    if not p.terms:
        lines.append("+0")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> MultiPoly:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("vars:"):
        raise PolyError("missing vars header")
    pairs = lines[0][5:].split()
    names = [pr.rsplit(":", 1)[0] for pr in pairs]
    weights = [int(pr.rsplit(":", 1)[1]) for pr in pairs]
    table = VarTable(names, weights)
    den2 = 0
    body = lines[1:]
    if body and body[0].startswith("den2:"):
        den2 = int(body[0][5:])
        body = body[1:]
    terms = {}
    for ln in body:
        parts = ln.split()
        c = int(parts[0])
        e = [0] * len(names)
        for frag in parts[1:]:
            n, k = frag.split("^")
            e[table.index[n]] = int(k)
        if c:
            terms[tuple(e)] = c
    return MultiPoly(table, terms, den2)


def to_json(p: MultiPoly) -> str:
    doc = {
        "vars": [
            {"name": n, "weight": w} for n, w in zip(p.table.names, p.table.weights)
        ],
        "den_pow2": p.den2,
        "terms": [{"c": str(c), "e": list(e)} for e, c in p.sorted_terms()],
    }
    return json.dumps(doc)


def from_json(text: str) -> MultiPoly:
    doc = json.loads(text)
    table = VarTable(
        [v["name"] for v in doc["vars"]], [v["weight"] for v in doc["vars"]]
    )
    terms = {tuple(t["e"]): int(t["c"]) for t in doc["terms"]}
    return MultiPoly(table, terms, doc["den_pow2"])
