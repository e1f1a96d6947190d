"""Symmetric-function layer: elementary symmetric functions, Fibonacci
polynomials, the d/e linear combinations of vertex-quotient symmetric
functions, and the coefficient-wise residual of the main generating
identity relating side-length and vertex-quotient symmetric functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .poly_core import MultiPoly, VarTable

_X_TABLE = VarTable(["x"], [1])


def elementary_symmetric(values: Sequence) -> list:
    """[e0=1, e1, ..., ek] by the stable product recurrence; exact on
    exact inputs."""
    out = [1]
    for v in values:
        out.append(0)
        for j in range(len(out) - 1, 0, -1):
            out[j] = out[j] + v * out[j - 1]
    return out


def fibonacci_poly(k: int) -> MultiPoly:
    """F_k(x) counting compositions of k by 1s and 2s; F_0 = 1, F_k = 0
    for k < 0, and F_k = F_{k-1} + x F_{k-2}."""
    if k < 0:
        return MultiPoly.zero(_X_TABLE)
    terms = {(i,): comb(k - i, i) for i in range(k // 2 + 1)}
    return MultiPoly(_X_TABLE, terms)


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class TauVector:
    """tau_0..tau_n: elementary symmetric functions of the vertex
    quotients; tau_0 = 1 and tau_n = delta."""

    n: int
    tau: tuple

    @classmethod
    def from_quotients(cls, qs: Sequence) -> "TauVector":
        return cls(len(qs), tuple(elementary_symmetric(qs)))

    @property
    def delta(self):
        return self.tau[self.n]


@dataclass(frozen=True)
class DECoeffs:
    d: tuple
    e: tuple


def de_coeffs(tau: TauVector) -> DECoeffs:
    """The antisymmetric (d_k) and symmetric (e_k) linear combinations of
    the tau_j, for 0 <= k <= n/2.  Binomials with a negative lower index
    are taken to be zero."""
    n = tau.n
    t = tau.tau
    d = []
    e = []
    for k in range(n // 2 + 1):
        dk = 0
        ek = 0
        for i in range(k + 1):
            sgn = -1 if i % 2 else 1
            dk += sgn * _binom(n - 1 - 2 * k + i, i) * (t[k - i] - t[n - k + i])
            ek += (
                sgn
                * (_binom(n - 2 * k + i, i) + _binom(n - 2 * k + i - 1, i - 1))
                * (t[k - i] + t[n - k + i])
            )
        d.append(dk)
        e.append(ek)
    return DECoeffs(tuple(d), tuple(e))


def de_generating_form(tau: TauVector) -> DECoeffs:
    """Same coefficients via the Fibonacci-polynomial generating forms;
    independent of de_coeffs, used as a cross-check."""
    n = tau.n
    t = tau.tau
    m = n // 2
    d = [0] * (m + 1)
    e = [0] * (m + 1)
    for i in range(m + 1):
        fd = fibonacci_poly(n - 2 * i - 1)
        for (j,), c in fd.terms.items():
            k = i + j
            if k <= m:
                d[k] += (t[i] - t[n - i]) * ((-1) ** j) * c
        fe = fibonacci_poly(n - 2 * i)
        fe2 = fibonacci_poly(n - 2 * i - 2)
        coeffs: dict[int, int] = {}
        for (j,), c in fe.terms.items():
            coeffs[j] = coeffs.get(j, 0) + ((-1) ** j) * c
        for (j,), c in fe2.terms.items():
            coeffs[j + 1] = coeffs.get(j + 1, 0) - ((-1) ** j) * c
        for j, c in coeffs.items():
            k = i + j
            if k <= m:
                e[k] += (t[i] + t[n - i]) * c
    return DECoeffs(tuple(d), tuple(e))


def _quarter(exact: bool):
    return Fraction(1, 4) if exact else 0.25


def identity_sides(config) -> tuple[list, list]:
    """LHS and RHS coefficient lists (degree n in x) of the main identity
    for one configuration."""
    qs = list(config.q)
    n = len(qs)
    delta = config.delta
    exact = all(isinstance(q, (int, Fraction)) for q in qs) and isinstance(
        config.r2, (int, Fraction)
    )
    r2 = config.r2 if exact else float(config.r2)
    quarter = _quarter(exact)

    a2 = [r2 * (2 - q - 1 / (Fraction(q) if exact else q)) for q in qs]
    sigma = elementary_symmetric(a2)
    lhs = [delta * ((-1) ** i) * sigma[i] for i in range(n + 1)]

    tau = TauVector.from_quotients(qs)
    de = de_coeffs(tau)
    m = n // 2
    ecoef = [de.e[k] * r2**k for k in range(m + 1)]
    dcoef = [de.d[k] * r2**k for k in range(m + 1)]

    rhs = [0] * (n + 2)
    for i in range(m + 1):
        for j in range(m + 1):
            if i + j < len(rhs):
                rhs[i + j] += quarter * ecoef[i] * ecoef[j]
            dd = dcoef[i] * dcoef[j]
            if i + j + 1 < len(rhs):
                rhs[i + j + 1] += r2 * dd
            if i + j < len(rhs):
                rhs[i + j] -= quarter * dd
    assert abs(complex(rhs[n + 1])) < 1e-9 * max(
        1.0, max(abs(complex(c)) for c in rhs)
    ) or rhs[n + 1] == 0
    return lhs, rhs[: n + 1]


def main_identity_residual(config) -> float | Fraction:
    """Max absolute coefficient difference between the two sides of the
    main identity, normalized by the largest coefficient magnitude.
    Exactly zero (as a Fraction) on exact rational configurations."""
    lhs, rhs = identity_sides(config)
    exact = all(isinstance(c, (int, Fraction)) for c in lhs + rhs)
    if exact:
        diff = max(abs(a - b) for a, b in zip(lhs, rhs))
        scale = max(max(abs(c) for c in lhs), Fraction(1))
        return diff / scale
    diff = max(abs(complex(a) - complex(b)) for a, b in zip(lhs, rhs))
    scale = max(max(abs(complex(c)) for c in lhs), 1.0)
    return diff / scale
