"""Golden-file access: canonical text serializations of the named area
polynomials shipped with the package, with content hashes recorded in
docs/golden_hashes.json."""

from __future__ import annotations

import hashlib
from importlib import resources

from .poly_core import MultiPoly, from_text

GOLDEN_NAMES = (
    "alpha3",
    "beta4",
    "beta4_star",
    "alpha5",
    "beta6",
    "beta6_star",
    "alpha_semi_2",
    "alpha_semi_3",
    "alpha_semi_4",
    "alpha_semi_5",
    "alpha_semi_6",
    "beta_semi_4",
    "beta_semi_4_star",
    "beta_semi_6",
    "beta_semi_6_star",
)

_CACHE: dict = {}


def golden_text(name: str) -> str:
    if name not in GOLDEN_NAMES:
        raise KeyError("unknown golden polynomial %r" % name)
    path = resources.files("heronion") / "golden" / (name + ".txt")
    return path.read_text()


def golden_hash(name: str) -> str:
    return hashlib.sha256(golden_text(name).encode()).hexdigest()


def load_golden(name: str) -> MultiPoly:
    if name not in _CACHE:
        _CACHE[name] = from_text(golden_text(name))
    return _CACHE[name]


def area_polynomial_name(family: str, n: int, parity: int = 0):
    """Golden name for the polynomial vanishing on a solution of the
    given family/edge count/parity, or None when not available."""
    if family == "cyclic":
        if n == 3:
            return "alpha3"
        if n == 4:
            return "beta4" if parity >= 0 else "beta4_star"
        if n == 5:
            return "alpha5"
        if n == 6:
            return "beta6" if parity >= 0 else "beta6_star"
        return None
    if family == "semicyclic":
        if 2 <= n <= 6:
            return "alpha_semi_%d" % n
        return None
    return None
