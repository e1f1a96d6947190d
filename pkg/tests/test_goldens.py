"""The shipped golden polynomials: hashes match the recorded manifest,
and regenerating each one from the engine reproduces the file
bit-exactly.  (Expensive pipelines are memoized per process, so running
the whole suite computes each one once.)"""

import json
import pathlib

import pytest

from heronion import goldens, heron_engine
from heronion.poly_core import to_text

BUILDERS = {
    "alpha3": lambda: heron_engine.alpha_cyclic_small(3),
    "beta4": lambda: heron_engine.alpha_cyclic_small(4, 1),
    "beta4_star": lambda: heron_engine.alpha_cyclic_small(4, -1),
    "alpha5": lambda: heron_engine.alpha_cyclic_small(5),
    "beta6": lambda: heron_engine.alpha_cyclic_small(6, 1),
    "beta6_star": lambda: heron_engine.alpha_cyclic_small(6, -1),
    "alpha_semi_2": lambda: heron_engine.alpha_semicyclic(2),
    "alpha_semi_3": lambda: heron_engine.alpha_semicyclic(3),
    "alpha_semi_4": lambda: heron_engine.alpha_semicyclic(4),
    "alpha_semi_5": lambda: heron_engine.alpha_semicyclic(5),
    "alpha_semi_6": lambda: heron_engine.alpha_semicyclic(6),
    "beta_semi_4": lambda: heron_engine.alpha_semicyclic(4, "plus"),
    "beta_semi_4_star": lambda: heron_engine.alpha_semicyclic(4, "minus"),
    "beta_semi_6": lambda: heron_engine.alpha_semicyclic(6, "plus"),
    "beta_semi_6_star": lambda: heron_engine.alpha_semicyclic(6, "minus"),
}

HASHES = pathlib.Path(__file__).resolve().parent.parent / "docs" / \
    "golden_hashes.json"


def test_hash_manifest_matches_files():
    recorded = json.loads(HASHES.read_text())
    assert set(recorded) == set(goldens.GOLDEN_NAMES)
    for name in goldens.GOLDEN_NAMES:
        assert goldens.golden_hash(name) == recorded[name], name


@pytest.mark.parametrize("name", goldens.GOLDEN_NAMES)
def test_golden_regenerates_bit_exactly(name):
    regenerated = to_text(BUILDERS[name]())
    assert regenerated == goldens.golden_text(name), name


def test_loaded_goldens_parse_and_are_monic():
    for name in goldens.GOLDEN_NAMES:
        p = goldens.load_golden(name)
        assert not p.is_zero()
        assert p.is_homogeneous()
