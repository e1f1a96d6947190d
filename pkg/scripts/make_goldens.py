#!/usr/bin/env python3
"""Regenerate the golden polynomial files shipped in src/heronion/golden/
and record their sha256 hashes in docs/golden_hashes.json.

Run from the repository root:  python scripts/make_goldens.py
Takes several minutes; the n=5 and n=6 semicyclic eliminations dominate.
"""

import hashlib
import json
import pathlib
import time

from heronion import heron_engine
from heronion.goldens import GOLDEN_NAMES
from heronion.poly_core import to_text

ROOT = pathlib.Path(__file__).resolve().parent.parent
GOLDEN_DIR = ROOT / "src" / "heronion" / "golden"
HASH_FILE = ROOT / "docs" / "golden_hashes.json"

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


def main():
    assert set(BUILDERS) == set(GOLDEN_NAMES)
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    HASH_FILE.parent.mkdir(parents=True, exist_ok=True)
    hashes = {}
    for name in GOLDEN_NAMES:
        t0 = time.time()
        text = to_text(BUILDERS[name]())
        (GOLDEN_DIR / (name + ".txt")).write_text(text)
        hashes[name] = hashlib.sha256(text.encode()).hexdigest()
        print("%-18s %6.1fs  %s" % (name, time.time() - t0, hashes[name][:16]))
    HASH_FILE.write_text(json.dumps(hashes, indent=2, sort_keys=True) + "\n")
    print("wrote", HASH_FILE)


if __name__ == "__main__":
    main()
