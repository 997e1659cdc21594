"""Acceptance criteria, one test per criterion.

Run ``python3 tests/test_acceptance.py`` for a one-line PASS/FAIL summary per
criterion, or collect it with pytest like any other module.
"""

from __future__ import annotations

import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from isotone import extension, fixtures, oracle
from isotone.extension import MonotoneMap
from isotone.poset import Poset, iter_bits, powerset_lattice

DATA = Path(__file__).parent / "data"
SEED = 20240611


def _theorem(theorem_id):
    result = oracle.check_theorem(theorem_id)
    detail = f"checked={result.checked} {result.millis}ms"
    if not result.passed:
        detail += f" counterexample={result.counterexample}"
    return result.passed, detail


def criterion_1():
    """Finite quasilattices are lattices: all labeled posets up to 5 points."""
    return _theorem("s43")


def criterion_2():
    """Complete lattice codomain <=> every partial isotone map extends, with lower/upper bounds."""
    return _theorem("t4")


def criterion_3():
    """The extension family is a lattice with bottom/top the lower/upper extensions."""
    return _theorem("c2.11")


def criterion_4():
    """All retraction problems solvable <=> every component is a chain."""
    return _theorem("t10")


def criterion_5():
    """Quasilattice codomain <=> greedy always succeeds."""
    return _theorem("t46")


def criterion_6():
    """Local complete lattice <=> extremes-preserving extensions always exist."""
    return _theorem("t53")


def criterion_7():
    """A retract of a complete lattice is a complete lattice."""
    return _theorem("l3")


def _random_pair(rng):
    X = oracle.random_poset(int(rng.integers(1, 5)), rng)
    Y = oracle.random_poset(int(rng.integers(1, 5)), rng)
    return X, Y


def criterion_8():
    """Poset counts, and filter vs recursive isotone-map counts on 200 random pairs."""
    counts = tuple(len(oracle.labeled_posets(n)) for n in range(1, 6))
    if counts != (1, 3, 19, 219, 4231):
        return False, f"labeled counts {counts}"
    rng = np.random.default_rng(SEED)
    for k in range(200):
        X, Y = _random_pair(rng)
        filtered = sum(1 for _ in oracle.enumerate_isotone_maps(X, Y))
        counted = oracle.count_isotone_maps(X, Y)
        if filtered != counted:
            return False, f"pair {k}: filter {filtered} vs recursion {counted}"
    return True, "counts 1,3,19,219,4231; 200 map-count pairs agree"


LATTICE_POOL = [
    Poset.chain(1),
    Poset.chain(2),
    Poset.chain(3),
    Poset.chain(4),
    fixtures.DIAMOND,
    fixtures.PENTAGON,
    fixtures.M3,
    powerset_lattice("abc"),
]


def random_isotone_map(X: Poset, Y: Poset, rng) -> tuple:
    # Walk a linear extension; each point takes a random value above the
    # images of the points below it.  Y has a top, so candidates never run out.
    vals = [0] * X.n
    for x in X.linear_extension():
        cand = Y.all_mask
        for t in iter_bits(X.down[x] & ~(1 << x)):
            cand &= Y.up[vals[t]]
        choices = list(iter_bits(cand))
        vals[x] = choices[int(rng.integers(len(choices)))]
    return tuple(vals)


def random_instance(rng) -> MonotoneMap:
    Y = LATTICE_POOL[int(rng.integers(len(LATTICE_POOL)))]
    X = oracle.random_poset(int(rng.integers(1, 7)), rng)
    total = random_isotone_map(X, Y, rng)
    A = int(rng.integers(1 << X.n))
    return MonotoneMap(X, Y, tuple(v if A >> i & 1 else None for i, v in enumerate(total)))


def criterion_9():
    """Upper extension equals the lower extension of the dual problem, on 500 random instances."""
    rng = np.random.default_rng(SEED)
    for k in range(500):
        f = random_instance(rng)
        upper = extension.upper_extension(f).values
        transported = extension.lower_extension(f.dual()).values
        if upper != transported:
            return False, f"instance {k}: {f!r} upper {upper} vs dual-lower {transported}"
    return True, "500 instances agree elementwise"


CLI_CORPUS = [
    (["classify", "c3.json"], 0),
    (["classify", "a2.json"], 0),
    (["classify", "v.json"], 0),
    (["classify", "lambda.json"], 0),
    (["classify", "diamond.json"], 0),
    (["classify", "bowtie.json"], 0),
    (["classify", "malformed.json"], 2),
    (["classify", "cycle.json"], 2),
    (["extend", "c3_to_c2.json", "--mode", "lower"], 0),
    (["extend", "c3_to_c2.json", "--mode", "upper"], 0),
    (["extend", "c3_to_c2.json", "--mode", "greedy"], 0),
    (["extend", "v_identity.json", "--mode", "any"], 1),
    (["extend", "v_identity.json", "--mode", "greedy"], 1),
    (["extend", "v_identity.json", "--mode", "lower"], 2),
    (["extend", "v_to_bowtie.json", "--mode", "any"], 1),
    (["extend", "diamond_extremes.json", "--mode", "extremes"], 0),
    (["extend", "v_identity.json", "--mode", "extremes"], 2),
    (["extend", "not_isotone.json", "--mode", "any"], 2),
    (["enumerate", "c3_to_c2.json"], 0),
    (["gen", "2", "--mode", "exhaustive"], 0),
    (["gen", "4", "--mode", "random", "--seed", "7", "--count", "2"], 0),
    (["gen", "20", "--mode", "exhaustive"], 2),
]


def run_cli(args):
    proc = subprocess.run(
        [sys.executable, "-m", "isotone", *args], cwd=DATA, capture_output=True
    )
    return proc.returncode, proc.stdout, proc.stderr


def criterion_10():
    """CLI fixture corpus: expected exit codes, byte-identical stdout across two runs."""
    for args, code in CLI_CORPUS:
        first, second = run_cli(args), run_cli(args)
        if first[0] != code:
            return False, f"{' '.join(args)}: exit {first[0]}, expected {code}"
        if first[:2] != second[:2]:
            return False, f"{' '.join(args)}: output differs between runs"
        if code == 2 and (first[1] or not first[2]):
            return False, f"{' '.join(args)}: errors must go to stderr only"
    return True, f"{len(CLI_CORPUS)} invocations stable"


CRITERIA = [globals()[f"criterion_{k}"] for k in range(1, 11)]


def _report(k, fn):
    start = time.perf_counter()
    ok, detail = fn()
    took = time.perf_counter() - start
    print(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'} ({took:.1f}s) {fn.__doc__.strip()} [{detail}]")
    return ok, detail


@pytest.mark.parametrize("k", range(1, 11))
def test_criterion(k):
    ok, detail = _report(k, CRITERIA[k - 1])
    assert ok, detail


if __name__ == "__main__":
    results = [_report(k, fn)[0] for k, fn in enumerate(CRITERIA, start=1)]
    sys.exit(0 if all(results) else 1)
