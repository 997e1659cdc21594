import itertools
import math
import json

import pytest

from isotone import CapExceeded, UnknownTheoremId, extension
from isotone.fixtures import A2, BOWTIE, C2, DIAMOND
from isotone.oracle import (
    LABELED_COUNTS,
    THEOREMS,
    UNLABELED_COUNTS,
    canonical_form,
    canonical_key,
    check_theorem,
    count_isotone_maps,
    count_posets_by_filter,
    enumerate_isotone_maps,
    enumerate_posets,
    is_isomorphic,
    iso_posets,
    isotone_partial_maps,
    labeled_posets,
    replay,
    theorem_caps,
)
from isotone.poset import Poset


@pytest.mark.parametrize("n", range(0, 6))
def test_labeled_counts(n):
    posets = labeled_posets(n)
    assert len(posets) == LABELED_COUNTS[n]
    assert len(set(posets)) == len(posets)


@pytest.mark.parametrize("n", range(1, 5))
def test_labeled_counts_match_relation_filter(n):
    assert count_posets_by_filter(n) == len(labeled_posets(n))


@pytest.mark.parametrize("n", range(0, 7))
def test_iso_counts(n):
    assert len(iso_posets(n)) == UNLABELED_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 5))
def test_iso_classes_partition_labeled(n):
    classes = {canonical_key(P) for P in labeled_posets(n)}
    assert len(classes) == UNLABELED_COUNTS[n]
    assert classes == {canonical_key(P) for P in iso_posets(n)}


def test_canonical_form_is_invariant():
    for perm in itertools.permutations(range(4)):
        assert canonical_form(DIAMOND.permuted(list(perm))).key() == canonical_form(DIAMOND).key()
    assert is_isomorphic(BOWTIE, BOWTIE.dual())
    assert not is_isomorphic(DIAMOND, BOWTIE)


def test_stream_modes():
    assert len(list(enumerate_posets(2))) == 3
    assert len(list(enumerate_posets(1))) == 1
    assert len(list(enumerate_posets(3))) == 19
    first = [P.to_doc() for P in enumerate_posets(4, "random", seed=7, count=2)]
    again = [P.to_doc() for P in enumerate_posets(4, "random", seed=7, count=2)]
    assert first == again and len(first) == 2
    with pytest.raises(CapExceeded):
        enumerate_posets(20)


def test_isotone_map_examples():
    C2ab = Poset.chain(2)
    assert sorted(f.values for f in enumerate_isotone_maps(C2ab, C2)) == [(0, 0), (0, 1), (1, 1)]
    assert sum(1 for _ in enumerate_isotone_maps(A2, C2)) == 4
    assert sum(1 for _ in enumerate_isotone_maps(C2ab, A2)) == 2
    with pytest.raises(CapExceeded):
        next(enumerate_isotone_maps(Poset.antichain(7), DIAMOND, cap=1000))


@pytest.mark.parametrize("X", [P for n in range(1, 4) for P in iso_posets(n)], ids=str)
@pytest.mark.parametrize("Y", [P for n in range(1, 4) for P in iso_posets(n)], ids=str)
def test_three_counting_routes_agree(X, Y):
    filtered = sum(1 for _ in enumerate_isotone_maps(X, Y))
    assert filtered == count_isotone_maps(X, Y)
    assert filtered == sum(1 for _ in isotone_partial_maps(X, X.all_mask, Y))


def test_registry_ids():
    assert set(THEOREMS) == {"t4", "c2.11", "c6", "t5", "l6", "l3", "t10", "s43", "t46", "t53"}
    with pytest.raises(UnknownTheoremId):
        check_theorem("t99")
    with pytest.raises(CapExceeded):
        theorem_caps("s43", {"max_size": 9})
    assert theorem_caps("t4", {"max_size": 3}) == {"max_y": 3, "max_x": 4}


@pytest.mark.parametrize("theorem", ["s43", "l6", "t10", "t5", "c6"])
def test_fast_theorems_pass(theorem):
    result = check_theorem(theorem)
    assert result.passed, result.counterexample
    assert result.checked > 0
    doc = result.to_dict()
    assert set(doc) == {"theorem", "caps", "pass", "checked", "millis"}
    json.dumps(doc)


def test_s43_scans_all_labeled_posets():
    assert check_theorem("s43").checked == sum(LABELED_COUNTS[1:6])


def test_small_caps_are_honoured():
    result = check_theorem("t4", {"max_y": 2, "max_x": 3})
    assert result.passed and result.caps == {"max_y": 2, "max_x": 3}
    assert result.checked < check_theorem("t4", {"max_y": 3, "max_x": 3}).checked


def test_caps_too_small_to_witness_the_converse():
    # the antichain codomain needs a three-point domain (V) to exhibit failure
    result = check_theorem("t4", {"max_y": 2, "max_x": 2})
    assert not result.passed
    assert result.counterexample["subject"] == A2.to_doc()
    assert "within caps" in result.counterexample["reason"]


def test_broken_extender_is_caught_and_replayed(monkeypatch):
    real = extension.extend_exists

    def forgetful(f):
        # pretend nothing extends once two points are left open
        if f.domain.n - f.defined_mask.bit_count() >= 2:
            return None
        return real(f)

    monkeypatch.setattr(extension, "extend_exists", forgetful)
    result = check_theorem("t4", {"max_y": 2, "max_x": 3})
    assert not result.passed
    cx = result.counterexample
    assert cx["subject"] and "reason" in cx
    assert replay(result) == {k: v for k, v in cx.items() if k != "subject"}
    monkeypatch.setattr(extension, "extend_exists", real)
    assert replay(result) is None


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(1, 6))
def test_chain_map_counts_are_binomial(n, m):
    # isotone maps C_n -> C_m are multisets of size n from m values
    assert count_isotone_maps(Poset.chain(n), Poset.chain(m)) == math.comb(m + n - 1, n)
