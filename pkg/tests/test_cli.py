import json

import pytest

from isotone import ParseError
from isotone.cli import main
from isotone.fixtures import C3
from isotone.io import load_map, load_poset, map_from_doc, map_to_doc, poset_from_doc
from isotone.poset import from_covers


def run(capsys, *args):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def test_classify(capsys, data_dir):
    code, out, err = run(capsys, "classify", data_dir / "bowtie.json")
    report = json.loads(out)
    assert code == 0 and not err
    assert report["lattice"] is False and report["quasilattice"] is False
    assert report["local_complete_lattice"] is True
    code, out, _ = run(capsys, "classify", data_dir / "c3.json")
    report = json.loads(out)
    assert report["chain"] and report["lattice"] and report["complete_lattice"]


def test_classify_size_bound(capsys, data_dir):
    _, out, _ = run(capsys, "classify", data_dir / "bowtie.json", "--size-bound", "2")
    assert json.loads(out)["quasilattice"] is True


@pytest.mark.parametrize("name, error", [("malformed.json", "ParseError"), ("cycle.json", "CycleDetected"), ("missing.json", "ParseError")])
def test_classify_bad_input(capsys, data_dir, name, error):
    code, out, err = run(capsys, "classify", data_dir / name)
    assert code == 2 and out == "" and err.startswith(error)


def test_extend_modes(capsys, data_dir):
    fixture = data_dir / "c3_to_c2.json"
    code, out, _ = run(capsys, "extend", fixture, "--mode", "lower")
    doc = json.loads(out)
    assert code == 0 and doc["map"]["b"] == "0"
    assert doc["domain"] == "c3.json" and doc["codomain"] == "c2.json"
    _, out, _ = run(capsys, "extend", fixture, "--mode", "upper")
    assert json.loads(out)["map"]["b"] == "1"
    code, out, _ = run(capsys, "extend", fixture, "--mode", "greedy", "--order", "b")
    assert code == 0 and json.loads(out)["map"]["b"] == "0"


def test_extend_none_and_errors(capsys, data_dir):
    code, out, _ = run(capsys, "extend", data_dir / "v_identity.json", "--mode", "any")
    assert code == 1 and json.loads(out) == "none"
    code, out, err = run(capsys, "extend", data_dir / "v_identity.json", "--mode", "lower")
    assert code == 2 and out == "" and "CodomainNotCompleteLattice" in err
    code, _, err = run(capsys, "extend", data_dir / "v_identity.json", "--mode", "extremes")
    assert code == 2 and "NoExtremesInA" in err
    code, _, err = run(capsys, "extend", data_dir / "not_isotone.json")
    assert code == 2 and "InputNotIsotone" in err


def test_extend_output_round_trips(capsys, data_dir):
    _, out, _ = run(capsys, "extend", data_dir / "diamond_extremes.json", "--mode", "extremes")
    g = map_from_doc(json.loads(out), data_dir)
    assert g.is_total and g.extends(load_map(data_dir / "diamond_extremes.json"))


def test_enumerate(capsys, data_dir):
    code, out, _ = run(capsys, "enumerate", data_dir / "c3_to_c2.json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 2
    assert doc["bottom"]["b"] == "0" and doc["top"]["b"] == "1"
    _, out, _ = run(capsys, "enumerate", data_dir / "v_identity.json")
    doc = json.loads(out)
    assert doc["count"] == 0 and doc["members"] == [] and doc["bottom"] is None
    code, _, err = run(capsys, "enumerate", data_dir / "c3_to_c2.json", "--cap", "1")
    assert code == 2 and "CapExceeded" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "l6")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] is True and doc["theorem"] == "l6"
    code, out, _ = run(capsys, "verify", "--theorem", "t4", "--max-size", "2", "--max-x", "2")
    assert code == 1 and "counterexample" in json.loads(out)
    code, _, err = run(capsys, "verify", "--theorem", "nope")
    assert code == 2 and "UnknownTheoremId" in err
    code, _, err = run(capsys, "verify", "--theorem", "s43", "--max-size", "9")
    assert code == 2 and "CapExceeded" in err


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", 2, "--mode", "exhaustive")
    docs = json.loads(out)
    assert code == 0 and len(docs) == 3
    _, out, _ = run(capsys, "gen", 4, "--mode", "exhaustive", "--iso")
    assert len(json.loads(out)) == 16
    _, first, _ = run(capsys, "gen", 4, "--seed", 7, "--count", 2)
    _, second, _ = run(capsys, "gen", 4, "--seed", 7, "--count", 2)
    assert first == second and len(json.loads(first)) == 2
    code, out, err = run(capsys, "gen", 20, "--mode", "exhaustive")
    assert code == 2 and out == "" and "CapExceeded" in err


def test_gen_round_trip(capsys):
    _, out, _ = run(capsys, "gen", 5, "--seed", 3, "--count", 10)
    for doc in json.loads(out):
        P = poset_from_doc(doc)
        assert from_covers(P.labels, doc["covers"]) == P
        assert poset_from_doc(P.to_doc()) == P


def test_io_errors(tmp_path):
    with pytest.raises(ParseError):
        poset_from_doc({"covers": []})
    with pytest.raises(ParseError):
        poset_from_doc({"elements": ["a", 1]})
    with pytest.raises(ParseError):
        map_from_doc({"domain": C3.to_doc()})
    path = tmp_path / "inline.json"
    doc = map_to_doc(load_map_inline())
    path.write_text(json.dumps(doc))
    assert load_map(path).to_labels() == {"a": "a"}
    assert load_poset(write(tmp_path / "c3.json", C3.to_doc())) == C3


def load_map_inline():
    return map_from_doc({"domain": C3.to_doc(), "codomain": C3.to_doc(), "map": {"a": "a"}})


def write(path, doc):
    path.write_text(json.dumps(doc))
    return path
