"""Test the command line front end."""
# License: MIT

import json

import pytest

from stratkit import __version__
from stratkit.cli import EXIT_BUDGET
from stratkit.cli import EXIT_FAILURE
from stratkit.cli import EXIT_MALFORMED
from stratkit.cli import EXIT_OK
from stratkit.cli import main
from stratkit.io import dumps
from stratkit.io import labelled_to_json
from stratkit.io import map_to_json
from stratkit.io import poset_to_json
from stratkit.io import stratified_from_json
from stratkit.io import stratified_to_json
from stratkit.poset import Poset
from stratkit.stratified import boundary
from stratkit.stratified import horn
from stratkit.stratified import standard_simplex
from stratkit.vertical import label_subdivision
from stratkit.vertical import verticalize

P2 = Poset([0, 1], [(0, 1)])
P3 = Poset([0, 1, 2], [(0, 1), (1, 2)])


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(dumps(doc), encoding="utf-8")
        return str(path)

    return _write


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_version(capsys):
    code, out, _ = _run(capsys, ["--version"])
    assert code == EXIT_OK
    assert __version__ in out


@pytest.mark.parametrize("argv", [[], ["link"], ["homology", "--max-deg"]])
def test_bad_arguments(capsys, argv):
    assert _run(capsys, argv)[0] == EXIT_MALFORMED


def test_link(capsys, write):
    path = write("k.json", stratified_to_json(standard_simplex(P2, (0, 1))))
    code, out, _ = _run(capsys, ["link", "--in", path, "--flag", "0,1"])
    assert code == EXIT_OK
    assert "simplices" in json.loads(out)


def test_link_of_a_bad_flag(capsys, write):
    path = write("k.json", stratified_to_json(standard_simplex(P2, (0, 1))))
    code, _, err = _run(capsys, ["link", "--in", path, "--flag", "0,7"])
    assert code == EXIT_MALFORMED
    assert "malformed input" in err


def test_missing_file(capsys, tmp_path):
    missing = str(tmp_path / "missing.json")
    assert _run(capsys, ["link", "--in", missing, "--flag", "0"])[0] == EXIT_MALFORMED


def test_file_that_is_not_utf8(capsys, tmp_path):
    path = tmp_path / "k.json"
    path.write_bytes(b"\xff\xfe")
    code, _, err = _run(capsys, ["link", "--in", str(path), "--flag", "0"])
    assert code == EXIT_MALFORMED
    assert "malformed input" in err


def test_holink(capsys, write):
    path = write("k.json", stratified_to_json(standard_simplex(P2, (0, 0, 1))))
    argv = ["holink", "--in", path, "--flag", "0,1", "--dim-bound", "1"]
    code, out, _ = _run(capsys, argv)
    assert code == EXIT_OK
    dims = [entry["dim"] for entry in json.loads(out)["simplices"]]
    assert [dims.count(0), dims.count(1)] == [2, 1]


def test_homology(capsys, write):
    K, _ = boundary(P3, (0, 1, 2))
    path = write("k.json", stratified_to_json(K))
    code, out, _ = _run(capsys, ["homology", "--in", path, "--max-deg", "1"])
    assert code == EXIT_OK
    assert json.loads(out) == {"betti": [1, 1], "torsion": [[], []], "valid_up_to": None}


@pytest.mark.parametrize("kind", ["sd", "sd_P", "sd_P_naiv"])
def test_subdivide(capsys, write, kind):
    path = write("k.json", stratified_to_json(standard_simplex(P2, (0, 1))))
    code, out, _ = _run(capsys, ["subdivide", "--in", path, "--kind", kind])
    assert code == EXIT_OK
    assert json.loads(out)["simplices"]


def test_ex(capsys, write):
    path = write("k.json", stratified_to_json(standard_simplex(P2, (0,))))
    code, out, _ = _run(capsys, ["ex", "--in", path, "--dim-bound", "1"])
    assert code == EXIT_OK
    assert "poset" in json.loads(out)


def test_check_weq(capsys, write):
    _, inclusion = boundary(P3, (0, 1, 2))
    path = write("f.json", map_to_json(inclusion))
    code, out, _ = _run(capsys, ["check-weq", "--map", path, "--max-deg", "0"])
    assert code == EXIT_FAILURE
    report = json.loads(out)
    assert report["verdict"] == "refuted"
    assert report["certificate"] == [0, 1, 2]

    _, inclusion = horn(P2, (0, 0, 1), 1)
    path = write("g.json", map_to_json(inclusion))
    code, out, _ = _run(capsys, ["check-weq", "--map", path])
    assert code == EXIT_OK
    assert json.loads(out)["verdict"] == "passes-all-probes"


def test_verbose_logs_to_stderr(capsys, write):
    _, inclusion = horn(P2, (0, 0, 1), 1)
    path = write("g.json", map_to_json(inclusion))
    code, _, err = _run(capsys, ["-v", "check-weq", "--map", path])
    assert code == EXIT_OK
    assert "Probe in link mode" in err
    _, _, err = _run(capsys, ["check-weq", "--map", path])
    assert "Probe in" not in err


def test_homotopy_classes(capsys, write):
    K = stratified_to_json(standard_simplex(P2, (0, 1)))
    source, target = write("k.json", K), write("l.json", K)
    argv = ["homotopy-classes", "--source", source, "--target", target]
    code, out, _ = _run(capsys, argv)
    assert code == EXIT_OK
    assert json.loads(out)["n_classes"] == 1


def test_budget_exceeded(capsys, write):
    K = stratified_to_json(standard_simplex(P2, (0, 0, 1)))
    source, target = write("k.json", K), write("l.json", K)
    argv = ["--budget", "1", "homotopy-classes", "--source", source, "--target", target]
    code, _, err = _run(capsys, argv)
    assert code == EXIT_BUDGET
    assert "exceeded the budget of 1" in err


def test_verify_identities(capsys, write):
    path = write("p.json", poset_to_json(P2))
    code, out, _ = _run(capsys, ["verify-identities", "--poset", path, "--max-len", "2"])
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "equation\tflag\tindices\tpassed"
    assert len(lines) > 1
    assert all(line.endswith("True") for line in lines[1:])


def test_check_pairing(capsys, write):
    path = write("k.json", stratified_to_json(standard_simplex(P2, (0, 1))))
    code, out, _ = _run(capsys, ["check-pairing", "--in", path, "--build", "ex"])
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["passed"]
    assert doc["proper"] and doc["admissible"] and doc["regular"]


def test_corpus(capsys, tmp_path):
    out_path = tmp_path / "corpus.tsv"
    argv = ["--out", str(out_path), "corpus", "--filter", "simplex_01", "horn_001"]
    code, out, _ = _run(capsys, argv)
    assert code == EXIT_OK
    assert out == ""
    lines = out_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "object\tcheck\tpassed"
    assert len(lines) == 15
    checks = {line.split("\t")[1] for line in lines[1:]}
    assert {"links-and-holinks", "pairing-ex", "pairing-ex-naiv"} < checks
    assert {"admissible-horns", "last-vertex", "U-cofibrant"} < checks
    assert all(line.endswith("True") for line in lines[1:])


def test_corpus_with_an_unknown_name(capsys):
    assert _run(capsys, ["corpus", "--filter", "torus"])[0] == EXIT_MALFORMED


def test_label_sd_then_U_then_C_P(capsys, write, tmp_path):
    K = standard_simplex(P2, (0, 1))
    path = write("k.json", stratified_to_json(K))
    labelled, diagram = tmp_path / "s.json", tmp_path / "u.json"

    assert main(["--out", str(labelled), "label-sd", "--in", path]) == EXIT_OK
    argv = ["--out", str(diagram), "diagram", "--in", str(labelled), "--kind", "U"]
    assert main(argv) == EXIT_OK
    code, out, _ = _run(capsys, ["diagram", "--in", str(diagram), "--kind", "C_P"])
    assert code == EXIT_OK
    C = stratified_from_json(json.loads(out))
    assert C.counts() == verticalize(label_subdivision(K)).counts()


def test_verticalize(capsys, write):
    S = label_subdivision(standard_simplex(P2, (0, 1)))
    path = write("s.json", labelled_to_json(S))
    code, out, _ = _run(capsys, ["verticalize", "--in", path])
    assert code == EXIT_OK
    assert stratified_from_json(json.loads(out)).counts() == [4, 3]


def test_diagram_D_P(capsys, write):
    path = write("k.json", stratified_to_json(standard_simplex(P2, (0, 0, 1))))
    argv = ["diagram", "--in", path, "--kind", "D_P", "--dim-bound", "1"]
    code, out, _ = _run(capsys, argv)
    assert code == EXIT_OK
    assert set(json.loads(out)["values"]) == {"[0]", "[0,1]", "[1]"}
