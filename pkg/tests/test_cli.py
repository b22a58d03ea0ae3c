import io
import json

import pytest

from nilorbits.cli import main, young_rows
from nilorbits.core import AlgebraDescriptor, Dim, MultiplicityDatum, Sig


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_enumerate_json():
    code, out, _ = run("enumerate", "--family", "sp_r", "--n", "1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["algebra"] == {"family": "sp_r", "n": 1}
    assert len(obj["data"]) == 3
    assert [d["stable"] for d in obj["data"]] == [True, False, False]


def test_enumerate_byte_stable():
    args = ("enumerate", "--family", "so_r", "--p", "3", "--q", "2", "--format", "json")
    assert run(*args)[1] == run(*args)[1]


def test_enumerate_csv_header():
    code, out, _ = run("enumerate", "--family", "sl_r", "--n", "3", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "family,params,datum,stable,gibbs,reason"
    assert len(lines) == 4
    assert lines[1].startswith("sl_r,n=3,")


def test_enumerate_text():
    code, out, _ = run("enumerate", "--family", "so_r", "--p", "2", "--q", "1")
    assert code == 0 and "+-+" in out


def test_classify_su():
    code, out, _ = run("classify", "--family", "su", "--p", "1", "--q", "1",
                       "--datum", '{"entries":[{"r":1,"sig":[1,0]}]}', "--format", "json")
    rec = json.loads(out)["data"][0]
    assert code == 0
    assert rec["stable"] is False
    assert rec["gibbs"] == "NotDeterminedByThisCriterion"


def test_classify_datum_with_algebra(tmp_path):
    f = tmp_path / "d.json"
    f.write_text('{"family":"sp_r","n":2,"entries":[{"r":1,"sig":[1,1]}]}')
    code, out, _ = run("classify", "--datum", str(f), "--format", "json")
    rec = json.loads(out)["data"][0]
    assert code == 0 and rec["stable"] and rec["gibbs"] == "NoGibbsStates"


@pytest.mark.parametrize("argv", [
    ("classify", "--family", "su", "--p", "1", "--q", "1", "--datum", "{bad"),
    ("classify", "--family", "su", "--p", "1", "--q", "1", "--datum", '{"entries":[{"r":1,"sig":[2,0]}]}'),
    ("classify", "--family", "sl_r", "--n", "2", "--datum", '{"family":"sl_r","n":3,"entries":[]}'),
    ("enumerate", "--family", "so_r", "--n", "3"),
    ("enumerate", "--family", "complex", "--n", "3"),
    ("enumerate",),
    ("table1", "--max-dim", "0"),
])
def test_validation_errors(argv):
    assert run(*argv)[0] == 2


def _write(tmp_path, obj):
    f = tmp_path / "m.json"
    f.write_text(json.dumps(obj))
    return str(f)


def test_matrix_check_zero(tmp_path):
    path = _write(tmp_path, {"alg": {"family": "sl_r", "n": 2}, "matrix": [["0", "0"], ["0", "0"]]})
    code, _, err = run("matrix-check", "--input", path)
    assert code == 2 and "x must be nonzero" in err


def test_matrix_check_unsupported(tmp_path):
    path = _write(tmp_path, {"alg": {"family": "sl_h", "n": 2}, "matrix": [["0", "1"], ["0", "0"]]})
    assert run("matrix-check", "--input", path)[0] == 2


def test_matrix_check_sp4(tmp_path):
    path = _write(tmp_path, {"alg": {"family": "sp_r", "n": 2},
                             "matrix": [["0", "1", "0", "0"], ["0", "0", "0", "0"],
                                        ["0", "0", "0", "0"], ["0", "0", "-1", "0"]]})
    code, out, _ = run("matrix-check", "--input", path, "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj["stable"] and obj["datum"] == {"entries": [{"r": 1, "sig": [1, 1]}]}
    assert obj["conjugator"] is not None


def test_matrix_check_su_with_form(tmp_path):
    path = _write(tmp_path, {"alg": {"family": "su", "p": 1, "q": 1},
                             "form": [["0", "i"], ["-i", "0"]],
                             "matrix": [["0", "1"], ["0", "0"]]})
    code, out, _ = run("matrix-check", "--input", path, "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["stable"] is False
    assert obj["datum"] != obj["datum_of_negative"]


def test_matrix_check_so21_components(tmp_path):
    path = _write(tmp_path, {"alg": {"family": "so_r", "p": 2, "q": 1},
                             "matrix": [["0", "1", "1"], ["-1", "0", "0"], ["1", "0", "0"]]})
    code, out, _ = run("matrix-check", "--input", path, "--format", "json", "--seed", "4")
    obj = json.loads(out)
    assert code == 0 and obj["stable"] is False
    assert obj["conjugator_components"] == [-1, -1]


def test_matrix_check_bad_matrix(tmp_path):
    path = _write(tmp_path, {"alg": {"family": "sl_r", "n": 2}, "matrix": [["0", "x"], ["0", "0"]]})
    assert run("matrix-check", "--input", path)[0] == 2


def test_table1():
    code, out, _ = run("table1", "--format", "json", "--max-dim", "5")
    rows = json.loads(out)
    assert code == 0
    assert all(s["discrepancies"] == 0 for r in rows for s in r["spot"])


def test_selftest_small():
    code, out, _ = run("selftest", "--max-dim", "3")
    assert code == 0 and "selftest passed" in out


def test_young_rows():
    alg = AlgebraDescriptor.so_r(4, 3)
    assert young_rows(alg, MultiplicityDatum.of({2: Sig(1, 0), 1: Dim(2)})) == "+-+ oo oo"
    assert young_rows(alg, MultiplicityDatum.of({0: Sig(0, 2)})) == "- -"
