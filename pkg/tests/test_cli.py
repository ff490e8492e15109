import json

import pytest

from otarrange.cli import catalog, main
from otarrange.cli.report import run_report
from otarrange.errors import UnknownCatalogName


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    for name in ("A3", "X3", "X2", "nonFano"):
        assert name in out


def test_catalog_entry_json(capsys):
    code, out, _ = run(capsys, "catalog", "A3", "--json")
    assert code == 0
    assert len(json.loads(out)["matrix"]) == 6


def test_unknown_name(capsys):
    code, _, err = run(capsys, "info", "nope")
    assert code == 1 and err
    with pytest.raises(UnknownCatalogName):
        catalog("nope")


def test_usage_errors(capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "check", "no-such-check", "A3")[0] == 1


def test_load_roundtrip(tmp_path, capsys):
    p = tmp_path / "a.json"
    p.write_text(json.dumps(catalog("X3").to_json()))
    code, out, _ = run(capsys, "load", str(p))
    assert code == 0 and "n=6" in out


def test_load_bad_files(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "load", str(bad))[0] == 1
    assert run(capsys, "load", str(tmp_path / "missing.json"))[0] == 1
    zero = tmp_path / "zero.json"
    zero.write_text(json.dumps({"matrix": [[0, 0, 0], [1, 0, 0]]}))
    assert run(capsys, "load", str(zero))[0] == 1


def test_poincare(capsys):
    code, out, _ = run(capsys, "poincare", "A3", "--json")
    assert code == 0 and json.loads(out)["pi"] == [1, 6, 11, 6]


def test_info_supersolvable(capsys):
    code, out, _ = run(capsys, "info", "A3", "--json")
    data = json.loads(out)
    assert data["supersolvable"] and sorted(data["exponents"]) == [1, 2, 3]


def test_circuits_and_flats(capsys):
    code, out, _ = run(capsys, "circuits", "A3", "--json")
    assert code == 0 and len(json.loads(out)) == 7
    code, out, _ = run(capsys, "flats", "A3", "--json")
    assert code == 0 and len(json.loads(out)) == 1 + 6 + 7 + 1


def test_check_x3(capsys):
    code, out, _ = run(capsys, "check", "bc-modular,factorization", "X3", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["summary"]["invariant_violations"] == 0
    assert all(r["status"] == "ok" for r in rep["checks"])


def _strip(rep):
    rep = dict(rep)
    rep.pop("timings")
    return rep


def test_report_deterministic_and_parallel():
    A = catalog("A3")
    r1, c1 = run_report(A, D=5)
    r2, c2 = run_report(A, D=5)
    r3, c3 = run_report(A, D=5, jobs=2)
    assert c1 == c2 == c3 == 0
    assert _strip(r1) == _strip(r2) == _strip(r3)
    assert r1["schema"] == "otarrange.report/1"


def test_report_flats_filter(capsys):
    code, out, _ = run(capsys, "check", "factorization", "A3", "--flats", "1,2,4", "--json")
    rep = json.loads(out)
    assert code == 0 and len(rep["checks"]) == 1
