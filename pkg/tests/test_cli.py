import json

import pytest

from finsemiring.cli import main
from finsemiring.constructions import SEMIRING_NAMES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_classification(capsys, tmp_path):
    js = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "classification", "--max-order", "3", "--json-out", str(js))
    assert code == 0
    assert 'counts: {"2": 6, "3": 2}' in out
    doc = json.loads(js.read_text())
    assert doc["overall"] == "Pass" and doc["extra"]["counts"] == {"2": 6, "3": 2}


def test_analyze_p(capsys, tmp_path):
    js = tmp_path / "p.json"
    code, out, _ = run(capsys, "analyze", "catalog:P", "--json-out", str(js))
    assert "congruence_simple: false" in out
    assert "ideal_simple: false (witness [0, 2])" in out
    assert "bi_ideal_simple: true" in out
    assert "monolith: 0 1 2 3 1" in out
    doc = json.loads(js.read_text())
    assert doc["ideal_simple"] == {"value": False, "witness": [0, 2]}
    # the Lemma2.7 failure on P is reported and sets the exit status
    assert code == 1
    statuses = {r["claim_id"]: r["status"] for r in doc["report"]["results"]}
    assert statuses["Lemma2.7"] == "Fail"
    for cid, status in statuses.items():
        tag = {"Pass": "PASS", "Fail": "FAIL", "NotApplicable": "N/A ", "Skipped-OutOfScope": "SKIP"}[status]
        assert f"[{tag}] {cid}" in out


def test_axiom_error_exit(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("2\n0 1\n1 0\n\n0 1\n1 0\n")
    code, _, err = run(capsys, "analyze", str(f))
    assert code == 2 and "witness [1, 0, 0]" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "S9"],
        ["catalog", "Q"],
        ["enumerate", "--order", "5"],
        ["export", "--name", "L2", "--out", "x.txt"],
        ["verify", "--suite", "classification", "--max-order", "7"],
        ["verify", "--suite", "semiring"],
    ],
)
def test_error_exits(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_parse_error_exit(capsys, tmp_path):
    f = tmp_path / "short.txt"
    f.write_text("3\n0 1 2\n\n0 0 0\n")
    code, _, err = run(capsys, "analyze", str(f))
    assert code == 2 and "error" in err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as e:
        main(["enumerate", "--order", "2", "--bogus"])
    assert e.value.code != 0


def test_export_analyze_round_trip(capsys, tmp_path):
    for name in SEMIRING_NAMES:
        f = tmp_path / f"{name}.txt"
        assert run(capsys, "export", "--name", name, "--out", str(f))[0] == 0
        a = run(capsys, "analyze", str(f))
        b = run(capsys, "analyze", f"catalog:{name}")
        assert a == b


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and out.split() == list(SEMIRING_NAMES) + [f"L{k}" for k in range(1, 7)]
    code, out, _ = run(capsys, "catalog", "S7")
    assert out.splitlines()[0] == "S7 (semiring); elements a b w as 0..2"


def test_enumerate_writes_directory(capsys, tmp_path):
    out_dir = tmp_path / "e"
    code, out, _ = run(
        capsys, "enumerate", "--order", "3", "--mult-idempotent", "--congruence-simple-filter", "--out", str(out_dir), "--threads", "1"
    )
    assert code == 0 and "class_count=2" in out
    assert (out_dir / "manifest.txt").exists()


def test_verify_semiring_target(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "semiring", "--target", "S7")
    assert code == 0 and "[PASS] Prop3.2" in out
