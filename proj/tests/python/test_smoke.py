import json
import pathlib
import subprocess
from fractions import Fraction

import pytest

import eqspin

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def test_fermat_headline_numbers():
    fermat = eqspin.fermat_quartic()
    spin = eqspin.spin_number(fermat)
    assert spin["rational"] and spin["value"] == 2 and spin["sign"] == "positive"
    q = eqspin.quotient(fermat)
    assert q["sigma"] == -4 and q["euler"] == 12 and q["integral"]
    assert eqspin.k_vector(fermat) == [2, 0, 0]
    assert eqspin.verdict(fermat)["outcome"] == "NoObstruction"


def test_dataset_from_path_and_text():
    path = DATA / "fermat.json"
    assert eqspin.verdict(path)["spin"]["value"] == "2"
    assert eqspin.spin_number(path.read_text())["value"] == 2
    assert eqspin.normalize(path) == eqspin.fermat_quartic()


def test_trivial_actions_never_pass():
    for name in ("trivial_negative_spin", "trivial_equal_counts", "trivial_lift_exclusion"):
        report = eqspin.verdict(DATA / f"{name}.json")
        assert report["outcome"] == "Contradiction", name
    report = eqspin.verdict(DATA / "trivial_negative_spin.json")
    assert report["prop41"] == {"kernel_rank": 1, "sw_value": 0}
    assert any(r["anchor"] == "morgan-szabo" for r in report["reasons"])
    assert eqspin.verdict(DATA / "free_action.json")["outcome"] == "ConstraintViolation"


def test_enumeration():
    assert eqspin.enumerate_pseudofree_p3(3) == [(0, 12), (3, 6), (6, 0)]
    assert eqspin.enumerate_pseudofree_p3(1) == [(0, 3)]
    assert eqspin.enumerate_pseudofree_p3(3, True) == []
    with pytest.raises(eqspin.InvalidParameters):
        eqspin.enumerate_pseudofree_p3(2)


def test_prop41_instance():
    report = eqspin.verify_prop41(3, [2, 2, 2], [2, 1, 1], 1)
    assert report["dimension"] == 18 and report["kernel_rank"] == 1
    assert report["spanned_by_top"] and report["a_forced_zero"] and report["sw_value"] == 0
    assert not eqspin.verify_prop41(3, [2, 0, 0], [0, 0, 0], 1)["hypotheses_met"]


def test_errors():
    with pytest.raises(eqspin.DatasetError) as info:
        eqspin.verdict(DATA / "malformed.json")
    assert "not an odd prime" in str(info.value)
    assert isinstance(info.value, ValueError)
    bad = eqspin.fermat_quartic()
    bad["isolated"][0]["epsilon"] = 1
    bad["isolated"][1]["epsilon"] = 1
    bad["isolated"][2]["epsilon"] = 1
    with pytest.raises(eqspin.NonIntegralKVector):
        eqspin.k_vector(bad)


def test_irrational_spin_estimate():
    d = eqspin.fermat_quartic()
    d["p"] = 5
    d["isolated"] = [{"l_alpha": 1, "l_beta": 1, "epsilon": 1}]
    spin = eqspin.spin_number(d)
    assert not spin["rational"] and spin["sign"] == "unknown-irrational"
    assert spin["estimate"].startswith("-0.72360679")


def test_cli_json_round_trip(tmp_path):
    cli = pytest.importorskip("shutil").which("eqspin") or str(
        pathlib.Path(__file__).resolve().parents[2] / "build" / "tools" / "eqspin"
    )
    if not pathlib.Path(cli).exists():
        pytest.skip("command-line tool not built")
    out = subprocess.run([cli, "verdict", str(DATA / "fermat.json"), "--format", "json"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out) == eqspin.verdict(DATA / "fermat.json")
    batch = [cli, "verdict", "--batch", str(DATA), "--format", "json"]
    first = subprocess.run(batch, capture_output=True, text=True).stdout
    second = subprocess.run(batch, capture_output=True, text=True).stdout
    assert first == second
    assert [entry["file"] for entry in json.loads(first)] == sorted(p.name for p in DATA.glob("*.json"))
