import json

import pytest

from quandlekit import corpus
from quandlekit.cli import main
from quandlekit.group import symmetric_group
from quandlekit.quandle import make_dihedral


@pytest.fixture
def files(tmp_path):
    paths = {}

    def put(name, text):
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
        return str(p)

    put("s3.json", symmetric_group(3).to_json())
    put("r3.json", make_dihedral(3).to_json())
    put("trefoil.gauss", corpus.TREFOIL)
    put("fig8.gauss", corpus.FIGURE_EIGHT)
    put("bad.gauss", "O1+ U2+")
    put("bad.json", "{not json")
    put("notquandle.json", json.dumps({"table": [[0, 0], [0, 1]]}))
    put("ragged.json", json.dumps({"table": [[0, 1], [1]]}))
    paths["dir"] = str(tmp_path)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys, files):
    code, out, _ = run(capsys, "validate", files["r3.json"], "--json")
    assert code == 0 and json.loads(out)["valid"]
    code, out, _ = run(capsys, "validate", files["notquandle.json"], "--json")
    assert code == 1
    assert not json.loads(out)["valid"]
    assert run(capsys, "validate", files["s3.json"])[0] == 0
    assert run(capsys, "validate", files["bad.json"])[0] == 2
    assert run(capsys, "validate", files["ragged.json"])[0] == 2


def test_coset_roundtrip(capsys, files):
    out_path = files["dir"] + "/cq.json"
    side = files["dir"] + "/side.json"
    code, _, _ = run(capsys, "coset", files["s3.json"], "--subgroup", "1", "--meridian", "1",
                     "--out", out_path, "--sidecar", side)
    assert code == 0
    sidecar = json.load(open(side))
    assert len(sidecar["cosets"]) == 3 and sidecar["cosets"][0]["representative"] == 0
    code, out, _ = run(capsys, "validate", out_path, "--json")
    assert code == 0
    code, out, _ = run(capsys, "color", files["trefoil.gauss"], out_path, "--json")
    assert code == 0 and json.loads(out)["colorings"] == 9


def test_coset_centrality_violation(capsys, files):
    code, _, err = run(capsys, "coset", files["s3.json"], "--subgroup", "1", "--meridian", "2")
    assert code == 3 and "centrality" in err
    code, out, _ = run(capsys, "coset", files["s3.json"], "--subgroup", "1", "--meridian", "2", "--force")
    assert code in (0, 1)
    assert "diagnostics" in out


def test_color(capsys, files):
    code, out, _ = run(capsys, "color", files["trefoil.gauss"], files["r3.json"])
    assert code == 0 and out.strip() == "9"
    code, out, _ = run(capsys, "color", files["fig8.gauss"], files["r3.json"], "--threads", "3")
    assert out.strip() == "3"
    assert run(capsys, "color", files["bad.gauss"], files["r3.json"])[0] == 2


def test_budget_exit(capsys, files):
    code, _, err = run(capsys, "color", files["fig8.gauss"], files["r3.json"], "--budget", "2")
    assert code == 4 and "budget" in err


def test_adconj_modes(capsys, files):
    code, out, _ = run(capsys, "adconj", files["r3.json"], "--json")
    assert code == 0 and json.loads(out) == {"rank": 1, "torsion": []}
    code, out, _ = run(capsys, "adconj", files["r3.json"], "--inn", "--json")
    assert json.loads(out)["order"] == 6
    code, out, _ = run(capsys, "adconj", files["r3.json"], "--present")
    data = json.loads(out)
    assert len(data["generators"]) == 3
    code, out, _ = run(capsys, "adconj", files["r3.json"], "--stabilizer-index", "0", "--json")
    assert code == 0 and json.loads(out)["index"] == 3
    assert run(capsys, "adconj", files["r3.json"], "--stabilizer-index", "7")[0] == 3


def test_tc_cap_exit(capsys, files):
    code, _, err = run(capsys, "adconj", files["r3.json"], "--stabilizer-index", "0", "--tc-cap", "1")
    assert code == 6


def test_crosscheck(capsys, files):
    code, out, _ = run(capsys, "crosscheck", files["trefoil.gauss"], files["s3.json"], "1", "--json")
    r = json.loads(out)
    assert code == 0 and r["colorings"] == r["reps"] == 9 and r["match"]
    assert run(capsys, "crosscheck", files["trefoil.gauss"], files["s3.json"], "99")[0] == 3


def test_enumerate(capsys, files):
    code, out, _ = run(capsys, "enumerate", "3", "--json")
    assert code == 0 and len(json.loads(out)) == 3
    code, out, _ = run(capsys, "enumerate", "4", "--threads", "2")
    assert out.startswith("7 quandles")
    code, _, err = run(capsys, "enumerate", "6")
    assert code == 6


def test_elements(capsys, files):
    code, out, _ = run(capsys, "elements", files["s3.json"], "--json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 6 and rows[0]["index"] == 0


def test_env_fallback(capsys, files, monkeypatch):
    monkeypatch.setenv("QF_BUDGET", "2")
    assert run(capsys, "color", files["fig8.gauss"], files["r3.json"])[0] == 4
