import json

from blocktrans.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_human(capsys):
    code, out = run(capsys, "classify", "--group", "PGL3(5)")
    assert code == 0
    assert "PD" in out and "block=2" in out and "block=4" in out
    assert "exceptional" in out and "block=5" in out


def test_classify_json_round_trip(capsys):
    code, out = run(capsys, "--format", "json", "classify", "--group", "M10")
    assert code == 0
    data = json.loads(out)
    assert data["case"] == "rank1"
    assert data["actions"][0]["block_size"] == 2
    # numeric fields agree with the human rendering
    code, human = run(capsys, "classify", "--group", "M10")
    assert "block=2" in human and "classes=2" in human


def test_classify_raw_params(capsys):
    code, out = run(capsys, "classify", "--family", "PSL2", "--q", "9",
                    "--tg", "2", "--eg", "2", "--rg", "1")
    assert code == 0
    assert "block=2" in out


def test_formula_phi_k(capsys):
    code, out = run(capsys, "formula", "phi_k", "--k", "2", "--t", "12")
    assert code == 0 and out.strip() == "8"


def test_formula_rank1(capsys):
    code, out = run(capsys, "--format", "json", "formula", "rank1",
                    "--family", "PSU3", "--p", "2", "--e", "21",
                    "--eg", "14")
    assert code == 0
    data = json.loads(out)
    assert data["d_G"] == 7 and data["h"]["7"] == 6


def test_metacyclic_cmd(capsys):
    code, out = run(capsys, "--format", "json", "metacyclic", "--N", "63",
                    "--m", "3", "--a", "4", "--k", "-2", "--l", "0",
                    "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["covers"]["3"] == {"count": 2, "classes": 2}


def test_usage_error_exit_code(capsys):
    assert main(["classify", "--group", "Nonsense(4)"]) == 2
    assert main(["frobnicate"]) == 2


def test_verify_single_certificate(capsys, tmp_path):
    from blocktrans.verify import certificate_for
    cert = certificate_for("Table1:row1")
    p = tmp_path / "m11.cert"
    p.write_text(cert.dumps())
    code, out = run(capsys, "verify", "--certificate", str(p))
    assert code == 0
    assert "verified-brute-force" in out


def test_verify_failure_exit_code(capsys, tmp_path):
    from blocktrans.verify import certificate_for
    cert = certificate_for("Table1:row1")
    text = cert.dumps().replace("pair=18", "pair=19")
    p = tmp_path / "bad.cert"
    p.write_text(text)
    code, out = run(capsys, "verify", "--certificate", str(p))
    assert code == 1
