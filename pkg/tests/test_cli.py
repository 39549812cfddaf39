import json

import pytest

from ncrg.cli import EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, RunConfig, main, run


def run_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if code != EXIT_CONFIG else None)


def test_spectral_json(capsys):
    code, doc = run_json(capsys, "spectral", "--m", "4", "--signature", "2,0")
    assert code == EXIT_OK
    assert set(doc) == {"command", "config_echo", "results"}
    assert doc["config_echo"]["signature"] == [2, 0]
    assert len(doc["results"]["terms"]) == 12
    assert {"operator": "AA⊗BB", "coefficient": "1/2"} in doc["results"]["terms"]


def test_spectral_raw_table(capsys):
    assert main(["spectral", "--m", "2", "--raw", "--format", "table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("# m=2 (1/2 Tr D^m)")


@pytest.mark.parametrize("m", ["3", "8", "0"])
def test_spectral_bad_m(capsys, m):
    assert main(["spectral", "--m", m]) == EXIT_CONFIG
    assert "error" in capsys.readouterr().err


def test_bad_signature_format():
    with pytest.raises(SystemExit):
        main(["spectral", "--m", "2", "--signature", "x"])


def test_beta_hermitian1_verify(capsys):
    code, doc = run_json(capsys, "beta", "--model", "hermitian1", "--verify")
    assert code == EXIT_OK
    assert doc["golden_diff"] == {}
    assert doc["config_echo"]["signature"] == [1, 0]


def test_beta_duality_verify(capsys):
    code, doc = run_json(capsys, "beta", "--signature", "0,2", "--duality", "--verify")
    assert code == EXIT_OK
    assert doc["golden_diff"] == {}
    assert list(doc["results"]["eta"]) == ["eta"]


def test_beta_mixed_signature(capsys):
    code, doc = run_json(capsys, "beta", "--signature", "1,1")
    assert code == EXIT_OK
    assert doc["results"]["count"] == 41
    assert main(["beta", "--signature", "1,1", "--duality"]) == EXIT_CONFIG


def test_beta_verify_mismatch(monkeypatch, capsys):
    import ncrg.cli as cli
    from ncrg.scalar import Scalar

    real = cli.golden_equations

    def tampered(model, sig=None):
        gold = real(model, sig)
        gold["g4"] = gold["g4"] + Scalar.const(1)
        return gold

    monkeypatch.setattr(cli, "golden_equations", tampered)
    code, doc = run_json(capsys, "beta", "--model", "hermitian1", "--verify")
    assert code == EXIT_MISMATCH
    assert list(doc["golden_diff"]) == ["g4"]


def test_hermitian1_rejects_two_letters(capsys):
    assert main(["beta", "--model", "hermitian1", "--signature", "2,0"]) == EXIT_CONFIG


def test_kmax_validation(capsys):
    assert main(["beta", "--kmax", "0"]) == EXIT_CONFIG


def test_fixed_points_filtered(capsys, tmp_path):
    out = tmp_path / "fp.json"
    code = main(["fixed-points", "--signature", "0,2", "--seeds", "4", "--filter-relevant", "1",
                 "--exclude-marginal", "--out", str(out)])
    assert code == EXIT_OK
    doc = json.loads(out.read_text())
    pts = doc["results"]["points"]
    assert len(pts) == 1
    assert pts[0]["theta"][0] == pytest.approx(0.274913, abs=1e-5)
    assert pts[0]["eta"] == pytest.approx(-0.362543, abs=1e-5)
    assert doc["config_echo"]["exclude_marginal"] == 1e-4


def test_fixed_points_table(capsys):
    assert main(["fixed-points", "--model", "hermitian1", "--seeds", "2", "--format", "table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "eta=-0.249395" in out


def test_fixed_points_bad_seeds(capsys):
    assert main(["fixed-points", "--seeds", "0"]) == EXIT_CONFIG


def test_hk(capsys):
    code, doc = run_json(capsys, "hk", "--k", "2", "--N", "200")
    assert code == EXIT_OK
    res = doc["results"]
    assert res["relative_error"] < 0.01
    assert res["eta_slope_discrepancy"] is True
    assert 1.5 < res["error_ratio_vs_half_N"] < 3.0


@pytest.mark.parametrize("argv", [["hk", "--k", "4"], ["hk", "--k", "1", "--N", "1"]])
def test_hk_errors(capsys, argv):
    assert main(argv) == EXIT_CONFIG


def test_run_config_roundtrip():
    cfg = RunConfig("spectral", signature=(0, 2), m=2)
    doc, code = run(cfg)
    assert code == EXIT_OK
    assert RunConfig(**{**doc["config_echo"], "signature": tuple(doc["config_echo"]["signature"])}) == cfg
    assert json.loads(json.dumps(doc, default=str))["command"] == "spectral"
