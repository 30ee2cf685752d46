import json

from abacus_sf import cli
from abacus_sf.verifier import VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_core(capsys):
    code, out, _ = run(capsys, "core", "--r", "3", "--lambda", "7,7,4,4,1")
    assert code == 0
    assert out.strip() == "1,1"


def test_quotient_formats(capsys):
    code, out, _ = run(capsys, "quotient", "--r", "3", "--lambda", "7,7,4,4,1")
    assert code == 0
    assert out.strip() == "((2,1),(2),(2))"
    code, out, _ = run(capsys, "quotient", "--r", "3", "--lambda", "7,7,4,4,1", "--json")
    assert json.loads(out) == [[2, 1], [2], [2]]


def test_sign_verbs(capsys):
    code, out, _ = run(capsys, "sign", "--r", "2",
                       "--lambda", "9,8,8,7,6,5,5,5,5,4,3,2,2,1")
    assert code == 0 and out.strip() == "+1"
    code, out, _ = run(capsys, "barsign", "--lambda", "11,9,8,7,6,4,2")
    assert code == 0 and out.strip() == "-1"


def test_bar_verbs(capsys):
    code, out, _ = run(capsys, "barcore", "--lambda", "11,9,8,7,6,4,2")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "barquotient", "--lambda", "11,9,8,7,6,4,2")
    assert code == 0 and out.strip() == "((3,2),(4,4,2))"
    code, out, _ = run(capsys, "double", "--lambda", "4,2,1")
    assert code == 0 and out.strip() == "5,4,4,1"


def test_empty_partition(capsys):
    code, out, _ = run(capsys, "core", "--r", "2", "--lambda", "")
    assert code == 0 and out.strip() == "()"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "core", "--r", "3", "--lambda", "1,2")
    assert code == 2 and "not a partition" in err
    code, _, err = run(capsys, "core", "--r", "3", "--lambda", "1,x")
    assert code == 2 and "malformed" in err
    code, _, err = run(capsys, "barcore", "--lambda", "3,3")
    assert code == 2
    code, _, err = run(capsys, "core", "--r", "1", "--lambda", "2,1")
    assert code == 2


def test_abacus_render(capsys):
    code, out, _ = run(capsys, "abacus", "--r", "3", "--lambda", "7,7,4,4,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "( 0)   1  ( 2)"
    assert lines[2] == "( 6) ( 7)   8 "
    assert lines[4] == "(12)  13   14 "
    code, out, _ = run(capsys, "abacus", "--bar", "--lambda", "11,9,8,7,6,4,2")
    lines = out.splitlines()
    assert lines[0] == "  0    1  ( 2)"
    assert lines[2] == "( 6) ( 7) ( 8)"


def test_schur_output(capsys):
    code, out, _ = run(capsys, "schur", "--lambda", "2")
    assert code == 0 and out.strip() == "1/2*p[2] + 1/2*p[1,1]"
    code, out, _ = run(capsys, "schur", "--lambda", "2", "--json")
    assert out.strip() == (
        '[{"index":[2],"num":"1","den":"2"},{"index":[1,1],"num":"1","den":"2"}]')


def test_qfn_output(capsys):
    code, out, _ = run(capsys, "qfn", "--lambda", "3,1", "--json")
    assert code == 0
    assert out.strip() == (
        '[{"index":[3,1],"num":"-4","den":"3"},{"index":[1,1,1,1],"num":"4","den":"3"}]')


def test_plethysm_json_record_format(capsys):
    code, out, _ = run(capsys, "plethysm", "--r", "2", "--rect", "1,1", "--json")
    assert code == 0
    assert out.strip() == '[{"index":[2],"num":"1","den":"1"},{"index":[1,1],"num":"-1","den":"1"}]'


def test_plethysm_argument_exclusivity(capsys):
    code, _, err = run(capsys, "plethysm", "--r", "2")
    assert code == 2
    code, _, err = run(capsys, "plethysm", "--r", "2", "--rect", "1,1", "--lambda", "1")
    assert code == 2


def test_json_output_is_stable(capsys):
    _, first, _ = run(capsys, "plethysm", "--r", "3", "--lambda", "2,1", "--json")
    _, second, _ = run(capsys, "plethysm", "--r", "3", "--lambda", "2,1", "--json")
    assert first == second


def test_phi_output(capsys):
    code, out, _ = run(capsys, "phi", "--lambda", "7,5,3,1")
    assert code == 0 and out.strip() == "8*P(1)*S(2,1,1)*q^1"
    code, out, _ = run(capsys, "phi", "--lambda", "7,5,3,1", "--json")
    assert json.loads(out) == [
        {"b0": [1], "b1": [2, 1, 1], "q": 1, "num": "8", "den": "1"}]


def test_apply_output(capsys):
    code, out, _ = run(capsys, "apply", "--op", "f", "--i", "1", "--lambda", "4,3,1")
    assert code == 0 and out.strip() == "P(5,3,1) + P(4,3,2)"
    code, out, _ = run(capsys, "apply", "--op", "e", "--i", "0", "--lambda", "4,3,1")
    assert out.strip() == "P(4,3) + P(4,2,1)"


def test_family_output(capsys):
    code, out, _ = run(capsys, "family", "--base", "lambda", "--ell", "2", "--m", "1")
    assert code == 0 and out.splitlines() == ["5,1", "4,2"]
    code, out, _ = run(capsys, "family", "--base", "delta", "--ell", "1", "--m", "1",
                       "--json")
    assert json.loads(out) == [[2], [1, 1]]


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "main", "--ell", "2", "--m", "1", "--analytic")
    assert code == 0 and "verified" in out
    code, _, err = run(capsys, "verify", "main", "--ell", "2")
    assert code == 2 and "requires" in err


def test_verify_json_and_out(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "sign-lemma", "--n", "2", "--m", "2",
                       "--json", "--out", str(target))
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["identity"] == "sign-lemma"
    assert payload[0]["verdict"] == "verified"
    assert json.loads(target.read_text())[0]["params"] == {"n": 2, "m": 2}


def test_degree_cap_flag(capsys):
    code, _, err = run(capsys, "--max-degree", "4", "verify", "main",
                       "--ell", "6", "--m", "3", "--analytic")
    assert code == 2 and "cap" in err
    code, _, err = run(capsys, "--max-degree", "4", "schur", "--lambda", "3,2")
    assert code == 2


def test_degree_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("ABACUS_SF_MAX_DEGREE", "1")
    code, _, err = run(capsys, "schur", "--lambda", "2")
    assert code == 2
    monkeypatch.setenv("ABACUS_SF_MAX_DEGREE", "30")
    code, _, _ = run(capsys, "schur", "--lambda", "2")
    assert code == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    failed = VerificationReport("main", {"ell": 2, "m": 1}, "structural",
                                "failed", "synthetic witness", 0.0)
    monkeypatch.setattr("abacus_sf.verifier.verify_main", lambda *a, **k: failed)
    code, out, _ = run(capsys, "verify", "main", "--ell", "2", "--m", "1")
    assert code == 1
    assert "synthetic witness" in out


def test_verify_all_smoke(capsys, monkeypatch):
    # shrink the aggregate ranges so the smoke test stays fast
    from abacus_sf import verifier

    real = verifier.verify_all

    def small(max_ell=6, max_degree=18, **kw):
        return real(max_ell=2, max_degree=8, max_plethysm_size=2,
                    max_balanced_area=2, max_littlewood_size=2)

    monkeypatch.setattr("abacus_sf.verifier.verify_all", small)
    code, out, _ = run(capsys, "verify", "all", "--max-ell", "2")
    assert code == 0
    assert "verified" in out and "failed" not in out
