import json

import pytest

from qtransfer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_transfer_p_basis(capsys):
    code, report = run_json(capsys, "transfer", "--basis", "p", "--k", "1",
                            "--r", "1", "--d", "2")
    assert code == 0
    assert report["schema"] == "1"
    assert report["status"] == "pass"
    terms = report["payload"]["image"]["terms"]
    assert terms == [{"exponents": [1], "coeff": "v + v^-1"}]


def test_transfer_e_basis(capsys):
    code, report = run_json(capsys, "transfer", "--basis", "e", "--k", "2",
                            "--r", "1", "--d", "2")
    assert code == 0
    assert report["payload"]["image"]["terms"] == [
        {"exponents": [2], "coeff": "1"}]


def test_transfer_d1_identity(capsys):
    code, report = run_json(capsys, "transfer", "--basis", "p", "--k", "1",
                            "--r", "1", "--d", "1")
    assert code == 0
    assert report["payload"]["image"]["terms"] == [
        {"exponents": [1], "coeff": "1"}]


def test_transfer_schur_and_monomial(capsys):
    code, report = run_json(capsys, "transfer", "--basis", "schur",
                            "--mu", "1,1", "--r", "1", "--d", "2")
    assert code == 0
    assert report["payload"]["image"]["terms"] == [
        {"exponents": [2], "coeff": "1"}]
    code, report = run_json(capsys, "transfer", "--basis", "monomial",
                            "--w", "1,1", "--r", "1", "--d", "2")
    assert code == 0
    assert report["payload"]["image"]["terms"] == [
        {"exponents": [2], "coeff": "1"}]


def test_usage_error_exit_2(capsys):
    code, report = run_json(capsys, "transfer", "--basis", "p",
                            "--r", "1", "--d", "2")
    assert code == 2
    assert report["status"] == "error"


def test_bad_flag_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["transfer", "--basis", "zzz", "--r", "1", "--d", "1"])
    assert exc.value.code == 2


def test_verify_comb_prop(capsys):
    code, report = run_json(capsys, "verify", "--suite", "comb-prop",
                            "--dmax", "5")
    assert code == 0
    assert report["status"] == "pass"
    assert report["payload"]["comb-prop"]["ok"]


def test_verify_transfer_consistency(capsys):
    code, report = run_json(capsys, "verify", "--suite",
                            "transfer-consistency", "--nmax", "4",
                            "--degmax", "3")
    assert code == 0
    cases = report["payload"]["transfer-consistency"]["cases"]
    assert all(c["ok"] for c in cases)


def test_verify_weyl_vanishing(capsys):
    code, report = run_json(capsys, "verify", "--suite", "weyl-vanishing",
                            "--dmax", "4")
    assert code == 0


def test_verify_ep_shadow_small(capsys):
    code, report = run_json(capsys, "verify", "--suite", "ep-shadow",
                            "--n", "3", "--q", "2")
    assert code == 0
    assert report["payload"]["ep-shadow"]["ok"]


def test_verify_workers_flag(capsys):
    code, report = run_json(capsys, "verify", "--suite", "comb-prop",
                            "--dmax", "4", "--workers", "2")
    assert code == 0


def test_finite_gl_dl(capsys):
    code, report = run_json(capsys, "finite-gl", "--d", "2", "--q", "2",
                            "--what", "dl", "--rho", "2")
    assert code == 0
    # triv - Steinberg: degree 1 - q = -1 at the identity class
    values = report["payload"]["functions"]["dl[2]"]
    assert "-1" in values and "1" in values
    assert report["payload"]["classes"][0]["size"] >= 1


def test_finite_gl_classes(capsys):
    code, report = run_json(capsys, "finite-gl", "--d", "2", "--q", "3",
                            "--what", "classes")
    assert code == 0
    assert report["payload"]["class_count"] == 8
    assert report["payload"]["order"] == 48


def test_finite_gl_ind(capsys):
    code, report = run_json(capsys, "finite-gl", "--d", "3", "--q", "2",
                            "--what", "ind", "--c", "2,1")
    assert code == 0
    values = report["payload"]["functions"]["ind[2,1]"]
    # degree = q^2 + q + 1 = 7 at the identity class
    assert "7" in values


def test_finite_gl_comb_prop(capsys):
    code, report = run_json(capsys, "finite-gl", "--d", "3", "--q", "2",
                            "--what", "comb-prop")
    assert code == 0
    assert report["payload"]["equal"]


def test_ep_build(capsys):
    code, report = run_json(capsys, "ep", "build", "--n", "3")
    assert code == 0
    terms = {t["type"]: t["coeff"] for t in report["payload"]["e_basis"]["terms"]}
    assert terms == {"3": "1", "2,1": "-1", "1,1,1": "1/3"}


def test_ep_fj_with_shadow(capsys):
    code, report = run_json(capsys, "ep", "fj", "--d", "2", "--r", "2",
                            "--type", "1,1", "--shadow-q", "2")
    assert code == 0
    assert report["payload"]["shadow_check"]["equal"]


def test_ep_shadow_classfunction(capsys):
    code, report = run_json(capsys, "ep", "shadow", "--d", "2", "--r", "1",
                            "--type", "1", "--shadow-q", "3")
    assert code == 0
    (values,) = report["payload"]["functions"].values()
    assert len(values) == 8


def test_transfer_payload_schema(capsys):
    code, report = run_json(capsys, "transfer", "--basis", "schur",
                            "--mu", "2,1", "--r", "2", "--d", "2")
    assert code == 0
    payload = report["payload"]
    assert payload["input_basis"] == "schur"
    assert payload["index_or_partition"] == "2,1"
    assert payload["params"] == {"r": 2, "d": 2}


def test_budget_error_exit_2(capsys):
    code, report = run_json(capsys, "verify", "--suite", "comb-prop",
                            "--dmax", "9")
    assert code == 2
    assert report["status"] == "error"
    assert "bound" in report["error"]


def test_table_mode(capsys):
    code, out = run(capsys, "--table", "ep", "build", "--n", "2")
    assert code == 0
    assert "status  : pass" in out


def test_exit_code_mapping_for_failed_identity(capsys):
    from qtransfer.cli import FAIL, _emit
    report = {"schema": "1", "command": "verify", "params": {},
              "status": FAIL, "payload": {}, "elapsed_ms": 0}
    assert _emit(report, False) == 1
    capsys.readouterr()


def test_deterministic_output(capsys):
    _, first = run(capsys, "ep", "build", "--n", "4")
    _, second = run(capsys, "ep", "build", "--n", "4")
    a, b = json.loads(first), json.loads(second)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b
