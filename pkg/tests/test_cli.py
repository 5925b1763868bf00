import json

import pytest

from hurwitzkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hurwitz_command(capsys):
    code, out, _ = run_cli(capsys, "hurwitz", "--euler", "1", "--degree", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "2/3"
    assert payload["true_hurwitz"] is True
    assert payload["euler_cover"] == 3


def test_hurwitz_with_profiles_and_cutoff(capsys):
    code, out, _ = run_cli(
        capsys, "hurwitz", "--euler", "1", "--degree", "3", "--profile", "3"
    )
    assert code == 0 and json.loads(out)["value"] == "1/3"
    code, out, _ = run_cli(
        capsys, "hurwitz", "--euler", "1", "--degree", "3", "--cutoff", "1"
    )
    payload = json.loads(out)
    assert payload["true_hurwitz"] is False


def test_oracle_command(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--surface", "rp2", "--degree", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4 and payload["value"] == "2/3"


def test_oracle_guard_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "oracle", "--surface", "rp2", "--degree", "7",
        "--profile", "7", "--profile", "7", "--profile", "7", "--profile", "7",
    )
    assert code == 3
    assert "guard" in err


def test_validation_exit_code(capsys):
    code, _, err = run_cli(capsys, "hurwitz", "--euler", "1", "--degree", "3",
                           "--profile", "2")
    assert code == 2
    assert "invalid" in err
    code, _, err = run_cli(capsys, "oracle", "--surface", "moebius", "--degree", "2")
    assert code == 2


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hurwitz", "--euler", "1", "--degree", "3", "--bogus"])
    assert exc.value.code == 2


def test_characters_csv(capsys):
    code, out, _ = run_cli(capsys, "characters", "--d", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("lam\\delta")
    code, out, _ = run_cli(capsys, "characters", "--d", "3", "--format", "json")
    payload = json.loads(out)
    assert payload["2,1"]["1,1,1"] == 2


def test_schur_command(capsys):
    code, out, _ = run_cli(capsys, "schur", "--partition", "2,1", "--at-constant", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["power_sum_expansion"] == {"1,1,1": "1/3", "3": "-1/3"}
    assert payload["value_at_constant"] == "8/1"


def test_genfun_layout(capsys):
    code, out, _ = run_cli(
        capsys, "genfun", "--layout", "prop1", "--n", "2", "--N", "3", "--dmax", "2"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["euler"] == 2
    assert payload["branch_points"] == 4
    assert any(term["degree"] == 2 for term in payload["series"])
    for term in payload["series"]:
        assert "/" in term["coeff"]


def test_genfun_layout_missing_t_is_validation_error(capsys):
    code, _, err = run_cli(capsys, "genfun", "--layout", "int3", "--n", "4")
    assert code == 2
    assert "needs the t parameter" in err


def test_genfun_unbranched(capsys):
    code, out, _ = run_cli(capsys, "genfun", "--unbranched", "--dmax", "4")
    payload = json.loads(out)
    assert payload["coefficients"][3] == "2/3"
    assert payload["coefficients"][4] == "5/12"


def test_hirota_command(capsys):
    code, out, _ = run_cli(capsys, "hirota", "--r", "one", "--N", "1", "--dmax", "3")
    assert code == 0 and json.loads(out)["holds"] is True
    code, out, _ = run_cli(capsys, "hirota", "--r", "1/2", "--N", "2", "--dmax", "3")
    assert code == 0 and json.loads(out)["holds"] is True


def test_mc_command(capsys):
    code, out, _ = run_cli(
        capsys, "mc", "--relation", "sAZBZ+", "--lambda", "2", "--N", "3",
        "--samples", "12000", "--seed", "42",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert len(payload["mean"]) == 2 and len(payload["exact"]) == 2
    assert payload["sigmas"] <= 5


def test_mc_proposition_command(capsys):
    code, out, _ = run_cli(
        capsys, "mc", "--proposition", "prop2_u", "--n", "1", "--N", "3",
        "--degree", "2", "--samples", "10000", "--seed", "3",
    )
    assert code == 0 and json.loads(out)["pass"] is True


def test_selftest_quick(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--quick")
    assert code == 0
    assert "[PASS]" in out and "[FAIL]" not in out
