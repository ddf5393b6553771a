import json
import os
import subprocess
import sys

from skeindaha.cli import main


def run_cli(*argv):
    return main(list(argv))


def test_verify_pi1_exit_zero(capsys):
    assert run_cli("verify", "--suite", "pi1") == 0
    out = capsys.readouterr().out
    assert "suite pi1" in out and "passed" in out


def test_verify_json_schema(capsys, tmp_path):
    path = tmp_path / "report.json"
    assert run_cli("verify", "--suite", "pi1", "--json", "--out", str(path)) == 0
    payload = json.loads(path.read_text())
    assert payload[0]["suite"] == "pi1"
    assert payload[0]["passed"] == payload[0]["total"]
    check = payload[0]["checks"][0]
    assert set(check) >= {"id", "pass", "level", "lhs_minus_rhs_term_count",
                          "millis"}


def test_eval_word_bad_token_exits_two(capsys):
    assert run_cli("eval-word", "--word", "T5") == 2
    assert "error" in capsys.readouterr().err


def test_eval_word_identity(capsys):
    assert run_cli("eval-word", "--word", "T0 T0^-1") == 0
    assert capsys.readouterr().out.strip() == "1"


def test_eval_word_e_sided(capsys):
    # against the idempotent, T1 acts as the scalar -i q^(1/2) / b1
    assert run_cli("eval-word", "--word", "T1", "--e-sided", "--json") == 0
    t1e = json.loads(capsys.readouterr().out)
    assert run_cli("eval-word", "--word", "i^-1 u^2 b1^-1", "--e-sided",
                   "--json") == 0
    scalar_e = json.loads(capsys.readouterr().out)
    assert t1e == scalar_e


def test_verify_qdiff_clean(capsys):
    assert run_cli("verify", "--suite", "qdiff") == 0
    assert "28/28" in capsys.readouterr().out


def test_eval_curve_deterministic_json(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli("eval-curve", "--base", "k2", "--twists", "1^2",
                   "--form", "json", "--out", str(a)) == 0
    assert run_cli("eval-curve", "--base", "k2", "--twists", "1^2",
                   "--form", "json", "--out", str(b)) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert {t["n"] for t in data} == {1, -1}
    # the payload is exactly the twice-twisted curve operator
    from skeindaha.laurent import OP
    from skeindaha.qdiff import Operator, make_G
    from skeindaha.scalars import Scalar

    expected = make_G(2).scale(OP.monomial(Scalar.i(), u=-3))
    assert Operator.from_json(data) == expected


def test_eval_curve_latex(capsys):
    assert run_cli("eval-curve", "--base", "k1", "--form", "latex") == 0
    assert "x0" in capsys.readouterr().out


def test_eval_curve_unknown_base(capsys):
    assert run_cli("eval-curve", "--base", "k9") == 2


def test_mutate_script_round_trip(tmp_path):
    first = tmp_path / "seed.json"
    assert run_cli("mutate", "--script", "2,3,2,s(3,5)", "--seed", "initial",
                   "--out", str(first)) == 0
    # mutating back: the twist word is its own inverse read backwards
    back = tmp_path / "back.json"
    assert run_cli("mutate", "--script", "s(3,5),2,3,2", "--seed", str(first),
                   "--out", str(back)) == 0
    initial = tmp_path / "initial.json"
    assert run_cli("mutate", "--script", "1,1", "--seed", "initial",
                   "--out", str(initial)) == 0
    assert json.loads(back.read_text()) == json.loads(initial.read_text())


def test_mutate_bad_script():
    assert run_cli("mutate", "--script", "2,x") == 2


def test_loop30_command(capsys):
    assert run_cli("loop30", "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "distinct_proper_prefixes": 29,
        "returns_to_initial": True,
        "sequence_matches_printed": True,
    }


def test_console_entry_point_subprocess():
    env = dict(os.environ, SKEINDAHA_GCD="1")
    proc = subprocess.run(
        [sys.executable, "-m", "skeindaha.cli", "verify", "--suite", "pi1"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert "10/10" in proc.stdout


def test_gcd_env_toggles_config():
    import skeindaha.config as config

    old = os.environ.get("SKEINDAHA_GCD")
    try:
        os.environ["SKEINDAHA_GCD"] = "1"
        config.reload_from_env()
        assert config.gcd_enabled()
        os.environ["SKEINDAHA_GCD"] = "0"
        config.reload_from_env()
        assert not config.gcd_enabled()
    finally:
        if old is None:
            os.environ.pop("SKEINDAHA_GCD", None)
        else:
            os.environ["SKEINDAHA_GCD"] = old
        config.reload_from_env()
