import json
import subprocess
import sys

import pytest

from pokervar.cli import main

TABLE_ARGS = ["holdem", "--hero", "Ks Kc", "--villain", "Ah 9d", "--board", "9h Ts 9s"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_holdem_json_document(capsys):
    code, out, _ = run(capsys, *TABLE_ARGS, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"scenario", "method", "exact", "decimal", "rows"}
    assert doc["method"] == "exact_enumeration"
    assert doc["exact"]["e_r1"] == "139/990"
    assert doc["exact"]["cov_r12"] == "-153643/42144300"
    assert [r["variance"]["decimal"] for r in doc["rows"]] == ["0.120691", "0.058523", "0.037800", "0.027438"]
    assert doc["scenario"]["board"] == "9h Ts 9s"


def test_table_and_json_carry_the_same_numbers(capsys):
    _, table, _ = run(capsys, *TABLE_ARGS)
    _, js, _ = run(capsys, *TABLE_ARGS, "--format", "json")
    doc = json.loads(js)
    for r in doc["rows"]:
        for value in (r["mean"]["decimal"], r["variance"]["decimal"], r["std_dev"],
                      r["mean"]["exact"], r["variance"]["exact"]):
            assert value in table
    for key, value in doc["exact"].items():
        assert f"{key} = {value} ~ {doc['decimal'][key]}" in table


def test_aces_uses_suit_composition(capsys):
    code, out, _ = run(capsys, "holdem", "--hero", "Ad Ac", "--villain", "As Ah", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["method"] == "suit_composition"
    assert [r["std_dev"] for r in doc["rows"]] == ["0.104257", "0.073258", "0.059435", "0.051140"]


def test_one_card_report_lists_outs(capsys):
    code, out, _ = run(capsys, "holdem", "--hero", "Ts Tc", "--villain", "Kh Kd",
                       "--board", "Ks Qs Js 7d", "--format", "json")
    doc = json.loads(out)
    assert doc["method"] == "closed_form"
    assert doc["outs"] == {"o": 14, "t": 0, "losses": 30}


def test_monte_carlo_output_is_reproducible(capsys):
    argv = ["holdem", "--hero", "7c 2d", "--villain", "Kh Kd", "--runs", "2", "--samples", "3000",
            "--seed", "5", "--format", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    doc = json.loads(a)
    assert doc["method"] == "monte_carlo"
    assert doc["monte_carlo"]["samples"] == 3000 and doc["monte_carlo"]["seed"] == 5


def test_mc_flag_forces_sampling(capsys):
    _, out, _ = run(capsys, *TABLE_ARGS, "--method", "mc", "--samples", "500", "--format", "json")
    assert json.loads(out)["method"] == "monte_carlo"


@pytest.mark.parametrize("argv,code", [
    (["holdem", "--hero", "Ts Tc", "--villain", "Kh Kd", "--board", "Ks Qs Js 7d", "--runs", "50"], 3),
    (["holdem", "--hero", "Ts Tc", "--villain", "Ts Kd"], 3),
    (["holdem", "--hero", "Tx Tc", "--villain", "Kh Kd"], 2),
    (["holdem", "--hero", "Ts Tc", "--villain", "Kh Kd", "--board", "2c 3c"], 2),
    (["videopoker", "--game", "no-such-game"], 3),
    (["videopoker", "--plays", "1,x"], 2),
    (["videopoker", "--plays", "0"], 2),
])
def test_errors_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == "" and err.startswith("pokervar: ")


def test_run_limit_message(capsys):
    _, _, err = run(capsys, "holdem", "--hero", "Ts Tc", "--villain", "Kh Kd",
                    "--board", "Ks Qs Js 7d", "--runs", "50")
    assert "41" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["holdem", "--hero", "Ts Tc"])
    assert exc.value.code == 2


def test_videopoker_from_cache(tmp_path, capsys, deuces):
    cache = tmp_path / "dw.cache"
    deuces.table.write(cache)
    code, out, _ = run(capsys, "videopoker", "--game", "deuces-wild-full-pay", "--plays", "100",
                       "--cache", str(cache), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][0]["variance"]["decimal"] == "3.366995"
    assert doc["classes"] == 102359 and doc["distinct_conditional_means"] == 8903
    # the same cache must not be accepted for another game
    code, _, err = run(capsys, "videopoker", "--game", "jacks-or-better-9-6", "--cache", str(cache))
    assert code == 3 and "different pay table" in err


def test_videopoker_single_play_is_the_single_hand_variance(tmp_path, capsys, jacks):
    cache = tmp_path / "job.cache"
    jacks.table.write(cache)
    _, out, _ = run(capsys, "videopoker", "--plays", "1", "--cache", str(cache), "--format", "json")
    doc = json.loads(out)
    assert doc["rows"][0]["variance"]["exact"] == doc["exact"]["var_r1"]
    _, table, _ = run(capsys, "videopoker", "--cache", str(cache))
    assert "19.514676" in table and "2.141872" in table


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "pokervar.cli", *TABLE_ARGS, "--runs", "1"],
                         capture_output=True, text=True, check=True).stdout
    assert "139/990" in out
