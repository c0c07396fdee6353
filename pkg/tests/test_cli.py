import json
import subprocess
import sys

import pytest

from phlab.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,expected,code",
    [
        (["ph", "2", "2", "1", "3"], "Holds", 0),
        (["fgh", "w", "1"], "7", 0),
        (["fseq", "w^w", "3"], "w^4", 0),
        (["ord", "eval", "1 + w"], "w", 0),
        (["ord", "cmp", "w^2", "w*3 + 5"], ">", 0),
        (["ord", "decode", "4,4,2,3,1,3,1"], "w", 0),
        (["feps", "0"], "1", 0),
        (["diamond", "1"], "7", 0),
        (["slowh", "0", "1"], "7", 0),
        (["inv", "1000"], "0", 0),
        (["pair", "1", "1"], "4", 0),
        (["unpair", "4"], "1 1", 0),
        (["sigma", "1", "2"], "3", 0),
        (["minwit", "1", "4", "1"], "4", 0),
        (["step", "3", "2", "w"], "no", 0),
        (["ph", "2", "2", "1", "2"], "Fails 01", 0),
    ],
)
def test_commands(argv, expected, code, capsys):
    c, out, _ = run(argv, capsys)
    assert (c, out.strip()) == (code, expected)


def test_budget_exit_codes(capsys):
    c, out, _ = run(["fgh", "w", "2", "--bits", "1000000"], capsys)
    assert c == 2 and out.startswith("Exceeded: value >= ~2^")
    c, out, _ = run(["--steps", "3", "fgh", "3", "3"], capsys)
    assert c == 2 and "StepLimit" in out
    c, out, _ = run(["--nodes", "5", "ph", "2", "3", "2", "6"], capsys)
    assert c == 2 and out.startswith("Unknown")


def test_usage_errors_print_grammar(capsys):
    for argv in (["bogus"], ["fgh", "w"], ["ord", "spin", "w"], ["ph", "2", "x", "1", "3"], []):
        c, out, err = run(argv, capsys)
        assert c == 1
        assert "ordinal := term" in err


def test_parse_errors_carry_position(capsys):
    c, _, err = run(["fgh", "w^e", "1"], capsys)
    assert c == 1 and "position 2" in err
    c, _, err = run(["ord", "decode", "4,2,1"], capsys)
    assert c == 1 and "digit 2" in err


def test_json_output(capsys):
    c, out, _ = run(["--json", "fgh", "2", "3"], capsys)
    data = json.loads(out)
    assert c == 0
    assert data["outcome"] == "value" and data["value"] == "63"
    assert set(data["timing"]) == {"seconds"}
    c, out, _ = run(["ph", "2", "3", "2", "5", "--json"], capsys)
    data = json.loads(out)
    assert data["verdict"] == "Fails"
    assert data["coloring"]["colors"] == [0, 0, 1, 1, 0, 1, 1, 1, 0, 0]


def test_json_is_reproducible_modulo_timing(capsys):
    outs = []
    for _ in range(2):
        main(["--json", "step", "w_3", "2", "2"])
        data = json.loads(capsys.readouterr().out)
        data.pop("timing")
        outs.append(json.dumps(data, sort_keys=True))
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["holds"] is True


def test_step_prints_short_paths(capsys):
    c, out, _ = run(["step", "w^w", "1", "0"], capsys)
    assert out.strip() == "w^w -> w^2 -> w*2 -> w + 2 -> w + 1 -> w -> 2 -> 1 -> 0"
    c, out, _ = run(["step", "w_5", "4", "2"], capsys)
    assert c == 0 and out.startswith("yes (certificate")


def test_full_flag(capsys):
    c, out, _ = run(["--bits", "100000", "fgh", "2", "5000"], capsys)
    assert out.strip() == "~2^5014"
    c, out, _ = run(["--full", "--bits", "100000", "fgh", "2", "5000"], capsys)
    assert int(out) == 2**5001 * 5001 - 1


def test_trace_file(tmp_path, capsys):
    path = tmp_path / "t.jsonl"
    c, out, _ = run(["fgh", "w", "1", "--trace", str(path)], capsys)
    rows = [json.loads(s) for s in path.read_text().splitlines()]
    assert [r["rule"] for r in rows] == ["limit-dispatch", "successor-expand", "base", "base"]
    assert set(rows[0]) == {"step", "stack", "arg", "arg_bits", "rule"}


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"max_steps": 3, "output": "json"}))
    c, out, _ = run(["--config", str(cfg), "fgh", "3", "3"], capsys)
    assert c == 2 and json.loads(out)["outcome"] == "step-limit"
    # explicit flags win over the file
    c, out, _ = run(["--config", str(cfg), "--steps", "100000", "fgh", "2", "3"], capsys)
    assert c == 0 and json.loads(out)["value"] == "63"
    cfg.write_text(json.dumps({"max_steps": 0}))
    c, _, err = run(["--config", str(cfg), "fgh", "2", "3"], capsys)
    assert c == 1
    cfg.write_text(json.dumps({"colour": 1}))
    assert run(["--config", str(cfg), "fgh", "2", "3"], capsys)[0] == 1


def test_chain_and_props(capsys):
    c, out, _ = run(["chain", "14"], capsys)
    assert c == 0 and "double_exp_vs_140n2: FAILS" in out and out.strip().endswith("fails")
    c, out, _ = run(["chain", "15"], capsys)
    assert out.strip().endswith("holds")
    c, out, _ = run(["props", "diagonal"], capsys)
    assert c == 0 and out.startswith("diagonal: PASS")
    assert run(["props", "nope"], capsys)[0] == 1


def test_shape(capsys):
    c, out, _ = run(["shape", "7"], capsys)
    assert out.strip() == "q=2 N=1 stage=0"
    c, out, _ = run(["--json", "shape", "0"], capsys)
    data = json.loads(out)
    data.pop("timing")
    assert data == {"q": 0, "N": 0, "stage": None}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "phlab", "fgh", "w", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "7"
