import csv
import io
import json

import pytest

from lightbulb.cli import EXIT_PASS, EXIT_USAGE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_exact_json(capsys):
    code, env = run_json(capsys, "exact", "--n", "3")
    assert code == EXIT_PASS
    assert env["command"] == "exact"
    assert env["status"] == "pass"
    assert env["rows"] == [
        {"point": 0, "probability": "1/3", "probability_decimal": "0.333333333333"},
        {"point": 2, "probability": "2/3", "probability_decimal": "0.666666666667"},
    ]


def test_exact_single_bulb(capsys):
    code, env = run_json(capsys, "exact", "--n", "1")
    assert code == EXIT_PASS
    assert env["rows"] == [{"point": 1, "probability": "1/1", "probability_decimal": "1"}]


def test_exact_rejects_n_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["exact", "--n", "0"])
    assert exc.value.code == EXIT_USAGE


def test_exact_csv_matches_json(capsys):
    code, env = run_json(capsys, "exact", "--n", "4")
    code2, out = run_cli(capsys, "exact", "--n", "4", "--format", "csv")
    assert code == code2 == EXIT_PASS
    parsed = list(csv.DictReader(io.StringIO(out)))
    assert [row["probability"] for row in parsed] == [r["probability"] for r in env["rows"]]


def test_clubbed(capsys):
    code, env = run_json(capsys, "clubbed", "--n", "4", "--m", "0")
    assert code == EXIT_PASS
    assert [r["probability"] for r in env["rows"]] == ["1/8", "3/4", "1/8"]
    # auto picks the theorem parity
    code, env = run_json(capsys, "clubbed", "--n", "5")
    assert env["parameters"]["m"] == 1


def test_tv(capsys):
    code, env = run_json(capsys, "tv", "--n", "3")
    assert code == EXIT_PASS
    row = env["rows"][0]
    assert row["tv"] == "1/12"
    assert row["status"] == "pass"
    assert row["collision_prob"] == "1/9"


def test_report(capsys):
    code, env = run_json(capsys, "report", "--n-max", "5")
    assert code == EXIT_PASS
    assert [r["n"] for r in env["rows"]] == [1, 2, 3, 4, 5]
    assert all(r["status"] == "pass" for r in env["rows"])


def test_stein_verify(capsys):
    code, env = run_json(capsys, "stein", "verify", "--n", "3", "--m", "0", "--set", "0")
    assert code == EXIT_PASS
    assert env["rows"] == [{"set": "0", "max_residual": "0/1", "status": "pass"}]
    code, env = run_json(capsys, "stein", "verify", "--n", "9", "--set", "random:5:11")
    assert code == EXIT_PASS
    assert len(env["rows"]) == 5


def test_stein_verify_bad_set(capsys):
    code = main(["stein", "verify", "--n", "4", "--m", "0", "--set", "1"])
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_stein_norm(capsys):
    code, env = run_json(capsys, "stein", "norm", "--n", "4", "--m", "0")
    assert code == EXIT_PASS
    row = env["rows"][0]
    assert row["sharp"] == "7/96"
    assert float(row["lemma_bound"]) == pytest.approx(2.7314 / 6, rel=1e-9)


def test_stein_norm_rejects_n_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["stein", "norm", "--n", "1"])
    assert exc.value.code == EXIT_USAGE


def test_simulate(capsys):
    code, env = run_json(capsys, "simulate", "--n", "2", "--reps", "100", "--seed", "7")
    assert code == EXIT_PASS
    assert env["rows"] == [
        {
            "on_count": 1,
            "count": 100,
            "frequency": "1",
            "exact_probability": "1/1",
            "exact_decimal": "1",
            "empirical_tv": "0",
            "parity_violations": 0,
        }
    ]


def test_simulate_repeatable_output(capsys):
    args = ["simulate", "--n", "5", "--reps", "2000", "--seed", "3", "--batches", "2"]
    _, first = run_cli(capsys, *args)
    _, second = run_cli(capsys, *args)
    assert first == second


def test_collision(capsys):
    code, env = run_json(capsys, "collision", "--n", "3")
    assert code == EXIT_PASS
    assert env["rows"][0]["collision_prob"] == "1/9"
    code, env = run_json(capsys, "collision", "--n", "2")
    assert env["rows"][0]["collision_prob"] == "0/1"
    with pytest.raises(SystemExit) as exc:
        main(["collision", "--n", "1"])
    assert exc.value.code == EXIT_USAGE
