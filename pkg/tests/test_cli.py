import json
import os
import subprocess
import sys

import pytest

from rescong import congruence
from rescong.cli import canonical_json, main

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_worked_example(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--n", "4", "--s", "2", "--b", "5", "--t", "1,2")
        assert code == 0
        assert "count = 3" in out

    @pytest.mark.parametrize("engine", ["formula", "brute", "convolution"])
    def test_engines_agree(self, capsys, engine):
        code, out, _ = run_cli(
            capsys,
            "count", "--n", "4", "--s", "2", "--b", "5", "--t", "1,2",
            "--engine", engine,
        )
        assert code == 0
        assert "count = 3" in out

    def test_multiplicity_flag_equivalent_to_t_list(self, capsys):
        _, out_t, _ = run_cli(
            capsys, "count", "--n", "4", "--s", "2", "--b", "5", "--t", "1,2",
            "--format", "json",
        )
        _, out_g, _ = run_cli(
            capsys, "count", "--n", "4", "--s", "2", "--b", "5", "--g", "1,1,0",
            "--format", "json",
        )
        rec_t, rec_g = json.loads(out_t), json.loads(out_g)
        assert rec_t["result"] == rec_g["result"]
        assert rec_t["params"]["t"] == rec_g["params"]["t"] == [1, 2]

    def test_empty_restrictions(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--n", "4", "--s", "2", "--b", "16")
        assert code == 0
        assert "count = 1" in out

    def test_trivial_modulus(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--n", "1", "--s", "3", "--b", "0", "--t", "1")
        assert code == 0
        assert "count = 1" in out

    def test_count_is_decimal_string_in_json(self, capsys):
        _, out, _ = run_cli(
            capsys, "count", "--n", "3", "--s", "1", "--b", "0", "--g", "140,0",
            "--format", "json",
        )
        rec = json.loads(out)
        value = rec["result"]["count"]
        assert isinstance(value, str)
        assert int(value) == (2**140 + 2) // 3

    def test_invalid_divisor_exits_one_naming_entry(self, capsys):
        code, _, err = run_cli(capsys, "count", "--n", "4", "--s", "2", "--b", "5", "--t", "3")
        assert code == 1
        assert "t_1" in err


class TestJsonContract:
    def test_round_trip_is_idempotent(self, capsys):
        _, out, _ = run_cli(
            capsys, "count", "--n", "4", "--s", "2", "--b", "5", "--t", "1,2",
            "--format", "json",
        )
        parsed = json.loads(out)
        assert canonical_json(parsed) == out.strip()

    def test_payload_deterministic_excluding_timing(self, capsys):
        argv = ("ramanujan", "--r", "6", "--s", "2", "--m", "7", "--format", "json")
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        a, b = json.loads(first), json.loads(second)
        a.pop("elapsed_ms"), b.pop("elapsed_ms")
        assert a == b

    def test_record_shape(self, capsys):
        _, out, _ = run_cli(
            capsys, "count", "--n", "4", "--s", "2", "--b", "5", "--t", "1,2",
            "--format", "json",
        )
        rec = json.loads(out)
        assert set(rec) == {"command", "params", "engine", "result", "elapsed_ms"}


class TestRamanujan:
    def test_worked_value(self, capsys):
        code, out, _ = run_cli(capsys, "ramanujan", "--r", "4", "--s", "2", "--m", "16")
        assert code == 0
        assert "= 12" in out

    def test_trivial_modulus(self, capsys):
        code, out, _ = run_cli(capsys, "ramanujan", "--r", "1", "--s", "1", "--m", "0")
        assert code == 0
        assert "= 1" in out

    def test_phi_at_zero(self, capsys):
        code, out, _ = run_cli(capsys, "ramanujan", "--r", "6", "--s", "1", "--m", "0")
        assert code == 0
        assert "= 2" in out

    def test_rejects_zero_modulus(self, capsys):
        code, _, err = run_cli(capsys, "ramanujan", "--r", "0", "--s", "1", "--m", "0")
        assert code == 1
        assert "error" in err


class TestGgcd:
    def test_square_gcd(self, capsys):
        code, out, _ = run_cli(capsys, "ggcd", "--a", "12", "--b", "16", "--s", "2")
        assert code == 0
        assert "(12, 16)_2 = 4" in out

    def test_plain_gcd(self, capsys):
        code, out, _ = run_cli(capsys, "ggcd", "--a", "7", "--b", "7", "--s", "1")
        assert code == 0
        assert "= 7" in out

    def test_both_zero_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "ggcd", "--a", "0", "--b", "0", "--s", "2")
        assert code == 1
        assert "error" in err


class TestClasses:
    def test_rows_and_total(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "--n", "4", "--s", "2", "--elements")
        assert code == 0
        assert "d=1 size=12" in out
        assert "d=2 size=3 members=4,8,12" in out
        assert "d=4 size=1 members=16" in out
        assert "total = 16" in out

    def test_sizes_sum_to_modulus(self, capsys):
        _, out, _ = run_cli(capsys, "classes", "--n", "12", "--s", "1", "--format", "json")
        rec = json.loads(out)
        assert sum(int(row["size"]) for row in rec["result"]["rows"]) == 12

    def test_trivial_modulus_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "--n", "1", "--s", "1")
        assert code == 0
        assert "d=1 size=1" in out
        assert "total = 1" in out

    def test_elements_budget_exit(self, capsys):
        code, _, err = run_cli(
            capsys, "classes", "--n", "100", "--s", "2", "--elements", "--budget", "10"
        )
        assert code == 1
        assert "budget" in err


class TestSolve:
    def test_worked_example(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--n", "4", "--s", "2", "--b", "5", "--t", "1,2")
        assert code == 0
        assert "1,4" in out and "9,12" in out and "13,8" in out
        assert "count = 3" in out

    def test_unsatisfiable(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--n", "4", "--s", "2", "--b", "5", "--t", "2,2")
        assert code == 0
        assert "count = 0" in out

    def test_two_units_mod_three(self, capsys):
        _, out, _ = run_cli(
            capsys, "solve", "--n", "3", "--s", "1", "--b", "0", "--t", "1,1",
            "--format", "json",
        )
        rec = json.loads(out)
        assert rec["result"]["solutions"] == [[1, 2], [2, 1]]
        assert rec["result"]["count"] == "2"


class TestVerify:
    def test_tiny_sweep_clean(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--max-n", "1", "--s", "1", "--max-k", "1")
        assert code == 0
        assert "0 mismatches" in out
        assert "ok" in out

    def test_small_sweep_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--max-n", "3", "--s", "1,2", "--max-k", "2",
            "--format", "json",
        )
        assert code == 0
        rec = json.loads(out)
        assert rec["result"]["ok"] is True
        assert rec["result"]["mismatches"] == []
        assert rec["result"]["instances_checked"] == rec["result"]["instance_space"]
        assert rec["result"]["identity_failures"] == []

    def test_corrupted_formula_exits_two_with_reproducer(self, capsys, monkeypatch):
        real = congruence.count_restricted
        monkeypatch.setattr(congruence, "count_restricted", lambda inst: real(inst) + 1)
        code, out, _ = run_cli(capsys, "verify", "--max-n", "2", "--s", "1", "--max-k", "1")
        assert code == 2
        assert "MISMATCH" in out
        assert "reproduce: rescong count" in out


class TestBench:
    def test_grid_row_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--n", "4,8,16", "--s", "1,2", "--k", "2,4,8", "--reps", "1"
        )
        assert code == 0
        lines = [ln for ln in out.strip().splitlines() if ln]
        assert lines[0] == "n,s,k,count,formula_ms,convolution_ms,brute_ms"
        assert len(lines) == 1 + 18

    def test_budget_exhausted_cells_stay_empty(self, capsys):
        _, out, _ = run_cli(
            capsys, "bench", "--n", "16", "--s", "2", "--k", "8", "--reps", "1",
            "--format", "json",
        )
        rec = json.loads(out)
        row = rec["result"]["rows"][0]
        assert row["brute_ms"] is None  # 192**8 tuples is far past the budget
        assert row["formula_ms"] is not None
        assert int(row["count"]) >= 0

    def test_counts_deterministic_across_runs(self, capsys):
        argv = ("bench", "--n", "4,6", "--s", "1", "--k", "2", "--reps", "2", "--format", "json")
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        rows_a = json.loads(first)["result"]["rows"]
        rows_b = json.loads(second)["result"]["rows"]
        keys = ("n", "s", "k", "count")
        assert [{k: r[k] for k in keys} for r in rows_a] == [
            {k: r[k] for k in keys} for r in rows_b
        ]


class TestUsageErrors:
    def test_unknown_flag_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "count", "--n", "4", "--s", "2", "--b", "5", "--bogus", "1")
        assert code == 1
        assert "usage error" in err

    def test_no_subcommand_prints_help(self, capsys):
        code, out, _ = run_cli(capsys)
        assert code == 1
        assert "count" in out and "verify" in out

    def test_bad_int_list_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "count", "--n", "4", "--s", "2", "--b", "5", "--t", "1,x")
        assert code == 1
        assert "usage error" in err

    def test_g_length_mismatch_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "count", "--n", "4", "--s", "2", "--b", "5", "--g", "1,1")
        assert code == 1
        assert "divisor" in err


def test_module_entry_point_subprocess():
    env = dict(os.environ)
    env["PYTHONPATH"] = os.path.join(REPO_ROOT, "src") + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "rescong", "count", "--n", "4", "--s", "2", "--b", "5", "--t", "1,2"],
        capture_output=True,
        text=True,
        env=env,
        cwd=REPO_ROOT,
    )
    assert proc.returncode == 0
    assert "count = 3" in proc.stdout
