"""Command-line interface: output formats, exit codes, determinism."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from closure_lab.cli import main

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_weakly_only_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "check", "--ring", "Z8", "--ideal", "4", "--m", "3", "--n", "1")
    assert code == 0
    assert "status: weakly_only" in out
    assert "witness: 2" in out


def test_check_not_weakly_exits_two(capsys):
    code, out, _ = run_cli(capsys, "check", "--ring", "Z8", "--ideal", "4", "--m", "2", "--n", "1")
    assert code == 2
    assert "status: not_weakly" in out


def test_check_machine_record(capsys):
    code, out, _ = run_cli(
        capsys, "check", "--ring", "Z8", "--ideal", "4", "--m", "3", "--n", "1",
        "--format", "machine",
    )
    assert code == 0
    record = json.loads(out.strip())
    assert record == {
        "ring_spec": "Z8", "ideal_gens": [4], "m": 3, "n": 1,
        "status": "weakly_only", "witness": 2,
    }


def test_check_accepts_attached_ideal_literal(capsys):
    code, out, _ = run_cli(
        capsys, "check", "--ring", "Z8 ideal(gens = 4)", "--m", "3", "--n", "1"
    )
    assert code == 0
    assert "weakly_only" in out


def test_parse_error_exits_one(capsys):
    code, _, err = run_cli(capsys, "check", "--ring", "Z8 (+) Z3", "--ideal", "1", "--m", "2", "--n", "1")
    assert code == 1
    assert "3 does not divide 8" in err
    code, _, err = run_cli(capsys, "check", "--ring", "Z8 &", "--ideal", "1", "--m", "2", "--n", "1")
    assert code == 1
    assert "position" in err


def test_usage_error_exits_one(capsys):
    code, _, _ = run_cli(capsys, "check", "--ring", "Z8")
    assert code == 1


def test_max_order_violation_named(capsys):
    code, _, err = run_cli(
        capsys, "check", "--ring", "Z64", "--ideal", "2", "--m", "2", "--n", "1",
        "--max-order", "32",
    )
    assert code == 1
    assert "cap" in err


def test_classify_grid(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--ring", "Z16", "--ideal", "8", "--m", "2..3", "--n", "1..2"
    )
    assert code == 0
    assert "(2,1): weakly_only" in out
    assert "(3,1): not_weakly" in out


def test_profile_ring(capsys):
    code, out, _ = run_cli(capsys, "profile", "--ring", "Z8 x Z4")
    assert code == 0
    assert "B(3)" in out


def test_profile_machine_record(capsys):
    code, out, _ = run_cli(capsys, "profile", "--ring", "Z8", "--format", "machine")
    assert code == 0
    record = json.loads(out.strip())
    assert record == {
        "k": 3, "per_element_max_witness": 2, "ring_spec": "Z8",
        "strongly_pi_regular": True,
    }


def test_profile_element(capsys):
    code, out, _ = run_cli(capsys, "profile", "--ring", "Z8", "--element", "2", "--format", "machine")
    assert code == 0
    assert json.loads(out.strip()) == {"ring_spec": "Z8", "element": 2, "k": 3}


@pytest.fixture(scope="module")
def family_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("families") / "small.family"
    path.write_text(
        "# a small family\n"
        "cyclic_max = 12\n"
        "product_moduli = 2, 3\n"
        "idealization_max = 4\n"
        "principal_primes = 2\n"
        "principal_max_exponent = 6\n"
        "m_max = 3\n",
        encoding="utf-8",
    )
    return str(path)


def test_verify_small_family(capsys, family_file):
    code, out, _ = run_cli(
        capsys, "verify", "--theorems", "T-NIL,T-ZPK", "--family", family_file,
        "--workers", "1",
    )
    assert code == 0
    assert "T-NIL" in out and "T-ZPK" in out
    assert "summary: 2/2 pass" in out


def test_verify_machine_output_is_deterministic(capsys, family_file):
    args = (
        "verify", "--theorems", "T-NIL,T-PRODMAX", "--family", family_file,
        "--workers", "1", "--format", "machine",
    )
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    *verdict_lines, summary_line = out1.strip().splitlines()
    for line in verdict_lines:
        record = json.loads(line)
        assert record["status"] == "pass"
        assert set(record) == {"theorem_id", "instances_checked", "vacuous_count", "status"}
    assert json.loads(summary_line) == {"summary": True, "passed": 2, "total": 2}


def test_verify_rejects_unknown_ids(capsys, family_file):
    code, _, err = run_cli(capsys, "verify", "--theorems", "T-NOPE", "--family", family_file)
    assert code == 1
    assert "T-NOPE" in err


def test_search_finds_the_z8_witness(capsys, family_file):
    code, out, _ = run_cli(
        capsys, "search", "weak-not-closed-exists", "--family", family_file,
        "--format", "machine",
    )
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert any(
        r.get("ring_spec") == "Z8" and r.get("ideal_gens") == [4] and r.get("m") == 3
        for r in records
    )


def test_workers_env_fallback(capsys, family_file, monkeypatch):
    monkeypatch.setenv("CLOSURE_LAB_WORKERS", "1")
    code, out, _ = run_cli(capsys, "verify", "--theorems", "T-ZPK", "--family", family_file)
    assert code == 0
    assert "1/1 pass" in out


def test_module_entry_point(family_file):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    result = subprocess.run(
        [sys.executable, "-m", "closure_lab", "check", "--ring", "Z8",
         "--ideal", "4", "--m", "3", "--n", "1", "--format", "machine"],
        capture_output=True, text=True, env=env,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout.strip())["status"] == "weakly_only"
    assert result.stderr == ""
