"""CLI exit codes, JSON stability, file parsing, and report contents."""

import json
import subprocess
import sys

from polarcodex.cli import main

from conftest import all_codes


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cf_all_or_nothing(capsys):
    code, out, _ = run_cli(capsys, "cf", "--inline", "000,111")
    assert code == 0
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["command"] == "cf"
    cf = report["outputs"]["cf"]
    assert len(cf) == 6
    assert all(entry["type"] == 2 for entry in cf)


def test_cf_full_cube_is_empty(capsys):
    code, out, _ = run_cli(capsys, "cf", "--inline", "00,10,01,11")
    assert code == 0
    assert json.loads(out)["outputs"]["cf"] == []


def test_malformed_line_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.codes"
    bad.write_text("010\n01x\n")
    code, out, err = run_cli(capsys, "cf", str(bad))
    assert code == 2
    assert out == ""
    assert ":2:" in err


def test_mixed_width_exits_2(capsys):
    code, _, err = run_cli(capsys, "cf", "--inline", "00,111")
    assert code == 2
    assert "expected 2 characters" in err


def test_missing_input_exits_2(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "cf", str(tmp_path / "nope.codes"))
    assert code == 2
    empty = tmp_path / "empty.codes"
    empty.write_text("# only a comment\n")
    code, _, _ = run_cli(capsys, "cf", str(empty))
    assert code == 2


def test_full_code_exits_3(capsys):
    code, _, err = run_cli(capsys, "invariants", "--inline", "00,10,01,11")
    assert code == 3
    assert "degenerate" in err


def test_invariants_antipodal_n4(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--inline", "0110,1001")
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert (outputs["pd"], outputs["reg"]) == (5, 3)


def test_invariants_fixture_band(capsys, fixture_dir):
    path = str(fixture_dir / "band_n8_p3_r4.codes")
    code, out, _ = run_cli(capsys, "invariants", path, "--method", "lcm")
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert (outputs["pd"], outputs["reg"]) == (3, 4)
    assert "x2*x7" in outputs["generators"]
    assert len(outputs["generators"]) == 9


def test_invariants_cross_agrees_on_all_n2_codes(capsys):
    for c in all_codes(2):
        words = ",".join(c.to_strings())
        code, out, _ = run_cli(
            capsys, "invariants", "--inline", words, "--method", "cross"
        )
        assert code == 0, words
        assert json.loads(out)["inputs"]["method"] == "cross"


def test_realize_band(capsys):
    code, out, _ = run_cli(capsys, "realize", "--n", "8", "--pd", "3", "--reg", "4")
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert outputs["covered"] and outputs["route"] == "band"
    words = set(outputs["code"])
    # 8th coordinate free
    assert all(w[:7] + ("1" if w[7] == "0" else "0") in words for w in words)


def test_realize_not_covered_exits_5(capsys):
    code, out, err = run_cli(capsys, "realize", "--n", "3", "--pd", "2", "--reg", "2")
    assert code == 5
    assert json.loads(out)["outputs"]["covered"] is False
    assert "not covered" in err


def test_realize_max_pd_point(capsys):
    code, out, _ = run_cli(capsys, "realize", "--n", "4", "--pd", "5", "--reg", "3")
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert (outputs["pd"], outputs["reg"]) == (5, 3)


def test_region_n3(capsys):
    code, out, _ = run_cli(capsys, "region", "--n", "3")
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert len(outputs["pairs"]) == 12
    assert outputs["pairs"][0] == [0, 1]
    assert outputs["ascii_grid"] is None


def test_region_no_symmetry_matches(capsys):
    code, out_sym, _ = run_cli(capsys, "region", "--n", "3")
    code2, out_raw, _ = run_cli(capsys, "region", "--n", "3", "--no-symmetry")
    sym = json.loads(out_sym)["outputs"]
    raw = json.loads(out_raw)["outputs"]
    assert sym["pairs"] == raw["pairs"]
    assert sym["witnesses"] == raw["witnesses"]


def test_region_ascii(capsys):
    code, out, err = run_cli(capsys, "region", "--n", "2", "--ascii")
    assert code == 0
    grid = json.loads(out)["outputs"]["ascii_grid"]
    assert "●" in grid
    assert "pd" in grid and "reg" in grid
    assert grid in err


def test_region_cap_exits_6(capsys):
    code, out, err = run_cli(capsys, "region", "--n", "5")
    assert code == 6
    assert out == ""
    assert "capped" in err


def test_verify_n2_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "2")
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert outputs["all_passed"] is True
    names = {c["name"] for c in outputs["checks"]}
    assert "reg1_classification" in names
    assert "connectivity" in names


def test_verify_mutant_exits_7(capsys, monkeypatch):
    monkeypatch.setenv("POLAR_CODEX_TEST_MUTANT", "skip_cf_minimality")
    code, out, err = run_cli(capsys, "verify", "--n", "2")
    assert code == 7
    outputs = json.loads(out)["outputs"]
    assert outputs["all_passed"] is False
    bad = [c for c in outputs["checks"] if not c["passed"]]
    assert any(c["counterexample"] for c in bad)


def test_json_reports_are_stable(capsys):
    _, first, _ = run_cli(capsys, "region", "--n", "2", "--ascii")
    _, second, _ = run_cli(capsys, "region", "--n", "2", "--ascii")
    assert first == second
    parsed = json.loads(first)
    assert json.dumps(parsed, indent=2) + "\n" == first


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polarcodex.cli", "cf", "--inline", "01,10"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "cf"


def test_seed_echoed_in_verify(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "2", "--seed", "17")
    report = json.loads(out)
    # exhaustive mode records no seed
    assert report["inputs"]["seed"] is None


def test_cross_mismatch_exits_4(capsys, monkeypatch):
    import polarcodex.betti as betti_mod

    def wrong_taylor(ideal, fieldspec=None):
        return betti_mod.BettiTable({(9, 9): 1}, "taylor")

    monkeypatch.setitem(betti_mod._ENGINES, "taylor", wrong_taylor)
    code, out, err = run_cli(
        capsys, "invariants", "--inline", "00,11", "--method", "cross"
    )
    assert code == 4
    assert "cross-check" in err


def test_jobs_env_default(monkeypatch):
    import polarcodex.cli as cli_mod

    monkeypatch.setenv("POLAR_CODEX_JOBS", "3")
    parser = cli_mod.build_parser()
    args = parser.parse_args(["region", "--n", "2"])
    assert args.jobs == 3
