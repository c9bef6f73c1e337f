import subprocess
import sys
from pathlib import Path

from betticone.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pure_integral(capsys):
    code, out, _ = run_cli(capsys, "pure", "-d", "0,2,3,4", "--vars", "3",
                           "--integral")
    assert code == 0
    assert out == "diagram window=0 degrees=0,2,3,4 values=1,6,8,3\n"


def test_pure_normalized_default(capsys):
    code, out, _ = run_cli(capsys, "pure", "-d", "0,1,3", "--vars", "2")
    assert code == 0
    assert out == "diagram window=0 degrees=0,1,3 values=1,3/2,1/2\n"


def test_pure_shifted_window_syntax(capsys):
    code, out, _ = run_cli(capsys, "pure", "-d", "1:[1,3,4]", "--vars", "2")
    assert code == 0
    assert out.startswith("diagram window=1 degrees=1,3,4")


def test_pure_bad_sequence_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "pure", "-d", "3,3", "--vars", "2")
    assert code == 2
    assert "parse-error" in err


def test_decompose_xy2(capsys):
    code, out, _ = run_cli(capsys, "decompose", str(FIXTURES / "xy2.bt"))
    assert code == 0
    assert out == ("term 1/3 window=0 degrees=0,1,3 values=2,3,1\n"
                   "term 1/3 window=0 degrees=0,2,3 values=1,3,2\n")


def test_decompose_complex_fixture(capsys):
    code, out, _ = run_cli(capsys, "decompose",
                           str(FIXTURES / "complex_two_windows.bt"))
    assert code == 0
    assert out == ("term 1/2 window=0 degrees=0,1,3 values=2,3,1\n"
                   "term 1/2 window=1 degrees=1,3,4 values=1,3,2\n")


def test_decompose_empty_table(tmp_path, capsys):
    path = tmp_path / "zero.bt"
    path.write_text("betti-table v1\nvars 2\n")
    code, out, _ = run_cli(capsys, "decompose", str(path))
    assert code == 0
    assert out == ""


def test_decompose_not_in_cone(tmp_path, capsys):
    path = tmp_path / "bad.bt"
    path.write_text("betti-table v1\nvars 2\nentry 0 0 1\nentry 1 0 1\n")
    code, _, err = run_cli(capsys, "decompose", str(path))
    assert code == 1
    assert err.startswith("strand-not-increasing:")


def test_member_yes_and_no(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "member", str(FIXTURES / "noncm.bt"))
    assert (code, out) == (0, "in-cone yes\n")
    bad = tmp_path / "bad.bt"
    bad.write_text("betti-table v1\nvars 2\nentry 0 0 1\nentry 1 0 1\n")
    code, out, _ = run_cli(capsys, "member", str(bad))
    assert (code, out) == (0, "in-cone no\n")
    code, out, _ = run_cli(capsys, "member", str(FIXTURES / "pp2_rank3.ct"))
    assert (code, out) == (0, "in-cone yes\n")


def test_supernatural_exchange_output(capsys):
    code, out, _ = run_cli(capsys, "supernatural", "-n", "2", "-f", "0,-3",
                           "-m", "3", "--window", "-6,3")
    assert code == 0
    assert "chi 0 9/2 3/2" in out
    assert "entry 1 -2 3" in out
    parsed_lines = out.splitlines()
    assert parsed_lines[0] == "coh-table v1"


def test_supernatural_window_too_small(capsys):
    code, _, err = run_cli(capsys, "supernatural", "-n", "2", "-f", "0,-3",
                           "--window", "-2,3")
    assert code == 1
    assert err.startswith("window-too-small:")


def test_coh_decompose_with_oracle(capsys):
    code, out, _ = run_cli(capsys, "coh-decompose", str(FIXTURES / "p1_split.ct"),
                           "--check-oracle")
    assert code == 0
    assert out == "term 5 roots=-3\nterm 5 roots=1\n"


def test_coh_decompose_rank3(capsys):
    code, out, _ = run_cli(capsys, "coh-decompose", str(FIXTURES / "pp2_rank3.ct"))
    assert code == 0
    assert out == "term 1 roots=0,-3\nterm 2 roots=0,-2\n"


def test_coh_decompose_integral_presentation(capsys):
    code, out, _ = run_cli(capsys, "coh-decompose", str(FIXTURES / "pp2_rank3.ct"),
                           "--integral")
    assert code == 0
    assert out == ("term 1 roots=0,-3 multiple=1\n"
                   "term 1 roots=0,-2 multiple=2\n")


def test_stillman_tsv(capsys):
    code, out, _ = run_cli(capsys, "stillman", "-e", "2", "-r", "3",
                           "--p-max", "2", "--tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p\tdegrees\tvalues\tintegral\tcodim\tobstruction"
    assert lines[1] == "0\t0,2,4,6\t1,3,3,1\tY\t3\tinconclusive"
    assert lines[3].startswith("2\t0,2,8,10,12,14,16,18\t1,3,42,126,168,120,45,7")


def test_ext_polytope_symmetric(capsys):
    code, out, _ = run_cli(capsys, "ext-polytope",
                           str(FIXTURES / "p1_o_minus2_x5.ct"),
                           str(FIXTURES / "p1_o_plus2_x5.ct"), "--symmetric")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# support (0,-2) (0,-1) (0,0)"
    assert lines[1] == "pattern\tfeasible\tbinding"
    feasible = [l for l in lines if l.endswith("\tY") or "\tY\t" in l]
    assert len(feasible) == 21
    assert lines[-3:] == ["vertex\t0,0,0", "vertex\t5,5,5", "vertex\t5,10,5"]
    assert "0,0,0\tY\t-" in lines
    assert any(l.startswith("5,10,5\tY") for l in lines)
    assert any(l.startswith("5,0,5\tN") for l in lines)


def test_ext_polytope_budget(capsys):
    code, _, err = run_cli(capsys, "ext-polytope",
                           str(FIXTURES / "p1_o_minus2_x5.ct"),
                           str(FIXTURES / "p1_o_plus2_x5.ct"),
                           "--max-points", "5")
    assert code == 1
    assert err.startswith("budget-exceeded:")


def test_pretty_betti(capsys):
    code, out, _ = run_cli(capsys, "pretty", str(FIXTURES / "xy2.bt"))
    assert code == 0
    assert out == "    0  1  2\n0:  1  1  -\n1:  -  1  1\n"


def test_pretty_parse_error_has_line_number(tmp_path, capsys):
    path = tmp_path / "broken.ct"
    path.write_text("coh-table v1\nn 1\nwindow 0\nchi 1 1\n")
    code, _, err = run_cli(capsys, "pretty", str(path))
    assert code == 2
    assert "line 3" in err


def test_validate_pass_and_fail(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "validate", str(FIXTURES / "p2_structure_sheaf.ct"))
    assert (code, out) == (0, "valid\n")
    bad = tmp_path / "bad.ct"
    bad.write_text("coh-table v1\nn 1\nwindow 0 1\nchi 1 0\nentry 0 0 2\n")
    code, out, _ = run_cli(capsys, "validate", str(bad))
    assert code == 1
    assert out.startswith("violation: Euler mismatch")


def test_missing_file_is_exit_2(capsys):
    code, _, err = run_cli(capsys, "validate", "no-such-file.bt")
    assert code == 2
    assert "parse-error" in err


def test_unknown_flag_is_exit_2(capsys):
    assert run_cli(capsys, "decompose", "--frobnicate", "x")[0] == 2


def test_nonpositive_multiplicity_is_exit_2(capsys):
    code, _, err = run_cli(capsys, "supernatural", "-n", "1", "-f", "0", "-m", "0")
    assert code == 2
    assert "usage-error" in err


def test_cli_runs_as_module():
    result = subprocess.run(
        [sys.executable, "-m", "betticone", "decompose", str(FIXTURES / "noncm.bt")],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout == ("term 1/3 window=0 degrees=0,2,3,4 values=1,6,8,3\n"
                             "term 2/3 window=0 degrees=0,2,3 values=1,3,2\n")


def test_deterministic_output(capsys):
    commands = [
        ("pure", "-d", "0,2,3,4", "--vars", "3", "--integral"),
        ("decompose", str(FIXTURES / "xy2.bt")),
        ("coh-decompose", str(FIXTURES / "pp2_rank3.ct")),
        ("supernatural", "-n", "2", "-f", "0,-3", "-m", "3", "--window", "-6,3"),
        ("stillman", "-e", "2", "-r", "3", "--p-max", "3", "--tsv"),
        ("pretty", str(FIXTURES / "p1_split.ct")),
    ]
    for argv in commands:
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second
        assert first[0] == 0
