"""Command-line interface: output formats, exit codes, round trips."""
import json

import pytest

from gstower.cli import main
from gstower.group_lab import builtin_presentation, format_group_file


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    assert err == ""
    return code, json.loads(out)


def test_ztypes_table(capsys):
    code, out, _ = run(capsys, "ztypes", "--max-level", "21")
    assert code == 0
    assert "(3,3)" in out and "(3,5)" in out and "(3,7)" in out


def test_ztypes_json(capsys):
    code, payload = run_json(capsys, "ztypes")
    assert code == 0
    assert payload["ztypes"] == [[3, 3], [3, 5], [3, 7]]


def test_caps_json(capsys):
    code, payload = run_json(capsys, "caps", "--p", "11", "--nmax", "9")
    assert code == 0
    assert payload["caps"] == [2, 1, 1, 1, 2, 2, 4, 5, 8]
    code, payload = run_json(capsys, "caps", "--p", "11", "--nmax", "9", "--ztype37")
    assert payload["caps"][6] == 3


def test_caps_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "caps", "--p", "11", "--nmax", "3")
    assert code == 0
    assert out.splitlines() == ["n,cap", "1,2", "2,1", "3,1"]


def test_check_violated_exit_code(capsys):
    code, payload = run_json(
        capsys, "check", "--p", "11", "--d", "2", "--levels", "3,7", "--a", "2",
        "--mode", "relaxed",
    )
    assert code == 1
    assert payload["verdict"] == "VIOLATED"
    assert payload["witness"] == "1/2"
    assert "/" in payload["witness_value"] or payload["witness_value"].lstrip("-").isdigit()


def test_check_holds_exit_code(capsys):
    code, payload = run_json(
        capsys, "check", "--p", "3", "--d", "1", "--levels", "3", "--a", "1",
    )
    assert code == 0
    assert payload["verdict"] == "HOLDS"
    assert payload["witness"] is None


def test_check_defaults_to_relaxed_mode(capsys):
    # the exact-mode polynomial degree grows like (p-1) * sum(n * a_n), so
    # relaxed must stay the default for the command to be usable on
    # realistic sequences
    code, payload = run_json(
        capsys, "check", "--p", "11", "--d", "2", "--levels", "3,7",
        "--a", "2,1,1,1,2,2,3,5,6",
    )
    assert code == 0
    assert payload["mode"] == "RELAXED"
    assert payload["verdict"] == "HOLDS"


def test_check_exact_mode_flag(capsys):
    code, payload = run_json(
        capsys, "check", "--p", "3", "--d", "1", "--levels", "3", "--a", "1",
        "--mode", "exact",
    )
    assert code == 0
    assert payload["mode"] == "EXACT"
    assert payload["verdict"] == "HOLDS"


def test_expensive_degree_note(capsys):
    from gstower.cli import _degree_note, _filtration_degree, EXPENSIVE_DEGREE
    from gstower.jennings import DimensionSequence

    big = DimensionSequence.from_values(11, [2, 1, 1, 1, 2, 2, 3, 5, 6])
    assert _filtration_degree(big) == 1480 > EXPENSIVE_DEGREE
    _degree_note(big, " (--mode relaxed is fast)")
    assert "degree 1480" in capsys.readouterr().err

    small = DimensionSequence.from_values(3, [1])
    _degree_note(small, "")
    assert capsys.readouterr().err == ""


def test_strict_subcommand(capsys):
    code, payload = run_json(
        capsys, "strict", "--p", "3", "--d", "1", "--levels", "3", "--a", "1",
    )
    assert code == 0
    assert payload["verdict"] == "HOLDS"
    assert payload["order_exponent"] == 1


def test_minorder_json_matches_published_values(capsys):
    code, payload = run_json(capsys, "minorder", "--p", "11", "--ab", "1,1")
    assert code == 0
    assert payload["a"] == [2, 1, 1, 1, 2, 2, 3, 5, 6]
    assert payload["min_sum"] == 23
    assert payload["order_exponent"] == 23
    assert payload["trace"][0]["witness"] == "1/2"


def test_minorder_table_mentions_witnesses(capsys):
    code, out, _ = run(capsys, "minorder", "--p", "11")
    assert code == 0
    assert "order exponent bound: 23" in out
    assert "violated at t = 1/2" in out


def test_bruteforce_small(capsys):
    code, payload = run_json(capsys, "bruteforce", "--p", "11", "--sumlimit", "8", "--nmax", "4")
    assert code == 0
    assert payload["all_violated"] is True
    assert payload["examined"] == 24  # 3*2*2*2 boxes, all within the sum


def test_valid_published_example(capsys):
    code, payload = run_json(
        capsys, "valid", "--p", "17", "--a", "2,1,1,1,2,2,3,3,4,4,6,5,7,5,4",
    )
    assert code == 0
    assert payload["verdict"] == "VALID"
    assert payload["order_exponent"] == 50
    assert payload["c"][1] == 1
    assert payload["e"][:5] == [0, 0, 0, 0, 0]


def test_valid_json_roundtrip_is_stable(capsys):
    args = ("valid", "--p", "17", "--a", "2,1,1,1,2,2,3,3,4,4,6,5,7,5,4")
    _, first = run_json(capsys, *args)
    refed = ",".join(str(v) for v in first["a"])
    _, second = run_json(capsys, "valid", "--p", "17", "--a", refed)
    assert first == second


def test_invalid_sequence_exits_1(capsys):
    code, payload = run_json(capsys, "valid", "--p", "11", "--a", "2")
    assert code == 1
    assert payload["verdict"] == "INVALID"
    assert payload["first_failure"] == "e_3 = -1 is negative"


def test_mildness(capsys):
    code, payload = run_json(
        capsys, "mildness", "--p", "3", "--d", "1", "--levels", "3", "--a", "1",
    )
    assert code == 0
    assert payload["e"][:6] == [0, 0, 0, 0, 1, 2]


def test_grouplab_builtin(capsys):
    code, payload = run_json(capsys, "grouplab", "--group", "heisenberg", "--p", "3")
    assert code == 0
    assert payload["order"] == 27
    assert payload["a"] == [[1, 2], [2, 1]]
    assert payload["checks"] == {
        "jennings": True, "lazard": True, "recursion": True, "fox": True,
    }
    assert payload["verdict"] == "HOLDS"


def test_grouplab_input_file(tmp_path, capsys):
    pres = builtin_presentation("cyclic:1", 3)
    path = tmp_path / "c3.grp"
    path.write_text(format_group_file(pres.target, pres))
    code, payload = run_json(capsys, "grouplab", "--input", str(path))
    assert code == 0
    assert payload["order"] == 3
    assert payload["levels"] == [3]


def test_grouplab_unknown_check(capsys):
    code, _, err = run(capsys, "grouplab", "--group", "cyclic:1", "--p", "3",
                       "--verify", "jennings,magic")
    assert code == 2
    assert "unknown checks" in err


def test_nonprime_is_an_input_error(capsys):
    code, _, err = run(capsys, "caps", "--p", "9", "--nmax", "4")
    assert code == 2
    assert "prime" in err


def test_out_of_range_nmax_is_an_input_error(capsys):
    code, _, err = run(capsys, "caps", "--p", "5", "--nmax", "4")
    assert code == 2


def test_csv_rejected_for_non_sequence_commands(capsys):
    code, _, err = run(capsys, "--format", "csv", "ztypes")
    assert code == 2
    assert "csv" in err


def test_unknown_subcommand_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
