"""The CLI as a user sees it: flags in, bytes and exit codes out."""

import json

import pytest

from springer.cli import main
from springer.polynomials import Poly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", "--series", "C", "--partition", "2,2", "--z", "z2")
    assert code == 0
    assert out == "x + 1\n"


def test_eval_regular_nilpotent(capsys):
    code, out, _ = run(capsys, "eval", "--series", "C", "--partition", "6", "--z", "id")
    assert code == 0
    assert out == "1\n"


def test_eval_invalid_partition_exits_2(capsys):
    code, out, err = run(capsys, "eval", "--series", "C", "--partition", "2,1", "--z", "id")
    assert code == 2
    assert out == ""
    assert "even size" in err


def test_eval_bad_token_exits_2(capsys):
    code, _, err = run(capsys, "eval", "--series", "C", "--partition", "2,0")
    assert code == 2
    assert "positive" in err


def test_eval_json_schema(capsys):
    code, out, _ = run(
        capsys, "eval", "--series", "C", "--partition", "2,2,1,1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data == {
        "series": "C",
        "partition": [2, 2, 1, 1],
        "z": [],
        "poly": ["1", "3", "6", "9", "5"],
        "betti": [1, 3, 6, 9, 5],
    }


def test_table_rank1(capsys):
    code, out, _ = run(capsys, "table", "--series", "C", "--n", "1")
    assert code == 0
    assert out.splitlines() == [
        "(2)  id  1",
        "(2)  z2  1",
        "(1,1)  id  x + 1",
    ]


def test_table_csv_golden_rank2(capsys):
    code, out, _ = run(capsys, "table", "--series", "C", "--n", "2", "--format", "csv")
    assert code == 0
    assert out == (
        "partition,z,poly,betti\n"
        "4,id,1,1\n"
        "4,z4,1,1\n"
        "2.2,id,3*x + 1,1;3\n"
        "2.2,z2,x + 1,1;1\n"
        "2.1.1,id,x^2 + 2*x + 1,1;2;1\n"
        "2.1.1,z2,x^2 + 2*x + 1,1;2;1\n"
        "1.1.1.1,id,x^4 + 2*x^3 + 2*x^2 + 2*x + 1,1;2;2;2;1\n"
    )


def test_table_is_byte_identical_across_runs(capsys):
    _, first, _ = run(capsys, "table", "--series", "C", "--n", "3", "--format", "csv")
    _, second, _ = run(capsys, "table", "--series", "C", "--n", "3", "--format", "csv")
    assert first == second


def test_table_very_even_annotation(capsys):
    code, out, _ = run(capsys, "table", "--series", "D", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[2] == "(2,2)  id  x + 1  (very even: one row for both orbits)"


def test_orbit_label_ignored_with_notice(capsys):
    code, out, err = run(capsys, "eval", "--series", "D", "--partition", "2,2:+")
    assert code == 0
    assert out == "x + 1\n"
    assert "orbit label" in err


def test_expand_default_hides_null(capsys):
    code, out, _ = run(capsys, "expand", "--series", "B", "--partition", "1,1,1")
    assert code == 0
    assert out.splitlines() == ["[x + 1]  ((1), id)"]


def test_expand_show_null(capsys):
    code, out, _ = run(
        capsys, "expand", "--series", "B", "--partition", "1,1,1", "--show-null"
    )
    assert code == 0
    assert out.splitlines() == [
        "[x + 1]  ((1), id)",
        "[1/2*x^2 + 1/2*x]  null",
        "[1/2*x^2 - 1/2*x]  null",
    ]


def test_expand_single_term(capsys):
    code, out, _ = run(capsys, "expand", "--series", "C", "--partition", "4", "--z", "z4")
    assert code == 0
    assert out.splitlines() == ["[1]  ((2), z2)"]


def test_verify_ok_exit_0(capsys):
    code, out, err = run(
        capsys, "verify", "--series", "C", "--max-size", "4", "--q", "3", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "series,partition,z,q,count,predicted,match"
    assert "C,1.1.1.1,id,3,160,160,true" in lines


def test_verify_twisted(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--series", "C", "--max-size", "4", "--q", "3", "--twisted",
        "--format", "csv",
    )
    assert code == 0
    assert "C,2.2,z2,3,4,4,true" in out.splitlines()


def test_verify_bad_q_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--series", "C", "--max-size", "4", "--q", "4")
    assert code == 2
    assert "odd prime" in err


def test_printed_polynomials_parse_back(capsys):
    _, out, _ = run(capsys, "table", "--series", "C", "--n", "3", "--format", "csv")
    for line in out.splitlines()[1:]:
        poly_text = line.split(",")[2]
        assert str(Poly.parse(poly_text)) == poly_text


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--series", "E", "--partition", "2"])
    assert exc.value.code == 2
