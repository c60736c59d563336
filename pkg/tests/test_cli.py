"""End-to-end command line checks, all in-process through main(argv)."""

import io
import json
from itertools import combinations

from shiftkit import Face, SimplicialComplex
from shiftkit.cli import main, parse_complex_text

TWO_EDGES = "1 2\n3 4\n"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_shift_output_parses_back_to_the_frozen_shift(tmp_path, capsys):
    src = write(tmp_path, "b.cx", TWO_EDGES)
    code, out, _ = run(capsys, "shift", src)
    assert code == 0
    D = parse_complex_text(out)
    assert D == SimplicialComplex.from_facets(4, [[1, 2], [1, 3], [4]])
    assert "shifted=True" in out


def test_shift_json_is_deterministic(tmp_path, capsys):
    src = write(tmp_path, "b.cx", TWO_EDGES)
    code, first, _ = run(capsys, "shift", src, "--json")
    assert code == 0
    code, second, _ = run(capsys, "shift", src, "--json")
    assert code == 0
    assert first == second
    report = json.loads(first)
    assert report["schema"] == 1
    assert report["f_vector"] == [1, 4, 2]
    assert report["betti"] == [0, 1, 0]
    assert report["validated"] == {"is_shifted": True, "f_vector_preserved": True}
    assert report["retries"] == 0


def test_block_shift_pipes_into_generic_shift(tmp_path, capsys, monkeypatch):
    non = {frozenset((1, 4)), frozenset((2, 5)), frozenset((3, 6))}
    lines = [
        " ".join(map(str, e))
        for e in combinations(range(1, 7), 2)
        if frozenset(e) not in non
    ]
    src = write(tmp_path, "oct.cx", "\n".join(lines) + "\n")
    code, block_out, _ = run(capsys, "shift", src, "--matrix", "block:3,3")
    assert code == 0
    assert "shifted=False" in block_out

    monkeypatch.setattr("sys.stdin", io.StringIO(block_out))
    code, out, _ = run(capsys, "shift", "-")
    assert code == 0
    D = parse_complex_text(out)
    assert Face.of(4, 5) in D.face_set()


def test_explicit_matrix_identity_returns_input(tmp_path, capsys):
    src = write(tmp_path, "b.cx", TWO_EDGES)
    mat = write(
        tmp_path, "eye.mat", "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"
    )
    code, out, _ = run(capsys, "shift", src, "--matrix", f"explicit:{mat}", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["validated"]["is_shifted"] is False
    assert report["betti"] is None
    assert sorted(report["facets"]) == [[1, 2], [3, 4]]


def test_explicit_matrix_must_be_square_and_nonsingular(tmp_path, capsys):
    src = write(tmp_path, "b.cx", TWO_EDGES)
    singular = write(tmp_path, "s.mat", "\n".join(["1 1 1 1"] * 4) + "\n")
    code, _, err = run(capsys, "shift", src, "--matrix", f"explicit:{singular}")
    assert code == 1 and "singular" in err
    small = write(tmp_path, "t.mat", "1 0\n0 1\n")
    code, _, err = run(capsys, "shift", src, "--matrix", f"explicit:{small}")
    assert code == 1 and "4x4" in err


def test_parse_errors_exit_one(tmp_path, capsys):
    cases = {
        "words.cx": "1 two\n",
        "dup.cx": "1 1 2\n",
        "neg.cx": "0 1\n",
        "low.cx": "n=2\n1 2 3\n",
        "blank.cx": "# nothing here\n",
    }
    for name, text in cases.items():
        src = write(tmp_path, name, text)
        code, _, err = run(capsys, "shift", src)
        assert code == 1, name
        assert "error:" in err, name


def test_header_comments_and_empty_literal(tmp_path, capsys):
    src = write(tmp_path, "e.cx", "# just the empty face\nempty\n")
    code, out, _ = run(capsys, "op", "betti", src, "--json")
    assert code == 0
    assert json.loads(out)["betti"] == [1]

    src = write(tmp_path, "pad.cx", "n=3\n1 2\n")
    code, out, _ = run(capsys, "op", "betti", src, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["n"] == 3
    assert report["betti"] == [0, 0, 0]


def test_op_compare(tmp_path, capsys):
    b = write(tmp_path, "b.cx", TWO_EDGES)
    d = write(tmp_path, "d.cx", "n=4\n1 2\n1 3\n4\n")
    code, out, _ = run(capsys, "op", "compare", b, d)
    assert code == 0 and out == "relation: greater\n"
    code, out, _ = run(capsys, "op", "compare", d, b)
    assert code == 0 and out == "relation: less\n"


def test_op_construction_and_rules(tmp_path, capsys):
    e = write(tmp_path, "e.cx", "1 2\n")
    code, out, _ = run(capsys, "op", "cone", e)
    assert code == 0
    assert parse_complex_text(out) == SimplicialComplex.from_facets(3, [[1, 2, 3]])

    code, out, _ = run(capsys, "op", "dushift", e, e)
    assert code == 0
    D = parse_complex_text(out)
    assert D == SimplicialComplex.from_facets(4, [[1, 2], [1, 3], [4]])

    tri = write(tmp_path, "tri.cx", "1 2 3\n")
    code, out, _ = run(capsys, "op", "clique-sum", tri, tri, "--dim", "1")
    assert code == 0
    assert parse_complex_text(out) == SimplicialComplex.from_facets(
        4, [[1, 2, 3], [1, 2, 4]]
    )


def test_op_usage_errors(tmp_path, capsys):
    e = write(tmp_path, "e.cx", "1 2\n")
    assert run(capsys, "op", "cone", e, e)[0] == 1
    assert run(capsys, "op", "union", e)[0] == 1
    assert run(capsys, "op", "link", e)[0] == 1
    assert run(capsys, "op", "clique-sum", e, e)[0] == 1
    code, _, err = run(capsys, "op", "dushift", e, e.replace("e.cx", "missing.cx"))
    assert code == 1 and "error:" in err


def test_verify_named_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "counterexample", "--trials", "2")
    assert code == 0
    assert "suite counterexample: 4/4 ok" in out


def test_verify_json_aggregate(capsys):
    code, out, _ = run(
        capsys, "verify", "betti", "--trials", "3", "--max-n", "6", "--json"
    )
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["suites"][0]["suite"] == "betti"
    assert report["suites"][0]["passed"] == report["suites"][0]["total"]


def test_verify_guards(capsys):
    code, _, err = run(capsys, "verify", "nosuchsuite")
    assert code == 1 and "unknown suite" in err
    code, _, err = run(capsys, "verify", "betti", "--max-n", "20")
    assert code == 1 and "--force" in err


def test_explore_runs_clean(capsys):
    code, out, _ = run(capsys, "explore", "--trials", "5", "--max-n", "6")
    assert code == 0
    assert "violations: 0" in out


def test_bad_usage_and_help_exit_codes(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys)[0] == 1
    assert run(capsys, "shift")[0] == 1
    assert run(capsys, "op", "squash", "x")[0] == 1


def test_out_flag_writes_file(tmp_path, capsys):
    src = write(tmp_path, "b.cx", TWO_EDGES)
    dest = tmp_path / "out.cx"
    code, out, _ = run(capsys, "shift", src, "--out", str(dest))
    assert code == 0 and out == ""
    assert parse_complex_text(dest.read_text()) == SimplicialComplex.from_facets(
        4, [[1, 2], [1, 3], [4]]
    )
