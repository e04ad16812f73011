"""Command line interface: exit codes, file formats, and round trips."""

import json

import numpy as np
import pytest

from circseriation import verify_ordering
from circseriation.cli import (
    document_to_tree,
    main,
    read_matrix,
    read_permutation,
    tree_to_document,
    write_matrix,
)
from circseriation.core import QTree, Status

from oracles import arc_metric_matrix


def _write_matrix(path, matrix):
    write_matrix(str(path), np.asarray(matrix, dtype=float))
    return str(path)


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["no-such-command"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


def test_read_matrix_comma_and_whitespace(tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("0, 1.5\n1.5 0\n")
    matrix = read_matrix(str(p))
    assert (matrix == np.array([[0.0, 1.5], [1.5, 0.0]])).all()


def test_matrix_round_trip(tmp_path):
    d = arc_metric_matrix(np.random.default_rng(0).random(7))
    p = _write_matrix(tmp_path / "m.txt", d)
    assert (read_matrix(p) == d).all()


def test_missing_file_exits_3(tmp_path):
    assert main(["seriate", str(tmp_path / "nope.txt")]) == 3


def test_malformed_matrix_exits_3(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("0 1\n1 zero\n")
    assert main(["seriate", str(p)]) == 3
    p.write_text("0 1 2\n1 0 3\n")
    assert main(["seriate", str(p)]) == 3
    p.write_text("0 1\n2 0\n")
    assert main(["seriate", str(p)]) == 3


def test_seriate_writes_tree_and_ordering(tmp_path, capsys):
    pts = np.sort(np.random.default_rng(1).random(9))
    p = _write_matrix(tmp_path / "m.txt", arc_metric_matrix(pts))
    out = tmp_path / "result.txt"
    assert main(["seriate", p, "--output", str(out)]) == 0
    doc_line, perm_line = out.read_text().splitlines()
    doc = json.loads(doc_line)
    assert isinstance(doc, (dict, int))
    ordering = [int(v) for v in perm_line.split()]
    assert sorted(ordering) == list(range(9))
    assert verify_ordering(read_matrix(p), ordering, strict=True)
    tree = document_to_tree(doc)
    assert tree.leaves() == ordering


def test_seriate_to_stdout(tmp_path, capsys):
    p = _write_matrix(tmp_path / "m.txt", arc_metric_matrix([0.0, 0.2, 0.6]))
    assert main(["seriate", p]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    json.loads(lines[0])


def test_seriate_not_strict_exits_4(tmp_path):
    d = np.full((4, 4), 2.0)
    d[0, :] = d[:, 0] = 1.0
    np.fill_diagonal(d, 0)
    p = _write_matrix(tmp_path / "hub.txt", d)
    assert main(["seriate", p]) == 4


def test_seriate_too_small_exits_3(tmp_path):
    p = tmp_path / "one.txt"
    p.write_text("0\n")
    assert main(["seriate", str(p)]) == 3


def test_check_passes_and_fails(tmp_path, capsys):
    good = _write_matrix(
        tmp_path / "good.txt",
        arc_metric_matrix(np.linspace(0, 1, 5, endpoint=False)),
    )
    assert main(["check", good, "--strict"]) == 0
    assert capsys.readouterr().out.strip() == "ok"

    d = arc_metric_matrix([0.0, 0.25, 0.5, 0.75])
    rho = [0, 2, 1, 3]
    bad = _write_matrix(tmp_path / "bad.txt", d[np.ix_(rho, rho)])
    assert main(["check", bad, "--strict"]) == 4
    out = capsys.readouterr().out
    assert "violation" in out


def test_check_linear_mode(tmp_path, capsys):
    line = np.abs(np.subtract.outer(np.arange(5.0), np.arange(5.0)))
    p = _write_matrix(tmp_path / "line.txt", line)
    assert main(["check", p, "--mode", "linear", "--strict"]) == 0
    ring = _write_matrix(
        tmp_path / "ring.txt",
        arc_metric_matrix(np.linspace(0, 1, 6, endpoint=False)),
    )
    assert main(["check", ring, "--mode", "linear"]) == 4
    capsys.readouterr()


def test_gen_writes_strict_instance(tmp_path):
    out = tmp_path / "gen.txt"
    assert main(["gen", "12", "--seed", "4", "--output", str(out)]) == 0
    matrix = read_matrix(str(out))
    assert matrix.shape == (12, 12)
    truth = read_permutation(str(out) + ".truth")
    assert truth == tuple(range(12))
    assert verify_ordering(matrix, truth, strict=True)


def test_gen_permuted_sidecar_recovers(tmp_path):
    out = tmp_path / "gen.txt"
    assert main(
        ["gen", "10", "--seed", "6", "--permute", "--family", "warped", "--output", str(out)]
    ) == 0
    matrix = read_matrix(str(out))
    truth = read_permutation(str(out) + ".truth")
    assert verify_ordering(matrix, truth, strict=True)


def test_gen_deterministic(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    main(["gen", "8", "--seed", "3", "--output", str(a)])
    main(["gen", "8", "--seed", "3", "--output", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_kendall_outputs_value(tmp_path, capsys):
    p1 = tmp_path / "p1.txt"
    p2 = tmp_path / "p2.txt"
    p1.write_text("0 1 2 3\n")
    p2.write_text("3 2 1 0\n")
    assert main(["kendall", str(p1), str(p2)]) == 0
    assert float(capsys.readouterr().out.strip()) == 1.0
    assert main(["kendall", str(p1), str(p2), "--quotient"]) == 0
    assert float(capsys.readouterr().out.strip()) == 0.0


def test_kendall_length_mismatch_exits_3(tmp_path):
    p1 = tmp_path / "p1.txt"
    p2 = tmp_path / "p2.txt"
    p1.write_text("0 1 2\n")
    p2.write_text("1 0\n")
    assert main(["kendall", str(p1), str(p2)]) == 3


def test_kendall_rejects_non_permutation(tmp_path):
    p1 = tmp_path / "p1.txt"
    p2 = tmp_path / "p2.txt"
    p1.write_text("0 2 2\n")
    p2.write_text("0 1 2\n")
    assert main(["kendall", str(p1), str(p2)]) == 3


def test_rate_writes_csv(tmp_path):
    out = tmp_path / "rate.csv"
    code = main(
        ["rate", "--ns", "6", "8", "--trials", "2", "--seed", "1", "--output", str(out)]
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "n,trials,mean_diam,std_diam,norm_stat,mean_eps"
    assert len(lines) == 3
    assert lines[1].startswith("6,") and lines[2].startswith("8,")


def test_rate_deterministic(tmp_path, capsys):
    args = ["rate", "--ns", "6", "--trials", "3", "--seed", "9"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_tree_document_round_trip():
    tree = QTree.qnode(
        [
            QTree.qnode([QTree.leaf(0), QTree.leaf(3)], Status.NON_ORIENTABLE),
            QTree.leaf(1),
            QTree.leaf(2),
        ],
        Status.FIXED,
    )
    doc = tree_to_document(tree)
    assert doc == {
        "orientable": False,
        "children": [{"orientable": True, "children": [0, 3]}, 1, 2],
    }
    back = document_to_tree(doc)
    assert back.to_nested() == tree.to_nested()
    assert back.children[0].status is Status.NON_ORIENTABLE
    assert back.status is Status.FIXED
