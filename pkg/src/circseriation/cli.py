"""Command line front end.

Exit codes: 0 success, 2 usage errors, 3 unreadable or invalid input files,
4 inputs that fail the requested structural property.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path

import numpy as np

from .core import QTree, Status, check_dissimilarity, enumerate_orderings
from .exceptions import NotStrictInput, TooSmall
from .model import build_matrix, family, kendall_tau, quotient_kendall_tau, rate_experiment
from .robinson import (
    circular_violations,
    is_circular_robinson,
    is_linear_robinson,
    linear_violations,
)
from .seriation import recursive_seriation

__all__ = [
    "main",
    "read_matrix",
    "write_matrix",
    "read_permutation",
    "tree_to_document",
    "document_to_tree",
]

USAGE_ERROR = 2
PARSE_ERROR = 3
PROPERTY_ERROR = 4


class _InputError(Exception):
    """A file could not be read or failed validation."""


def read_matrix(path) -> np.ndarray:
    """Load a dissimilarity matrix from comma or whitespace separated text."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _InputError("cannot read %s: %s" % (path, exc))
    try:
        values = np.loadtxt(io.StringIO(text.replace(",", " ")), ndmin=2)
    except ValueError as exc:
        raise _InputError("cannot parse %s: %s" % (path, exc))
    try:
        return check_dissimilarity(values)
    except ValueError as exc:
        raise _InputError("%s: %s" % (path, exc))


def write_matrix(path, matrix: np.ndarray) -> None:
    np.savetxt(path, matrix, fmt="%.17g", delimiter=" ")


def read_permutation(path) -> tuple:
    """Load a permutation written as space separated indices on one line."""
    try:
        tokens = Path(path).read_text().split()
    except OSError as exc:
        raise _InputError("cannot read %s: %s" % (path, exc))
    try:
        perm = tuple(int(t) for t in tokens)
    except ValueError:
        raise _InputError("%s: permutations must contain only integers" % path)
    if sorted(perm) != list(range(len(perm))):
        raise _InputError("%s: not a permutation of 0..%d" % (path, len(perm) - 1))
    return perm


def tree_to_document(tree: QTree):
    """JSON-ready form: leaves as indices, nodes as child lists flagged
    with whether the node is still reversible."""
    if tree.is_leaf:
        return tree.index
    return {
        "orientable": tree.status is not Status.FIXED,
        "children": [tree_to_document(c) for c in tree.children],
    }


def document_to_tree(doc) -> QTree:
    if isinstance(doc, int):
        return QTree.leaf(doc)
    if isinstance(doc, dict):
        children = [document_to_tree(c) for c in doc["children"]]
        status = Status.NON_ORIENTABLE if doc.get("orientable") else Status.FIXED
        return QTree.qnode(children, status)
    raise _InputError("malformed tree document node: %r" % (doc,))


def _open_output(path):
    return open(path, "w") if path else sys.stdout


def _cmd_seriate(args) -> int:
    matrix = read_matrix(args.input)
    result = recursive_seriation(matrix)
    solutions = enumerate_orderings(result.tree, args.enumerate_max)
    doc = tree_to_document(result.tree)
    rep = " ".join(str(v) for v in result.tree.leaves())
    out = _open_output(args.output)
    try:
        print(json.dumps(doc, separators=(",", ":")), file=out)
        print(rep, file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    print(
        "orderings: %d%s" % (len(solutions), "+" if solutions.overflow else ""),
        file=sys.stderr,
    )
    return 0


def _cmd_check(args) -> int:
    matrix = read_matrix(args.input)
    if args.mode == "circular":
        ok = is_circular_robinson(matrix, strict=args.strict)
        violations = [] if ok else circular_violations(matrix, strict=args.strict)
    else:
        ok = is_linear_robinson(matrix, strict=args.strict)
        violations = [] if ok else linear_violations(matrix, strict=args.strict)
    if ok:
        print("ok")
        return 0
    for row, col in violations:
        print("row %d: first violation at column %d" % (row, col))
    return PROPERTY_ERROR


def _cmd_gen(args) -> int:
    fam = family(args.family)
    rng = np.random.default_rng(args.seed)
    points = rng.random(args.n)
    while np.unique(points).size < args.n:
        points = rng.random(args.n)
    matrix, _ = build_matrix(np.sort(points), fam)
    truth = np.arange(args.n)
    if args.permute:
        rho = rng.permutation(args.n)
        matrix = matrix[np.ix_(rho, rho)]
        # argsort inverts rho, so conjugating the written matrix by the
        # sidecar ordering recovers the sorted one.
        truth = np.argsort(rho)
    write_matrix(args.output, matrix)
    Path(args.output + ".truth").write_text(
        " ".join(str(int(v)) for v in truth) + "\n"
    )
    return 0


def _cmd_kendall(args) -> int:
    p1 = read_permutation(args.perm1)
    p2 = read_permutation(args.perm2)
    if len(p1) != len(p2):
        raise _InputError(
            "permutations differ in length: %d vs %d" % (len(p1), len(p2))
        )
    value = quotient_kendall_tau(p1, p2) if args.quotient else kendall_tau(p1, p2)
    print(repr(value))
    return 0


def _cmd_rate(args) -> int:
    fam = family(args.family)
    table = rate_experiment(
        args.ns, args.trials, fam, seed=args.seed, enumerate_cap=args.enumerate_max
    )
    csv = table.to_csv()
    if args.output:
        Path(args.output).write_text(csv)
    else:
        sys.stdout.write(csv)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circseriation",
        description="Strict circular seriation of dissimilarity matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seriate = sub.add_parser("seriate", help="order a matrix and print the result tree")
    seriate.add_argument("input", help="matrix file")
    seriate.add_argument("--enumerate-max", type=int, default=1024)
    seriate.add_argument("--output", default=None, help="write here instead of stdout")
    seriate.set_defaults(func=_cmd_seriate)

    check = sub.add_parser("check", help="test a matrix for Robinson structure")
    check.add_argument("input", help="matrix file")
    check.add_argument("--mode", choices=("circular", "linear"), default="circular")
    check.add_argument("--strict", action="store_true")
    check.set_defaults(func=_cmd_check)

    gen = sub.add_parser("gen", help="sample circle points and write their matrix")
    gen.add_argument("n", type=int)
    gen.add_argument("--family", choices=("arc", "chord", "warped"), default="arc")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--permute", action="store_true", help="hide the sorted order")
    gen.add_argument("--output", required=True)
    gen.set_defaults(func=_cmd_gen)

    kendall = sub.add_parser("kendall", help="distance between two orderings")
    kendall.add_argument("perm1")
    kendall.add_argument("perm2")
    kendall.add_argument(
        "--quotient",
        action="store_true",
        help="minimize over rotations and reflections of the first ordering",
    )
    kendall.set_defaults(func=_cmd_kendall)

    rate = sub.add_parser("rate", help="run the solution shrink rate experiment")
    rate.add_argument("--ns", type=int, nargs="+", required=True)
    rate.add_argument("--trials", type=int, required=True)
    rate.add_argument("--family", choices=("arc", "chord", "warped"), default="arc")
    rate.add_argument("--seed", type=int, default=0)
    rate.add_argument("--enumerate-max", type=int, default=1024)
    rate.add_argument("--output", default=None)
    rate.set_defaults(func=_cmd_rate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return PARSE_ERROR
    except TooSmall as exc:
        print("error: %s" % exc, file=sys.stderr)
        return PARSE_ERROR
    except NotStrictInput as exc:
        print("not strict: %s" % exc, file=sys.stderr)
        return PROPERTY_ERROR
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
