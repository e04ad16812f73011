"""Recognition of unimodal rows and of circular and linear Robinson
structure, with exact comparisons throughout."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import check_dissimilarity

__all__ = [
    "UnimodalReport",
    "is_unimodal",
    "is_circular_robinson",
    "is_linear_robinson",
    "verify_ordering",
    "circular_violations",
    "linear_violations",
]


@dataclass
class UnimodalReport:
    """Outcome of a unimodality check on one sequence.

    ``modes`` lists the positions where the maximum plateau may sit; it is
    empty when the sequence is not unimodal.
    """

    unimodal: bool
    strict: bool
    modes: list


def _row_shape(rows: np.ndarray):
    """Vectorized peak structure of each row.

    Returns (unimodal, strict, first_mode, last_mode) arrays.  A row is
    unimodal when it never rises again after having fallen; it is strictly
    so when the top plateau has at most two equal entries and no other
    neighbouring entries tie.
    """
    m, width = rows.shape
    if width == 1:
        ones = np.ones(m, dtype=bool)
        zeros = np.zeros(m, dtype=int)
        return ones, ones.copy(), zeros, zeros.copy()
    steps = np.diff(rows, axis=1)
    falling = steps < 0
    has_fall = falling.any(axis=1)
    last_mode = np.where(has_fall, np.argmax(falling, axis=1), width - 1)
    rising = steps > 0
    has_rise = rising.any(axis=1)
    last_rise = np.where(has_rise, width - 2 - np.argmax(rising[:, ::-1], axis=1), -1)
    first_mode = last_rise + 1
    unimodal = first_mode <= last_mode
    flat_steps = (steps == 0).sum(axis=1)
    plateau = last_mode - first_mode
    strict = unimodal & (plateau <= 1) & (flat_steps == plateau)
    return unimodal, strict, first_mode, last_mode


def is_unimodal(f) -> UnimodalReport:
    """Check one sequence for a single circularly contiguous maximum."""
    row = np.asarray(f, dtype=float)
    if row.ndim != 1 or row.size == 0:
        raise ValueError("expected a nonempty one dimensional sequence")
    unimodal, strict, first, last = _row_shape(row[None, :])
    ok = bool(unimodal[0])
    modes = list(range(int(first[0]), int(last[0]) + 1)) if ok else []
    return UnimodalReport(ok, bool(strict[0]), modes)


def _wrapped_rows(d: np.ndarray) -> np.ndarray:
    """Row i read as d(i, i), d(i, i+1), ... around the cycle."""
    n = d.shape[0]
    offsets = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return d[np.arange(n)[:, None], offsets]


def _circular_ok(d: np.ndarray, strict: bool) -> bool:
    unimodal, strict_rows, _, _ = _row_shape(_wrapped_rows(d))
    return bool(strict_rows.all() if strict else unimodal.all())


def is_circular_robinson(d, strict: bool = False) -> bool:
    """Whether every row, read around the cycle, is (strictly) unimodal."""
    return _circular_ok(check_dissimilarity(d), strict)


def is_linear_robinson(d, strict: bool = False) -> bool:
    """Whether entries never decrease moving away from the diagonal.

    In the strict variant every step beyond the first off-diagonal one must
    increase; zero entries next to the diagonal are still allowed.
    """
    d = check_dissimilarity(d)
    n = d.shape[0]
    if n <= 2:
        return True
    steps = np.diff(d, axis=1)
    cols = np.arange(n - 1)[None, :]
    rows = np.arange(n)[:, None]
    right = cols >= rows
    left = cols <= rows - 1
    if ((steps < 0) & right).any() or ((steps > 0) & left).any():
        return False
    if strict:
        if ((steps <= 0) & (cols >= rows + 1)).any():
            return False
        if ((steps >= 0) & (cols <= rows - 2)).any():
            return False
    return True


def verify_ordering(d, perm, strict: bool = False) -> bool:
    """Whether conjugating d by perm yields a (strictly) circular Robinson
    matrix."""
    d = check_dissimilarity(d)
    n = d.shape[0]
    order = [int(v) for v in perm]
    if sorted(order) != list(range(n)):
        raise ValueError("perm must be a permutation of range(%d)" % n)
    return _circular_ok(d[np.ix_(order, order)], strict)


def circular_violations(d, strict: bool = False) -> list:
    """(row, column) of the first violation in each failing wrapped row."""
    d = check_dissimilarity(d)
    n = d.shape[0]
    rows = _wrapped_rows(d)
    unimodal, strict_rows, first, last = _row_shape(rows)
    bad = ~(strict_rows if strict else unimodal)
    out = []
    for i in np.nonzero(bad)[0]:
        steps = np.diff(rows[i])
        if not unimodal[i]:
            fall = int(np.argmax(steps < 0))
            rise = fall + 1 + int(np.argmax(steps[fall + 1:] > 0))
            out.append((int(i), int((i + rise + 1) % n)))
            continue
        lo, hi = int(first[i]), int(last[i])
        if hi - lo > 1:
            out.append((int(i), int((i + lo + 2) % n)))
            continue
        flats = np.nonzero(steps == 0)[0]
        extra = next(int(j) for j in flats if not (lo <= j < hi))
        out.append((int(i), int((i + extra + 1) % n)))
    return out


def linear_violations(d, strict: bool = False) -> list:
    """(row, column) of the first violation moving away from the diagonal,
    inspecting the right side of each row before the left."""
    d = check_dissimilarity(d)
    n = d.shape[0]
    out = []
    for i in range(n):
        hit = None
        for j in range(i, n - 1):
            step = d[i, j + 1] - d[i, j]
            if step < 0 or (strict and j >= i + 1 and step == 0):
                hit = (i, j + 1)
                break
        if hit is None:
            for j in range(i, 0, -1):
                step = d[i, j - 1] - d[i, j]
                if step < 0 or (strict and j <= i - 1 and step == 0):
                    hit = (i, j - 1)
                    break
        if hit is not None:
            out.append(hit)
    return out
