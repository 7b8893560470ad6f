"""Domino insertion and the rank-r Robinson-Schensted bijection G_r.

Inserting a signed value ``x`` into a tableau keeps every domino with label
below ``|x|``, places the new domino horizontally at the end of row 1
(``x > 0``) or vertically at the end of column 1 (``x < 0``), then revisits
the larger dominos in increasing order. Writing ``B`` for the squares most
recently taken from the old shape, a domino ``D``:

* disjoint from ``B`` stays put;
* meeting ``B`` in one square moves to the complement of ``B`` in the 2x2
  block ``D ∪ B`` spans, and ``B`` becomes the complement of ``D`` there;
* equal to ``B`` is bumped: horizontal ones to the end of the next row,
  vertical ones to the end of the next column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .signed_perm import SignedPermutation
from .tableau import Cells, DominoTableau, Square, check, normalize_cells


@dataclass(frozen=True)
class TableauPair:
    """A same-shape pair ``(left, right) = (T1, T2)``."""

    left: DominoTableau
    right: DominoTableau

    def __post_init__(self):
        if self.left.rank != self.right.rank:
            raise ValueError("tableaux of a pair must share the rank")
        if self.left.cells() != self.right.cells():
            raise ValueError("tableaux of a pair must have the same shape")

    @property
    def rank(self) -> int:
        return self.left.rank

    @property
    def n(self) -> int:
        return self.left.n

    def swap(self) -> TableauPair:
        return TableauPair(self.right, self.left)

    def to_json(self) -> dict:
        return {"left": self.left.to_json(), "right": self.right.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> TableauPair:
        return cls(DominoTableau.from_json(data["left"]), DominoTableau.from_json(data["right"]))


def _block(a: set[Square]) -> set[Square]:
    i0 = min(i for i, _ in a)
    j0 = min(j for _, j in a)
    block = {(i0, j0), (i0 + 1, j0), (i0, j0 + 1), (i0 + 1, j0 + 1)}
    if not a <= block:
        raise AssertionError(f"squares {sorted(a)} do not fit in a 2x2 block")
    return block


def _row_end(occupied: set[Square], i: int) -> int:
    return max((j for (ii, j) in occupied if ii == i), default=0)


def _col_end(occupied: set[Square], j: int) -> int:
    return max((i for (i, jj) in occupied if jj == j), default=0)


def insert_alpha(T: DominoTableau, value: int) -> DominoTableau:
    """Insert the signed value into T, returning a tableau with one more domino."""
    if value == 0:
        raise ValueError("cannot insert 0")
    a = abs(value)
    if a in T:
        raise ValueError(f"label {a} already present")
    new: dict[int, Cells] = {}
    occupied = set(T.core)
    for k in T.labels:
        if k < a:
            new[k] = T.domino(k)
            occupied.update(new[k])
    if value > 0:
        L = _row_end(occupied, 1)
        bumped = {(1, L + 1), (1, L + 2)}
    else:
        C = _col_end(occupied, 1)
        bumped = {(C + 1, 1), (C + 2, 1)}
    new[a] = normalize_cells(bumped)
    occupied |= bumped

    for k in T.labels:
        if k < a:
            continue
        d = set(T.domino(k))
        overlap = d & bumped
        if not overlap:
            moved = d
        elif len(overlap) == 1:
            block = _block(d | bumped)
            moved = block - bumped
            bumped = block - d
        else:
            (i, j), (i2, j2) = sorted(d)
            if i == i2:
                L = _row_end(occupied, i + 1)
                moved = {(i + 1, L + 1), (i + 1, L + 2)}
            else:
                C = _col_end(occupied, j + 1)
                moved = {(C + 1, j + 1), (C + 2, j + 1)}
            bumped = moved
        new[k] = normalize_cells(moved)
        occupied |= moved
    return DominoTableau(T.rank, new)


def rs_map(w: SignedPermutation, r: int) -> TableauPair:
    """G_r(w): insertion tableau on the left, recording tableau on the right."""
    T1 = DominoTableau.empty(r)
    recording: dict[int, Cells] = {}
    before = T1.cells()
    for k, x in enumerate(w.entries, start=1):
        T1 = insert_alpha(T1, x)
        after = T1.cells()
        grown = after - before
        if len(grown) != 2 or not before <= after:
            raise AssertionError(f"insertion of {x} did not add exactly one domino")
        recording[k] = normalize_cells(grown)
        before = after
    return TableauPair(T1, DominoTableau(r, recording))


def _undo_insertion(T: DominoTableau, freed: set[Square]) -> tuple[DominoTableau, int]:
    """Reverse one insertion, given the squares it added to the shape."""
    bumped = set(freed)
    restored: dict[int, Cells] = {}
    labels = T.labels
    for idx in range(len(labels) - 1, -1, -1):
        k = labels[idx]
        d = set(T.domino(k))
        overlap = d & bumped
        if not overlap:
            restored[k] = T.domino(k)
            continue
        if len(overlap) == 1:
            block = _block(d | bumped)
            restored[k] = normalize_cells(block - bumped)
            bumped = block - d
            continue
        (i, j), (i2, j2) = sorted(d)
        horizontal = i == i2
        if horizontal and i == 1 or not horizontal and j == 1:
            for l in labels[:idx]:
                restored[l] = T.domino(l)
            return DominoTableau(T.rank, restored), (k if horizontal else -k)
        below = set(T.core)
        for l in labels[:idx]:
            below.update(T.domino(l))
        if horizontal:
            L = _row_end(below, i - 1)
            prev = {(i - 1, L - 1), (i - 1, L)}
        else:
            C = _col_end(below, j - 1)
            prev = {(C - 1, j - 1), (C, j - 1)}
        restored[k] = normalize_cells(prev)
        bumped = prev
    raise AssertionError("reverse insertion never reached row 1 or column 1")


def reverse_step(p: TableauPair) -> tuple[TableauPair, int]:
    """``(T1, T2)'``: drop the largest domino of T2 and un-insert from T1.

    Returns the smaller pair and the signed value that was last inserted.
    """
    if p.n == 0:
        raise ValueError("cannot reverse an empty pair")
    n = max(p.right.labels)
    freed = set(p.right.domino(n))
    left, value = _undo_insertion(p.left, freed)
    # relabel so the left tableau stays standard on the remaining values
    a = abs(value)
    left = DominoTableau(left.rank, {(k - 1 if k > a else k): c for k, c in left.dominos.items()})
    return TableauPair(left, p.right.without(n)), value


def rs_inverse(p: TableauPair) -> SignedPermutation:
    """Recover w from G_r(w)."""
    check(p.left)
    check(p.right)
    values: list[int] = []
    while p.n:
        p, value = reverse_step(p)
        values.append(value)
    # values are relative to the shrinking label set; undo the relabelling
    entries: list[int] = []
    for value in reversed(values):
        a = abs(value)
        entries = [(x + 1 if x > 0 else x - 1) if abs(x) >= a else x for x in entries]
        entries.append(value)
    return SignedPermutation(tuple(entries))
