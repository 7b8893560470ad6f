"""Rank-r domino tableaux: staircase cores, square parity, boxing, corners.

Squares are ``(row, column)`` pairs, 1-based, row 1 on top. A tableau stores
only its dominos; the core is the staircase ``{(i, j) : i + j < r + 2}``.
Tableaux are immutable values; every operation that changes one builds a
new tableau.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

Square = tuple[int, int]
Cells = tuple[Square, Square]

INF = math.inf


class SquareKind(enum.Enum):
    FIXED = "fixed"
    VARIABLE_X = "X"
    VARIABLE_W = "W"

    @property
    def variable(self) -> bool:
        return self is not SquareKind.FIXED


def square_kind(i: int, j: int, r: int) -> SquareKind:
    """Fixed when i+j and r have opposite parity; otherwise X in odd rows, W in even."""
    if (i + j - r) % 2:
        return SquareKind.FIXED
    return SquareKind.VARIABLE_X if i % 2 else SquareKind.VARIABLE_W


def core_shape(r: int) -> frozenset[Square]:
    if r < 0:
        raise ValueError("rank must be non-negative")
    return frozenset((i, j) for i in range(1, r + 1) for j in range(1, r + 2 - i))


def is_young(cells: Iterable[Square]) -> bool:
    """True if the squares form a (possibly empty) Young diagram."""
    cells = set(cells)
    for i, j in cells:
        if i < 1 or j < 1:
            return False
        if i > 1 and (i - 1, j) not in cells:
            return False
        if j > 1 and (i, j - 1) not in cells:
            return False
    return True


def row_lengths(cells: Iterable[Square]) -> tuple[int, ...]:
    lengths: dict[int, int] = {}
    for i, j in cells:
        lengths[i] = max(lengths.get(i, 0), j)
    return tuple(lengths[i] for i in sorted(lengths))


def normalize_cells(cells: Iterable[Iterable[int]]) -> Cells:
    a, b = sorted(tuple(int(x) for x in c) for c in cells)
    return a, b


def adjacent(a: Square, b: Square) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


@dataclass(frozen=True)
class Violation:
    """First broken invariant found by :func:`validate`."""

    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


class InvalidTableauError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


class DominoTableau:
    """A domino tableau of rank ``rank`` given by ``label -> (square, square)``.

    Construction does not check standardness, because intermediate tableaux
    during insertion carry arbitrary label sets. Use :func:`validate`.
    """

    __slots__ = ("rank", "_dominos", "_grid", "_hash", "_cache")

    def __init__(self, rank: int, dominos: Mapping[int, Iterable[Iterable[int]]] = ()):
        if rank < 0:
            raise ValueError("rank must be non-negative")
        self.rank = rank
        items = dominos.items() if isinstance(dominos, Mapping) else dominos
        self._dominos: dict[int, Cells] = {int(k): normalize_cells(v) for k, v in items}
        grid: dict[Square, int] = {}
        for k, cells in self._dominos.items():
            for c in cells:
                grid[c] = k
        self._grid = grid
        self._hash = None
        self._cache: dict = {}

    @classmethod
    def empty(cls, rank: int) -> DominoTableau:
        return cls(rank, {})

    # -- basic access ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._dominos)

    @property
    def labels(self) -> list[int]:
        return sorted(self._dominos)

    @property
    def dominos(self) -> dict[int, Cells]:
        return dict(self._dominos)

    def domino(self, k: int) -> Cells:
        try:
            return self._dominos[k]
        except KeyError:
            raise KeyError(f"label {k} not in tableau") from None

    def __contains__(self, k: int) -> bool:
        return k in self._dominos

    def is_horizontal(self, k: int) -> bool:
        a, b = self.domino(k)
        return a[0] == b[0]

    @property
    def core(self) -> frozenset[Square]:
        return core_shape(self.rank)

    def in_core(self, sq: Square) -> bool:
        i, j = sq
        return i >= 1 and j >= 1 and i + j < self.rank + 2

    def occupied(self, sq: Square) -> bool:
        """Whether the square lies in T (core squares count)."""
        return sq in self._grid or self.in_core(sq)

    def label_at(self, sq: Square) -> float:
        """Extended label: 0 on the core or off the board, ∞ outside T."""
        i, j = sq
        if i <= 0 or j <= 0 or self.in_core(sq):
            return 0
        return self._grid.get(sq, INF)

    def owner(self, sq: Square) -> int | None:
        return self._grid.get(sq)

    def domino_cells(self) -> frozenset[Square]:
        return frozenset(self._grid)

    def cells(self) -> frozenset[Square]:
        """Core plus every domino square."""
        return self.core.union(self._grid)

    def shape(self) -> tuple[int, ...]:
        return row_lengths(self.cells())

    # -- derived tableaux ---------------------------------------------

    def subtableau(self, k: int) -> DominoTableau:
        return DominoTableau(self.rank, {l: c for l, c in self._dominos.items() if l <= k})

    def replace(self, changes: Mapping[int, Iterable[Iterable[int]]], rank: int | None = None) -> DominoTableau:
        new = dict(self._dominos)
        new.update(changes)
        return DominoTableau(self.rank if rank is None else rank, new)

    def without(self, k: int) -> DominoTableau:
        return DominoTableau(self.rank, {l: c for l, c in self._dominos.items() if l != k})

    # -- value semantics ------------------------------------------------

    def _key(self):
        return self.rank, frozenset(self._dominos.items())

    def __eq__(self, other):
        if not isinstance(other, DominoTableau):
            return NotImplemented
        return self.rank == other.rank and self._dominos == other._dominos

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{k}: {list(c)}" for k, c in sorted(self._dominos.items()))
        return f"DominoTableau({self.rank}, {{{body}}})"

    def __str__(self):
        from .render import render_ascii

        return render_ascii(self)

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "dominoes": [
                {"label": k, "cells": [list(c) for c in cells]}
                for k, cells in sorted(self._dominos.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> DominoTableau:
        return cls(int(data["rank"]), {int(d["label"]): d["cells"] for d in data["dominoes"]})


def validate(T: DominoTableau, standard: bool = True) -> Violation | None:
    """Check the tableau invariants and report the first failure, or None."""
    seen: dict[Square, int] = {}
    for k, (a, b) in sorted(T._dominos.items()):
        if k < 1:
            return Violation("label", f"label {k} is not positive")
        if not adjacent(a, b):
            return Violation("domino", f"domino {k} cells {a}, {b} are not adjacent")
        for c in (a, b):
            if c[0] < 1 or c[1] < 1:
                return Violation("domino", f"domino {k} uses non-positive square {c}")
            if T.in_core(c):
                return Violation("core", f"domino {k} overlaps core square {c}")
            if c in seen:
                return Violation("overlap", f"dominos {seen[c]} and {k} share square {c}")
            seen[c] = k
    if not is_young(T.cells()):
        return Violation("shape", f"occupied squares do not form a Young diagram: {T.shape()}")
    if standard and sorted(T._dominos) != list(range(1, T.n + 1)):
        return Violation("standard", f"labels {sorted(T._dominos)} are not 1..{T.n}")
    for (i, j), k in sorted(seen.items()):
        for nb in ((i - 1, j), (i, j - 1)):
            if T.label_at(nb) > k:
                return Violation("order", f"label {k} at {(i, j)} is smaller than its neighbour at {nb}")
    return None


def check(T: DominoTableau, standard: bool = True) -> DominoTableau:
    violation = validate(T, standard)
    if violation is not None:
        raise InvalidTableauError(violation)
    return T


def is_boxed(cells: Iterable[Square], T: DominoTableau | int) -> bool:
    """Contained in a 2x2 block whose top-left square has type X.

    The second argument is the tableau (or just its rank); the empty set is
    boxed. The block may hang off the board (top-left in row or column 0),
    otherwise dominos along the edges could never change boxing.
    """
    r = T if isinstance(T, int) else T.rank
    cells = set(cells)
    if not cells:
        return True
    rows = [c[0] for c in cells]
    cols = [c[1] for c in cells]
    for a in range(max(rows) - 1, min(rows) + 1):
        for b in range(max(cols) - 1, min(cols) + 1):
            if a < 0 or b < 0 or square_kind(a, b, r) is not SquareKind.VARIABLE_X:
                continue
            if all(a <= i <= a + 1 and b <= j <= b + 1 for i, j in cells):
                return True
    return False


@dataclass(frozen=True)
class HoleOrCorner:
    square: Square
    kind: str  # "hole" | "corner"
    full: bool


def holes_and_corners(T: DominoTableau) -> list[HoleOrCorner]:
    """Variable squares at the outer bends of the shape.

    Squares with a non-positive index count as lying in T, which folds the
    boundary clause (j = 1 or i = 1) into the two-neighbour test.
    """
    cells = T.cells()

    def present(sq: Square) -> bool:
        return sq[0] <= 0 or sq[1] <= 0 or sq in cells

    rows = max((c[0] for c in cells), default=0) + 1
    cols = max((c[1] for c in cells), default=0) + 1
    out = []
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            kind = square_kind(i, j, T.rank)
            if not kind.variable:
                continue
            if present((i, j + 1)) or present((i + 1, j)):
                continue
            if not (present((i - 1, j)) and present((i, j - 1))):
                continue
            name = "hole" if kind is SquareKind.VARIABLE_W else "corner"
            out.append(HoleOrCorner((i, j), name, (i, j) in cells))
    return out


def has_full_corner(T: DominoTableau) -> bool:
    return any(h.kind == "corner" and h.full for h in holes_and_corners(T))


def is_sparse(T: DominoTableau) -> bool:
    """Some anti-diagonal square S_{m, r+3-m} is empty."""
    r = T.rank
    return any(not T.occupied((m, r + 3 - m)) for m in range(1, r + 3))


def shape(T: DominoTableau) -> tuple[int, ...]:
    return T.shape()


def subtableau(T: DominoTableau, k: int) -> DominoTableau:
    return T.subtableau(k)


def lies_below(T: DominoTableau, k: int, l: int) -> bool:
    """Every row of domino k is strictly below every row of domino l."""
    return min(c[0] for c in T.domino(k)) > max(c[0] for c in T.domino(l))
