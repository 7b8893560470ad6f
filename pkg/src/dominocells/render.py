"""ASCII drawings of domino tableaux.

Each square is three characters wide. Walls are drawn between squares that
belong to different pieces; a domino's two squares share no wall, so the
label sits inside a 2-cell box. Core squares show ``·``.
"""

from __future__ import annotations

from .tableau import DominoTableau

_W = 3


def render_ascii(T: DominoTableau, core_char: str = "·") -> str:
    cells = T.cells()
    if not cells:
        return "(empty)"
    nrows = max(i for i, _ in cells)
    ncols = max(j for _, j in cells)

    def piece(i, j):
        if (i, j) not in cells:
            return None
        if T.in_core((i, j)):
            return ("core", i, j)
        return T.owner((i, j))

    def text(i, j):
        p = piece(i, j)
        if p is None:
            return " " * _W
        if isinstance(p, tuple):
            return core_char.center(_W)
        a, b = T.domino(p)
        # label shown once, in the first square of the domino
        return str(p).center(_W) if (i, j) == a else " " * _W

    lines = []
    for i in range(1, nrows + 2):
        # horizontal wall above row i
        top = []
        for j in range(1, ncols + 2):
            up, here = piece(i - 1, j), piece(i, j)
            left_up, left_here = piece(i - 1, j - 1), piece(i, j - 1)
            corner = "+" if {up, here, left_up, left_here} != {None} else " "
            top.append(corner)
            if j <= ncols:
                wall = up != here
                top.append("-" * _W if wall else " " * _W)
        lines.append("".join(top).rstrip())
        if i > nrows:
            break
        row = []
        for j in range(1, ncols + 2):
            left, here = piece(i, j - 1), piece(i, j)
            row.append("|" if left != here else " ")
            if j <= ncols:
                row.append(text(i, j))
        lines.append("".join(row).rstrip())
    return "\n".join(lines)
