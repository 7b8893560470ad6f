"""The operator family Λ^{r+1}: Knuth moves, IN-swaps and the sign change.

Each operator is available at two levels: on signed permutations
(:func:`apply_op`) and directly on tableau pairs (:func:`apply_op_tableau`).
The second never reconstructs the permutation, so comparing the two is a
genuine cross-check of the insertion algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import CycleError, CycleKind, classify, cycles, extended_cycle, move_through_pair
from .insertion import TableauPair
from .signed_perm import SignedPermutation, right_mult_s, right_mult_t
from .tableau import Cells, DominoTableau, is_sparse, lies_below, normalize_cells, validate

KNUTH, IN, SC = "knuth", "in", "sc"


class NotApplicableError(ValueError):
    """The element (or tableau pair) is outside the operator's domain."""


@dataclass(frozen=True, order=True)
class OperatorDescriptor:
    """``Knuth(j)`` acts on positions j..j+2; ``InSwap(k)`` on k, k+1; ``SignChange(k)`` on 1..k+1."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in (KNUTH, IN, SC):
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.index < 1:
            raise ValueError("operator index must be positive")

    @classmethod
    def knuth(cls, j: int) -> OperatorDescriptor:
        return cls(KNUTH, j)

    @classmethod
    def in_swap(cls, k: int) -> OperatorDescriptor:
        return cls(IN, k)

    @classmethod
    def sign_change(cls, k: int) -> OperatorDescriptor:
        return cls(SC, k)

    @classmethod
    def parse(cls, text: str) -> OperatorDescriptor:
        """Accepts ``knuth:2``, ``in:3``, ``sc:3`` (or ``Knuth(2)`` style)."""
        t = text.strip().lower().replace("(", ":").rstrip(")")
        name, _, idx = t.partition(":")
        aliases = {"knuth": KNUTH, "k": KNUTH, "in": IN, "inswap": IN, "sc": SC, "signchange": SC}
        if name not in aliases or not idx.isdigit():
            raise ValueError(f"cannot parse operator {text!r}")
        return cls(aliases[name], int(idx))

    def fits(self, n: int) -> bool:
        if self.kind == KNUTH:
            return self.index <= n - 2
        if self.kind == IN:
            return self.index <= n - 1
        return self.index + 1 <= n

    def __str__(self):
        name = {KNUTH: "Knuth", IN: "InSwap", SC: "SignChange"}[self.kind]
        return f"{name}({self.index})"


def lambda_set(n: int, r: int) -> list[OperatorDescriptor]:
    """Λ^{r+1} for W_n, restricted to operators that exist in W_n."""
    ops = [OperatorDescriptor.knuth(j) for j in range(1, n - 1)]
    ops += [OperatorDescriptor.in_swap(i) for i in range(1, min(r + 1, n - 1) + 1)]
    if r + 2 <= n:
        ops.append(OperatorDescriptor.sign_change(r + 1))
    return ops


# -- group level --------------------------------------------------------


def knuth_applicable(w: SignedPermutation, j: int) -> bool:
    if not 1 <= j <= w.n - 2:
        raise IndexError(f"Knuth({j}) undefined in W_{w.n}")
    a, b, c = w.entries[j - 1 : j + 2]
    return b > max(a, c) or b < min(a, c)


def apply_knuth(w: SignedPermutation, j: int) -> SignedPermutation:
    if not knuth_applicable(w, j):
        raise NotApplicableError(f"{w} not in the domain of Knuth({j})")
    e = list(w.entries)
    window = e[j - 1 : j + 2]
    lo, hi = window.index(min(window)), window.index(max(window))
    e[j - 1 + lo], e[j - 1 + hi] = e[j - 1 + hi], e[j - 1 + lo]
    return SignedPermutation(tuple(e))


def in_applicable(w: SignedPermutation, k: int) -> bool:
    if not 1 <= k <= w.n - 1:
        raise IndexError(f"InSwap({k}) undefined in W_{w.n}")
    return (w(k) > 0) != (w(k + 1) > 0)


def apply_in(w: SignedPermutation, k: int) -> SignedPermutation:
    if not in_applicable(w, k):
        raise NotApplicableError(f"{w} not in the domain of InSwap({k})")
    return right_mult_s(w, k)


def sc_applicable(w: SignedPermutation, k: int) -> bool:
    if not 1 <= k <= w.n - 1:
        raise IndexError(f"SignChange({k}) undefined in W_{w.n}")
    mags = [abs(x) for x in w.entries[: k + 1]]
    return all(a > b for a, b in zip(mags, mags[1:]))


def apply_sc(w: SignedPermutation, k: int) -> SignedPermutation:
    if not sc_applicable(w, k):
        raise NotApplicableError(f"{w} not in the domain of SignChange({k})")
    return right_mult_t(w, 1)


_GROUP = {
    KNUTH: (knuth_applicable, apply_knuth),
    IN: (in_applicable, apply_in),
    SC: (sc_applicable, apply_sc),
}


def in_domain(op: OperatorDescriptor, w: SignedPermutation) -> bool:
    if not op.fits(w.n):
        return False
    return _GROUP[op.kind][0](w, op.index)


def apply_op(op: OperatorDescriptor, w: SignedPermutation) -> SignedPermutation:
    if not op.fits(w.n):
        raise NotApplicableError(f"{op} is not defined in W_{w.n}")
    return _GROUP[op.kind][1](w, op.index)


def applicable_ops(w: SignedPermutation, r: int) -> list[OperatorDescriptor]:
    return [op for op in lambda_set(w.n, r) if in_domain(op, w)]


# -- tableau level ------------------------------------------------------


def _swap_labels(T: DominoTableau, a: int, b: int) -> DominoTableau:
    return T.replace({a: T.domino(b), b: T.domino(a)})


def _descent(T2: DominoTableau, j: int) -> bool:
    """w(j) > w(j+1), read from the recording tableau."""
    return lies_below(T2, j + 1, j)


def _cells(*squares) -> Cells:
    return normalize_cells(squares)


def _knuth_configs(j: int, x: int, y: int) -> list[tuple[dict, dict]]:
    """The F_i / F~_i configurations anchored at (x, y) for labels j, j+1, j+2."""
    k, l = j + 1, j + 2
    f1 = {j: _cells((x, y), (x + 1, y)), k: _cells((x, y + 1), (x, y + 2)), l: _cells((x + 1, y + 1), (x + 1, y + 2))}
    f1t = {j: _cells((x, y), (x, y + 1)), l: _cells((x, y + 2), (x + 1, y + 2)), k: _cells((x + 1, y), (x + 1, y + 1))}
    f2 = {j: _cells((x, y), (x, y + 1)), k: _cells((x + 1, y), (x + 2, y)), l: _cells((x + 1, y + 1), (x + 2, y + 1))}
    f2t = {j: _cells((x, y), (x + 1, y)), k: _cells((x, y + 1), (x + 1, y + 1)), l: _cells((x + 2, y), (x + 2, y + 1))}
    return [(f1, f1t), (f2, f2t)]


def _matches(T: DominoTableau, config: dict) -> bool:
    return all(T.domino(k) == cells for k, cells in config.items())


def _knuth_on_right(T2: DominoTableau, j: int) -> DominoTableau:
    if _descent(T2, j) == _descent(T2, j + 1):
        raise NotApplicableError(f"pair not in the domain of Knuth({j})")
    x, y = T2.domino(j)[0]
    for f, ft in _knuth_configs(j, x, y):
        if _matches(T2, f):
            return T2.replace(ft)
        if _matches(T2, ft):
            return T2.replace(f)
    want = (not _descent(T2, j), not _descent(T2, j + 1))
    found = []
    for a, b in ((j, j + 1), (j + 1, j + 2)):
        cand = _swap_labels(T2, a, b)
        if validate(cand) is None and (_descent(cand, j), _descent(cand, j + 1)) == want:
            found.append(cand)
    if len(found) != 1:
        raise AssertionError(f"Knuth({j}): {len(found)} label swaps fit, expected exactly one")
    return found[0]


def _staircase_form(T2: DominoTableau):
    """Split T2(r+2) into core-adjacent horizontals, verticals and the extra domino.

    Returns ``(horizontals, verticals, extra_is_horizontal)`` with both lists
    ordered top to bottom, or None if T2(r+2) does not have that form.
    """
    r = T2.rank
    sub = T2.subtableau(r + 2)
    if sub.n != r + 2:
        return None
    hs, vs = [], []
    for m in range(1, r + 2):
        c = r + 2 - m
        k = sub.owner((m, c))
        if k is None:
            return None
        if sub.domino(k) == _cells((m, c), (m, c + 1)):
            if vs:
                return None
            hs.append(k)
        elif sub.domino(k) == _cells((m, c), (m + 1, c)):
            vs.append(k)
        else:
            return None
    a = len(hs)
    extra = r + 2
    if extra in hs or extra in vs:
        return None
    e_h = _cells((a + 1, r + 2 - a), (a + 1, r + 3 - a))
    e_v = _cells((a + 1, r + 2 - a), (a + 2, r + 2 - a))
    if sub.domino(extra) == e_h and hs and hs[0] == 1:
        return hs, vs, True
    if sub.domino(extra) == e_v and vs and vs[-1] == 1:
        return hs, vs, False
    return None


def _sign_change_on_right(T2: DominoTableau) -> DominoTableau:
    r = T2.rank
    form = _staircase_form(T2)
    if form is None:
        raise NotApplicableError(f"pair not in the domain of SignChange({r + 1})")
    hs, vs, extra_horizontal = form
    if extra_horizontal:
        # label 1 leaves the top row and becomes the bottom vertical
        hs, vs = hs[1:], vs + [1]
    else:
        hs, vs = [1] + hs, vs[:-1]
    a = len(hs)
    changes = {}
    for m, k in enumerate(hs, start=1):
        c = r + 2 - m
        changes[k] = _cells((m, c), (m, c + 1))
    for m, k in enumerate(vs, start=a + 1):
        c = r + 2 - m
        changes[k] = _cells((m, c), (m + 1, c))
    if extra_horizontal:
        changes[r + 2] = _cells((a + 1, r + 2 - a), (a + 2, r + 2 - a))
    else:
        changes[r + 2] = _cells((a + 1, r + 2 - a), (a + 1, r + 3 - a))
    return T2.replace(changes)


def _in_configs(k: int, T2: DominoTableau):
    """Classify labels k, k+1 as E_0, E_1, E~_0 or E~_1 (anchored at k's top-left)."""
    l = k + 1
    x, y = T2.domino(k)[0]
    table = {
        "E0": {k: _cells((x, y), (x + 1, y)), l: _cells((x, y + 1), (x + 1, y + 1))},
        "E1": {k: _cells((x, y), (x, y + 1)), l: _cells((x + 1, y), (x + 1, y + 1))},
        "E~0": {k: _cells((x, y), (x + 1, y)), l: _cells((x, y + 1), (x, y + 2))},
        "E~1": {k: _cells((x, y), (x, y + 1)), l: _cells((x + 1, y), (x + 2, y))},
    }
    for name, config in table.items():
        if _matches(T2, config):
            return name, table
    return None, table


def _flip_e(T2: DominoTableau, k: int) -> DominoTableau:
    name, table = _in_configs(k, T2)
    if name == "E0":
        return T2.replace(table["E1"])
    if name == "E1":
        return T2.replace(table["E0"])
    raise NotApplicableError(f"expected E_0 or E_1 for labels {k}, {k + 1}, found {name}")


def _assert_no_core_cycles(host: DominoTableau, labels) -> None:
    for c in cycles(host):
        if c <= labels and classify(host, c).kind is CycleKind.OPEN_CORE:
            # never happens inside the domain
            raise NotApplicableError("extended cycle through r+2 contains a core open cycle")


def _move_pair(p: TableauPair, b) -> TableauPair:
    try:
        return move_through_pair(p, b)
    except CycleError as exc:
        raise NotApplicableError(str(exc)) from exc


def _in_swap_top(p: TableauPair) -> TableauPair:
    """InSwap(r+1) when T2(r+2) is full: move through an extended cycle and flip E."""
    k = p.rank + 1
    T1, T2 = p.left, p.right
    name, _ = _in_configs(k, T2)
    if name in ("E0", "E1"):
        bar = TableauPair(T1, _flip_e(T2, k))
        b = extended_cycle(bar, k + 1, side="right")
        _assert_no_core_cycles(bar.right, b.in_right)
        return _move_pair(bar, b)
    if name in ("E~0", "E~1"):
        b = extended_cycle(p, k + 1, side="right")
        _assert_no_core_cycles(T2, b.in_right)
        bar = _move_pair(p, b)
        return TableauPair(bar.left, _flip_e(bar.right, k))
    raise NotApplicableError(f"labels {k}, {k + 1} of a full T2(r+2) form no E configuration")


def apply_op_tableau(op: OperatorDescriptor, p: TableauPair) -> TableauPair:
    """The operator's action on G_r(w), computed from the tableaux alone.

    The caller guarantees that w = G_r^{-1}(p) lies in the operator's domain.
    Knuth moves check this exactly. For SignChange(r+1), and for
    InSwap(r+1) when T2(r+2) is full, the right tableau does not determine
    membership ((2, 1) and (2, -1) share it in rank 0), so only pairs whose
    shape rules the operator out are rejected.
    """
    T1, T2 = p.left, p.right
    r = p.rank
    if not op.fits(p.n):
        raise NotApplicableError(f"{op} is not defined for n={p.n}")
    if op.kind == KNUTH:
        return TableauPair(T1, _knuth_on_right(T2, op.index))
    if op.kind == SC:
        if op.index != r + 1:
            raise NotApplicableError(f"tableau action of {op} is only known at rank {op.index - 1}")
        return TableauPair(T1, _sign_change_on_right(T2))
    k = op.index
    if k > r + 1:
        raise NotApplicableError(f"tableau action of {op} needs rank >= {k - 1}")
    if k <= r or is_sparse(T2.subtableau(r + 2)):
        # opposite signs show up as opposite orientations here
        if T2.is_horizontal(k) == T2.is_horizontal(k + 1):
            raise NotApplicableError(f"pair not in the domain of {op}")
        return TableauPair(T1, _swap_labels(T2, k, k + 1))
    return _in_swap_top(p)
