"""Cycles, moving through, extended cycles, and the somewhat-special form."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .insertion import TableauPair
from .tableau import (
    Cells,
    DominoTableau,
    SquareKind,
    Square,
    core_shape,
    has_full_corner,
    is_boxed,
    is_young,
    normalize_cells,
    square_kind,
)


class CycleKind(enum.Enum):
    CLOSED = "closed"
    OPEN_CORE = "open-core"
    OPEN_NONCORE = "open-noncore"


@dataclass(frozen=True)
class CycleClass:
    kind: CycleKind
    back: Square | None = None  # S_b
    front: Square | None = None  # S_f

    @property
    def is_open(self) -> bool:
        return self.kind is not CycleKind.CLOSED


@dataclass(frozen=True)
class ExtendedCyclePair:
    """Matched extended cycles: labels moved in T1 and labels moved in T2."""

    in_left: frozenset[int]
    in_right: frozenset[int]


class CycleError(ValueError):
    pass


def moved_domino(k: int, T: DominoTableau) -> Cells:
    """Squares of D'(k, T), the domino k slides to when moved through."""
    a, b = T.domino(k)
    if square_kind(*a, T.rank) is SquareKind.FIXED:
        fixed, other = a, b
    else:
        fixed, other = b, a
    i, j = fixed
    if other in ((i + 1, j), (i, j - 1)):
        if k < T.label_at((i - 1, j + 1)):
            return normalize_cells([fixed, (i - 1, j)])
        return normalize_cells([fixed, (i, j + 1)])
    if k < T.label_at((i + 1, j - 1)):
        return normalize_cells([fixed, (i, j - 1)])
    return normalize_cells([fixed, (i + 1, j)])


def _moves(T: DominoTableau) -> dict[int, Cells]:
    moves = T._cache.get("moves")
    if moves is None:
        moves = T._cache["moves"] = {k: moved_domino(k, T) for k in T.labels}
    return moves


def cycles(T: DominoTableau) -> list[frozenset[int]]:
    """All cycles of T, ordered by their least label."""
    found = T._cache.get("cycles")
    if found is not None:
        return found
    moves = _moves(T)
    # squares of D'(m) hit domino owner(square); link both directions
    links: dict[int, set[int]] = {k: set() for k in T.labels}
    for m, cells in moves.items():
        for sq in cells:
            l = T.owner(sq)
            if l is not None:
                links[m].add(l)
                links[l].add(m)
    found, seen = [], set()
    for k in T.labels:
        if k in seen:
            continue
        comp, stack = {k}, [k]
        while stack:
            for l in links[stack.pop()]:
                if l not in comp:
                    comp.add(l)
                    stack.append(l)
        seen |= comp
        found.append(frozenset(comp))
    T._cache["cycles"] = found
    return found


def cycle(k: int, T: DominoTableau) -> frozenset[int]:
    """The cycle through k."""
    if k not in T:
        raise KeyError(f"label {k} not in tableau")
    for c in cycles(T):
        if k in c:
            return c
    raise AssertionError("cycles do not cover the labels")


def cycle_squares(T: DominoTableau, c: Iterable[int]) -> set[Square]:
    return {sq for k in c for sq in T.domino(k)}


def moved_squares(T: DominoTableau, c: Iterable[int]) -> set[Square]:
    moves = _moves(T)
    return {sq for k in c for sq in moves[k]}


def classify(T: DominoTableau, c: frozenset[int]) -> CycleClass:
    """Closed, or open with its vacated square S_b and new square S_f."""
    cache = T._cache.setdefault("classes", {})
    if c in cache:
        return cache[c]
    old = cycle_squares(T, c)
    new = moved_squares(T, c)
    if old == new:
        out = CycleClass(CycleKind.CLOSED)
    else:
        (back,), (front,) = old - new, new - old
        remaining = (T.cells() - {back}) | {front}
        kind = CycleKind.OPEN_NONCORE if is_young(remaining) else CycleKind.OPEN_CORE
        out = CycleClass(kind, back, front)
    cache[c] = out
    return out


def _require_cycle(T: DominoTableau, c: Iterable[int]) -> frozenset[int]:
    c = frozenset(c)
    if not c or c not in cycles(T):
        raise CycleError(f"{sorted(c)} is not a cycle of the tableau")
    return c


def move_through(T: DominoTableau, c: Iterable[int]) -> tuple[DominoTableau, CycleClass]:
    """MT(T, c) together with the classification of c.

    Moving through a core open cycle puts S_b into the core. That is a valid
    tableau only when the enlarged core is again a staircase (always so in
    rank 0); otherwise CycleError is raised.
    """
    c = _require_cycle(T, c)
    return move_through_set(T, [c]), classify(T, c)


def move_through_set(T: DominoTableau, U: Iterable[Iterable[int]]) -> DominoTableau:
    """MT(T, U) for pairwise disjoint cycles U of T.

    All dominos move at once to their D' in T. Core open cycles add their
    S_b to the core; the result must again have a staircase core.
    """
    U = [_require_cycle(T, c) for c in U]
    seen: set[int] = set()
    for c in U:
        if seen & c:
            raise CycleError("cycles in the set overlap")
        seen |= c
    moves = _moves(T)
    core = set(T.core)
    for c in U:
        cls = classify(T, c)
        if cls.kind is CycleKind.OPEN_CORE:
            core.add(cls.back)
    rank = T.rank + len(core) - len(T.core)
    if core != core_shape(rank):
        raise CycleError("moving through these core cycles leaves a non-staircase core")
    return T.replace({k: moves[k] for k in seen}, rank=rank)


def move_through_sequence(T: DominoTableau, U: Iterable[Iterable[int]]) -> DominoTableau:
    """Move through the cycles of U one at a time, in the given order.

    Each member must still be a cycle of the current tableau when its turn
    comes. Only rank-preserving cycles are accepted.
    """
    for c in U:
        T, cls = move_through(T, c)
        if cls.kind is CycleKind.OPEN_CORE:
            raise CycleError("sequential moves are limited to closed and non-core open cycles")
    return T


def open_cycles(T: DominoTableau, kind: CycleKind | None = None) -> list[frozenset[int]]:
    out = []
    for c in cycles(T):
        cls = classify(T, c)
        if cls.is_open and (kind is None or cls.kind is kind):
            out.append(c)
    return out


def noncore_open_cycles(T: DominoTableau) -> list[frozenset[int]]:
    return open_cycles(T, CycleKind.OPEN_NONCORE)


def is_cycle_boxed(T: DominoTableau, c: Iterable[int]) -> bool:
    return all(is_boxed(T.domino(k), T.rank) for k in c)


def _extend(host: DominoTableau, partner: DominoTableau, start: frozenset[int]) -> set[frozenset[int]]:
    """Closure of one cycle into an extended cycle of ``host`` relative to ``partner``.

    Two host cycles c1, c2 are linked when some open partner cycle d has
    S_b(d) among the squares of c1 and S_f(d) among the squares c2 occupies
    after being moved through.
    """
    host_cycles = cycles(host)
    owner = {}
    for c in host_cycles:
        for k in c:
            owner[k] = c
    landing: dict[Square, list[frozenset[int]]] = {}
    for c in host_cycles:
        for sq in moved_squares(host, c):
            landing.setdefault(sq, []).append(c)
    edges: list[tuple[frozenset[int], frozenset[int]]] = []
    for d in open_cycles(partner):
        cls = classify(partner, d)
        k1 = host.owner(cls.back)
        if k1 is None:
            continue
        for c2 in landing.get(cls.front, ()):
            edges.append((owner[k1], c2))
    members = {start}
    grew = True
    while grew:
        grew = False
        for c1, c2 in edges:
            if (c1 in members) != (c2 in members):
                members |= {c1, c2}
                grew = True
    return members


def _corresponding(host: DominoTableau, partner: DominoTableau, members: set[frozenset[int]]) -> set[frozenset[int]]:
    backs = {classify(host, c).back for c in members if classify(host, c).is_open}
    return {d for d in open_cycles(partner) if classify(partner, d).back in backs}


def extended_cycle(p: TableauPair, k: int, side: str = "left") -> ExtendedCyclePair:
    """Extended cycle through k on ``side`` and the corresponding one on the other side."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    host, partner = (p.left, p.right) if side == "left" else (p.right, p.left)
    members = _extend(host, partner, cycle(k, host))
    partners = _corresponding(host, partner, members)
    here = frozenset().union(*members)
    there = frozenset().union(*partners) if partners else frozenset()
    if side == "left":
        return ExtendedCyclePair(here, there)
    return ExtendedCyclePair(there, here)


def _split(T: DominoTableau, labels: frozenset[int]) -> list[frozenset[int]]:
    parts = [c for c in cycles(T) if c <= labels]
    if frozenset().union(*parts) != labels:
        raise CycleError(f"{sorted(labels)} is not a union of cycles")
    return parts


def move_through_pair(p: TableauPair, b: ExtendedCyclePair) -> TableauPair:
    """MT((T1, T2), b) for matched extended cycles b."""
    left = move_through_set(p.left, _split(p.left, b.in_left))
    right = move_through_set(p.right, _split(p.right, b.in_right))
    if left.rank != right.rank or left.cells() != right.cells():
        raise CycleError("extended cycles do not correspond: shapes differ after moving")
    return TableauPair(left, right)


def is_somewhat_special(T: DominoTableau) -> bool:
    """All non-core open cycles boxed."""
    return all(is_cycle_boxed(T, c) for c in noncore_open_cycles(T))


def special_form(T: DominoTableau) -> DominoTableau:
    """S(T): move through unboxed non-core open cycles until none is left."""
    cached = T._cache.get("special")
    if cached is not None:
        return cached
    S = T
    for _ in range(4 * T.n + 1):
        todo = [c for c in noncore_open_cycles(S) if not is_cycle_boxed(S, c)]
        if not todo:
            T._cache["special"] = S
            return S
        S, _ = move_through(S, todo[0])
    raise AssertionError("special form did not stabilise")


def corners_all_empty(T: DominoTableau) -> bool:
    return not has_full_corner(T)
