"""Exhaustive combinatorial cells of W_n and checks of the cell theorems.

Every function here enumerates the whole group, so ``n`` is capped
(:data:`DEFAULT_CAP`, raised to 6 on request). Tableau images are computed
once per ``(n, r)`` and reused across partitions and reports.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from networkx.utils import UnionFind

from .cycles import move_through_set, noncore_open_cycles, special_form
from .insertion import TableauPair, rs_inverse, rs_map
from .operators import OperatorDescriptor, apply_op, in_domain, lambda_set
from .signed_perm import SignedPermutation, compose, embed, enumerate_group, group_order, is_min_coset_rep
from .tableau import DominoTableau, is_young, validate

DEFAULT_CAP = 5
MAX_CAP = 6

IRREDUCIBLE_LEFT = "IrreducibleLeft"
REDUCIBLE_LEFT = "ReducibleLeft"
IRREDUCIBLE_RIGHT = "IrreducibleRight"
REDUCIBLE_RIGHT = "ReducibleRight"
OPERATOR_COMPONENTS = "OperatorComponents"
JOIN = "Join"

_images: dict[tuple[int, int], dict[SignedPermutation, TableauPair]] = {}


def _check_cap(n: int, cap: int) -> None:
    if cap > MAX_CAP:
        raise ValueError(f"cap {cap} exceeds the hard limit {MAX_CAP}")
    if not 0 <= n <= cap:
        raise ValueError(f"n={n} outside 0..{cap}; pass cap= to raise the limit")


def _rs_chunk(args: tuple[list[SignedPermutation], int]) -> list[TableauPair]:
    words, r = args
    return [rs_map(w, r) for w in words]


def images(n: int, r: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> dict[SignedPermutation, TableauPair]:
    """``w -> G_r(w)`` over all of W_n, in enumeration order (cached)."""
    _check_cap(n, cap)
    key = (n, r)
    if key not in _images:
        group = list(enumerate_group(n, cap=cap))
        if jobs > 1 and len(group) > 256:
            size = math.ceil(len(group) / (4 * jobs))
            chunks = [group[i : i + size] for i in range(0, len(group), size)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                pairs = [p for part in pool.map(_rs_chunk, [(c, r) for c in chunks]) for p in part]
        else:
            pairs = [rs_map(w, r) for w in group]
        _images[key] = dict(zip(group, pairs))
    return _images[key]


def clear_cache() -> None:
    _images.clear()


@dataclass(frozen=True)
class CellPartition:
    """A partition of W_n into blocks, stored canonically.

    Blocks are sorted internally and ordered by their least element, so two
    partitions are equal exactly when their blocks agree.
    """

    n: int
    rank: int
    kind: str
    blocks: tuple[tuple[SignedPermutation, ...], ...]

    @classmethod
    def from_blocks(cls, n: int, rank: int, kind: str, blocks: Iterable[Iterable[SignedPermutation]]):
        canon = sorted(tuple(sorted(b)) for b in blocks)
        return cls(n, rank, kind, tuple(canon))

    @classmethod
    def from_key(cls, n: int, rank: int, kind: str, elements: Iterable[SignedPermutation], key: Callable):
        groups: dict[Hashable, list[SignedPermutation]] = {}
        for w in elements:
            groups.setdefault(key(w), []).append(w)
        return cls.from_blocks(n, rank, kind, groups.values())

    def __len__(self):
        return len(self.blocks)

    def signature(self) -> frozenset[frozenset[SignedPermutation]]:
        return frozenset(frozenset(b) for b in self.blocks)

    def same_blocks(self, other: CellPartition) -> bool:
        return self.blocks == other.blocks

    def block_index(self) -> dict[SignedPermutation, int]:
        return {w: i for i, b in enumerate(self.blocks) for w in b}

    def block_of(self, w: SignedPermutation) -> tuple[SignedPermutation, ...]:
        for b in self.blocks:
            if w in b:
                return b
        raise KeyError(f"{w} not partitioned here")

    def refines(self, other: CellPartition) -> bool:
        """Every block of self lies inside a block of other."""
        index = other.block_index()
        return all(len({index[w] for w in b}) == 1 for b in self.blocks)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "rank": self.rank,
            "blocks": [[str(w) for w in b] for b in self.blocks],
        }


def _side(side: str) -> str:
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return side


def partition_irreducible(n: int, r: int, side: str = "left", jobs: int = 1, cap: int = DEFAULT_CAP) -> CellPartition:
    """Left cells: same right tableau. Right cells: same left tableau."""
    imgs = images(n, r, jobs, cap)
    if _side(side) == "left":
        return CellPartition.from_key(n, r, IRREDUCIBLE_LEFT, imgs, lambda w: imgs[w].right)
    return CellPartition.from_key(n, r, IRREDUCIBLE_RIGHT, imgs, lambda w: imgs[w].left)


def partition_reducible(n: int, r: int, side: str = "left", jobs: int = 1, cap: int = DEFAULT_CAP) -> CellPartition:
    """As :func:`partition_irreducible`, up to moving through non-core open cycles.

    Each moving-through orbit has exactly one somewhat-special member, so
    grouping by :func:`special_form` gives the orbit partition.
    """
    imgs = images(n, r, jobs, cap)
    if _side(side) == "left":
        return CellPartition.from_key(n, r, REDUCIBLE_LEFT, imgs, lambda w: special_form(imgs[w].right))
    return CellPartition.from_key(n, r, REDUCIBLE_RIGHT, imgs, lambda w: special_form(imgs[w].left))


def _orbit_neighbours(T: DominoTableau) -> Iterable[DominoTableau]:
    open_ = noncore_open_cycles(T)
    for size in range(1, len(open_) + 1):
        for U in itertools.combinations(open_, size):
            yield move_through_set(T, U)


def partition_reducible_by_orbits(n: int, r: int, side: str = "left", cap: int = 3) -> CellPartition:
    """Reducible cells by explicit search of moving-through orbits.

    Slow; meant as a cross-check of :func:`partition_reducible` for small n.
    """
    imgs = images(n, r, cap=max(cap, n))
    pick = (lambda p: p.right) if _side(side) == "left" else (lambda p: p.left)
    uf = UnionFind()
    seen: set[DominoTableau] = set()
    stack = [pick(p) for p in imgs.values()]
    while stack:
        T = stack.pop()
        if T in seen:
            continue
        seen.add(T)
        uf[T]
        for S in _orbit_neighbours(T):
            uf.union(T, S)
            stack.append(S)
    kind = REDUCIBLE_LEFT if side == "left" else REDUCIBLE_RIGHT
    return CellPartition.from_key(n, r, kind, imgs, lambda w: uf[pick(imgs[w])])


def operator_edges(
    n: int, r: int, ops: Sequence[OperatorDescriptor] | None = None, cap: int = DEFAULT_CAP
) -> list[tuple[SignedPermutation, OperatorDescriptor, SignedPermutation]]:
    """Each undirected edge ``{w, op(w)}`` once, with ``w`` the smaller end."""
    _check_cap(n, cap)
    ops = lambda_set(n, r) if ops is None else list(ops)
    edges = []
    for w in enumerate_group(n, cap=cap):
        for op in ops:
            if in_domain(op, w):
                v = apply_op(op, w)
                if w < v:
                    edges.append((w, op, v))
    return edges


def operator_components(
    n: int, r: int, ops: Sequence[OperatorDescriptor] | None = None, cap: int = DEFAULT_CAP
) -> CellPartition:
    """Connected components of W_n under the operators (default: Λ^{r+1})."""
    uf = UnionFind(enumerate_group(n, cap=cap))
    for w, _, v in operator_edges(n, r, ops, cap):
        uf.union(w, v)
    return CellPartition.from_blocks(n, r, OPERATOR_COMPONENTS, uf.to_sets())


def join(*partitions: CellPartition) -> CellPartition:
    """Finest partition coarser than each argument (transitive closure of the union)."""
    if not partitions:
        raise ValueError("nothing to join")
    first = partitions[0]
    uf = UnionFind(w for b in first.blocks for w in b)
    for part in partitions:
        for b in part.blocks:
            uf.union(*b)
    return CellPartition.from_blocks(first.n, first.rank, JOIN, uf.to_sets())


def operator_graph_dot(n: int, r: int, cap: int = DEFAULT_CAP) -> str:
    """The Λ^{r+1} graph on W_n in DOT, one edge per operator application."""
    lines = [f'graph "W{n}_rank{r}" {{']
    for w in enumerate_group(n, cap=cap):
        lines.append(f'  "{w}";')
    for w, op, v in operator_edges(n, r, cap=cap):
        lines.append(f'  "{w}" -- "{v}" [label="{op}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- verification reports ---------------------------------------------


@dataclass
class VerificationReport:
    suite: str
    n: int
    rank: int
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, **witness) -> None:
        self.violations.append({k: str(v) if not isinstance(v, (int, str, list, dict)) else v for k, v in witness.items()})

    def summary(self) -> str:
        extra = "".join(f" {k}={v}" for k, v in self.params.items())
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite} n={self.n} rank={self.rank}{extra}: {self.checked} checked, {len(self.violations)} violations"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "rank": self.rank,
            **self.params,
            "ok": self.ok,
            "checked": self.checked,
            "violations": self.violations,
        }


def _partition_witness(report: VerificationReport, got: CellPartition, want: CellPartition) -> None:
    """Record a pair split by one partition and joined by the other."""
    gi, wi = got.block_index(), want.block_index()
    for a, b in ((got, wi), (want, gi)):
        for block in a.blocks:
            first = block[0]
            for w in block[1:]:
                if b[w] != b[first]:
                    report.fail(together_in=a.kind, apart_in=(want if a is got else got).kind, pair=[str(first), str(w)])
                    return


def verify_stability(n: int, r: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Operators keep S(T1) fixed; most keep T1 itself fixed."""
    report = VerificationReport("stability", n, r)
    imgs = images(n, r, jobs, cap)
    for op in lambda_set(n, r):
        exact = op.kind != "in" or op.index <= r
        for w, p in imgs.items():
            if not in_domain(op, w):
                continue
            v = apply_op(op, w)
            q = imgs[v]
            report.checked += 1
            if special_form(p.left) != special_form(q.left):
                report.fail(claim="special form of T1 preserved", word=w, op=op, image=v)
            elif exact and p.left != q.left:
                report.fail(claim="T1 preserved exactly", word=w, op=op, image=v)
    return report


def verify_generation(n: int, r: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Operator components coincide with reducible right cells."""
    report = VerificationReport("generation", n, r)
    got = operator_components(n, r, cap=cap)
    want = partition_reducible(n, r, "right", jobs, cap)
    report.checked = len(want)
    report.params["blocks"] = len(got)
    if not got.same_blocks(want):
        _partition_witness(report, got, want)
    return report


def verify_refinement(n: int, r: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Joining same-T2 relations in ranks r and r+1 gives reducible left cells."""
    report = VerificationReport("refinement", n, r)
    got = join(partition_irreducible(n, r, "left", jobs, cap), partition_irreducible(n, r + 1, "left", jobs, cap))
    want = partition_reducible(n, r, "left", jobs, cap)
    report.checked = len(want)
    report.params["blocks"] = len(got)
    if not got.same_blocks(want):
        _partition_witness(report, got, want)
    return report


def verify_parabolic(
    n: int, m: int, r: int, jobs: int = 1, cap: int = DEFAULT_CAP, side: str = "right"
) -> VerificationReport:
    """Left multiplication by x ∈ X_m^n carries cells of W_m into cells of W_n.

    The cells are those the operators preserve, i.e. classes of the left
    tableau (``side="right"`` here). Classes of the right tableau are not
    compatible: in rank 0, (-2,-1) and (-2,1) share T2 but (-3,-1,2) and
    (-3,1,2) do not.
    """
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    report = VerificationReport("parabolic", n, r, params={"m": m, "side": _side(side)})
    reps = [x for x in enumerate_group(n, cap=cap) if is_min_coset_rep(x, m)]
    for small, big in (
        (partition_irreducible(m, r, side, jobs, cap), partition_irreducible(n, r, side, jobs, cap)),
        (partition_reducible(m, r, side, jobs, cap), partition_reducible(n, r, side, jobs, cap)),
    ):
        index = big.block_index()
        for x in reps:
            for block in small.blocks:
                targets = [compose(x, embed(w, n)) for w in block]
                report.checked += 1
                if len({index[t] for t in targets}) != 1:
                    report.fail(kind=small.kind, x=x, block=[str(w) for w in block])
    return report


def standard_count(cells: frozenset, r: int) -> int:
    """Number of standard domino tableaux of rank r on the given shape."""
    core = DominoTableau.empty(r).cells()
    memo: dict[frozenset, int] = {}

    def count(shape: frozenset) -> int:
        if shape == core:
            return 1
        if shape in memo:
            return memo[shape]
        total = 0
        for a in shape - core:
            i, j = a
            for b in ((i, j + 1), (i + 1, j)):
                if b in shape and is_young(shape - {a, b}):
                    total += count(shape - {a, b})
        memo[shape] = total
        return total

    return count(frozenset(cells))


def verify_bijectivity(n: int, r: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> VerificationReport:
    """G_r is a bijection onto same-shape pairs and rs_inverse undoes it."""
    report = VerificationReport("bijectivity", n, r)
    imgs = images(n, r, jobs, cap)
    seen: dict[TableauPair, SignedPermutation] = {}
    per_shape: dict[frozenset, int] = {}
    for w, p in imgs.items():
        report.checked += 1
        for T in (p.left, p.right):
            bad = validate(T)
            if bad is not None:
                report.fail(claim="standard tableau", word=w, violation=str(bad))
        if p in seen:
            report.fail(claim="injective", word=w, other=seen[p])
        seen[p] = w
        if rs_inverse(p) != w:
            report.fail(claim="rs_inverse round trip", word=w)
        shape = p.left.cells()
        per_shape[shape] = per_shape.get(shape, 0) + 1
    if len(seen) != group_order(n):
        report.fail(claim="image size", expected=group_order(n), got=len(seen))
    for shape, hits in per_shape.items():
        f = standard_count(shape, r)
        if hits != f * f:
            report.fail(claim="every same-shape pair is hit", shape=sorted(shape), pairs=f * f, hits=hits)
    return report


SUITES = ("stability", "generation", "refinement", "parabolic", "bijectivity")


def run_suite(name: str, n: int, r: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> list[VerificationReport]:
    """Run one suite; ``parabolic`` covers every m ≤ n."""
    if name == "stability":
        return [verify_stability(n, r, jobs, cap)]
    if name == "generation":
        return [verify_generation(n, r, jobs, cap)]
    if name == "refinement":
        return [verify_refinement(n, r, jobs, cap)]
    if name == "parabolic":
        return [verify_parabolic(n, m, r, jobs, cap) for m in range(n + 1)]
    if name == "bijectivity":
        return [verify_bijectivity(n, r, jobs, cap)]
    if name == "all":
        return [rep for s in SUITES for rep in run_suite(s, n, r, jobs, cap)]
    raise ValueError(f"unknown suite {name!r}")
