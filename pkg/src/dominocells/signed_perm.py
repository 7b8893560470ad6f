"""Signed permutations of {±1, ..., ±n} in one-line notation.

Positions are 1-based throughout: ``w(1)`` is the first entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

DEFAULT_GROUP_CAP = 6


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """An element of the hyperoctahedral group W_n.

    ``entries[i - 1]`` holds ``w(i)``; ``w(-i)`` is ``-w(i)``.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if sorted(abs(x) for x in entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a signed permutation: {entries}")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> SignedPermutation:
        """Parse the comma-separated form, e.g. ``"4,-3,-2,1"``; ``""`` is W_0's identity."""
        text = text.strip().strip("()")
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.replace(" ", ",").split(",") if tok))
        except ValueError as exc:
            raise ValueError(f"cannot parse signed permutation {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __call__(self, i: int) -> int:
        if i == 0 or abs(i) > self.n:
            raise IndexError(f"{i} outside ±1..±{self.n}")
        value = self.entries[abs(i) - 1]
        return value if i > 0 else -value

    def __str__(self):
        return ",".join(str(x) for x in self.entries)

    def __repr__(self):
        return f"SignedPermutation(({', '.join(str(x) for x in self.entries)}))"


@dataclass(frozen=True, order=True)
class Root:
    """A root of Π_n^k: ``Root("simple", i)`` is α_i, ``Root("prime", i)`` is α'_i."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("simple", "prime"):
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.kind == "simple" and self.index < 2 or self.index < 1:
            raise ValueError(f"root index out of range: {self}")

    @classmethod
    def simple(cls, i: int) -> Root:
        return cls("simple", i)

    @classmethod
    def prime(cls, i: int) -> Root:
        return cls("prime", i)

    def __str__(self):
        return f"alpha_{self.index}" if self.kind == "simple" else f"alpha'_{self.index}"


def pi_roots(n: int, k: int) -> frozenset[Root]:
    """The modified simple system Π_n^k."""
    primes = {Root.prime(i) for i in range(1, min(n, k) + 1)}
    return frozenset(primes | {Root.simple(i) for i in range(2, n + 1)})


def _check_same_size(u: SignedPermutation, v: SignedPermutation):
    if u.n != v.n:
        raise ValueError(f"size mismatch: W_{u.n} vs W_{v.n}")


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """``(u ∘ v)(i) = u(v(i))``."""
    _check_same_size(u, v)
    return SignedPermutation(tuple(u(x) for x in v.entries))


def inverse(w: SignedPermutation) -> SignedPermutation:
    out = [0] * w.n
    for i, x in enumerate(w.entries, start=1):
        out[abs(x) - 1] = i if x > 0 else -i
    return SignedPermutation(tuple(out))


def embed(w: SignedPermutation, n: int) -> SignedPermutation:
    """View w ∈ W_m as an element of W_n fixing m+1..n."""
    if n < w.n:
        raise ValueError(f"cannot embed W_{w.n} into W_{n}")
    return SignedPermutation(w.entries + tuple(range(w.n + 1, n + 1)))


def right_mult_s(w: SignedPermutation, j: int) -> SignedPermutation:
    """``w s_j``: swap the entries in positions j and j+1."""
    if not 1 <= j <= w.n - 1:
        raise IndexError(f"s_{j} undefined in W_{w.n}")
    e = list(w.entries)
    e[j - 1], e[j] = e[j], e[j - 1]
    return SignedPermutation(tuple(e))


def right_mult_t(w: SignedPermutation, j: int) -> SignedPermutation:
    """``w t_j``: flip the sign of the entry in position j."""
    if not 1 <= j <= w.n:
        raise IndexError(f"t_{j} undefined in W_{w.n}")
    e = list(w.entries)
    e[j - 1] = -e[j - 1]
    return SignedPermutation(tuple(e))


def tau(w: SignedPermutation, k: int) -> frozenset[Root]:
    """The τ^k invariant, read off from descents and negative entries.

    α_{j+1} ∈ τ iff w(j) > w(j+1); α'_j ∈ τ iff j ≤ min(n, k) and w(j) < 0.
    """
    e = w.entries
    out = {Root.simple(j + 1) for j in range(1, w.n) if e[j - 1] > e[j]}
    out |= {Root.prime(j) for j in range(1, min(w.n, k) + 1) if e[j - 1] < 0}
    return frozenset(out)


def parabolic_decompose(
    w: SignedPermutation, m: int
) -> tuple[SignedPermutation, SignedPermutation]:
    """Split ``w = x · w'`` with ``0 < x(1) < ... < x(m)`` and ``w' ∈ W_m``."""
    if not 1 <= m <= w.n:
        raise ValueError(f"m={m} outside 1..{w.n}")
    head = w.entries[:m]
    values = sorted(abs(x) for x in head)
    position = {v: i for i, v in enumerate(values, start=1)}
    x = SignedPermutation(tuple(values) + w.entries[m:])
    w_small = SignedPermutation(tuple(position[abs(v)] * (1 if v > 0 else -1) for v in head))
    return x, w_small


def is_min_coset_rep(x: SignedPermutation, m: int) -> bool:
    """Membership in X_m^n."""
    head = x.entries[:m]
    return all(v > 0 for v in head) and all(a < b for a, b in zip(head, head[1:]))


def enumerate_group(n: int, cap: int = DEFAULT_GROUP_CAP) -> Iterator[SignedPermutation]:
    """Yield all 2^n n! elements of W_n.

    Order is lexicographic on ``(|w(1)|, sign, |w(2)|, sign, ...)`` with the
    positive sign first, so enumeration is reproducible.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")

    def rec(prefix: list[int], unused: list[int]):
        if not unused:
            yield SignedPermutation(tuple(prefix))
            return
        for a in unused:
            rest = [b for b in unused if b != a]
            for s in (a, -a):
                prefix.append(s)
                yield from rec(prefix, rest)
                prefix.pop()

    yield from rec([], list(range(1, n + 1)))


def group_order(n: int) -> int:
    out = 2**n
    for i in range(2, n + 1):
        out *= i
    return out
