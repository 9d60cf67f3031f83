"""
Rank functions and Bruhat order on W_n and on symmetric groups.

Comparisons use rank-matrix dominance: ``u <= v`` exactly when every rank
value of ``u`` is at most the corresponding value of ``v``.  The brute-force
queries (suprema, minimal elements outside an interval, maxima of a rank
condition) scan a :class:`Catalog` holding the rank tables of every element
of W_n (or S_n) as one numpy array.

Enumeration order of W_n: the underlying permutation of absolute values runs
lexicographically in the outer loop; the inner loop runs over sign masks
``0 .. 2^n - 1`` where bit ``j`` negates position ``j + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .perm_core import (
    SignedPermutation,
    WindowPermutation,
    iota,
    length,
    inversions_A,
    pad,
)
from .triples import check_B, n_min

__all__ = [
    "RankRangeError",
    "BudgetError",
    "NoSupremumError",
    "NotUniqueError",
    "SupremumResult",
    "rank_B",
    "rank_A",
    "rank_table_A",
    "rank_table_B",
    "leq_A",
    "leq_B",
    "leq_B_by_rank",
    "enumerate_W",
    "enumerate_S",
    "Catalog",
    "catalog_W",
    "catalog_S",
    "supremum",
    "minimal_not_below",
    "minimal_not_below_S",
    "max_with_rank_below",
    "MAX_N",
]

MAX_N = 8


class RankRangeError(ValueError):
    pass


class BudgetError(RuntimeError):
    """Refusal to enumerate a group larger than the configured budget."""


class NoSupremumError(ValueError):
    pass


class NotUniqueError(RuntimeError):
    pass


def rank_B(w: SignedPermutation, p: int, q: int) -> int:
    """``#{i >= p : w(i) <= -q}`` for ``1 <= p <= n``, ``-n <= q <= n``."""
    n = w.n
    if not (1 <= p <= n and -n <= q <= n):
        raise RankRangeError(f"rank query (p={p}, q={q}) outside 1..{n} x -{n}..{n}")
    return sum(1 for i in range(p, n + 1) if w(i) <= -q)


def rank_A(v: WindowPermutation, p: int, q: int, convention: str = "centered") -> int:
    """
    Type A rank function.

    ``centered``: ``#{i <= -p : v(i) >= q}`` on ``[-n, n]``.
    ``small``: ``#{i <= p : v(i) > q}`` on ``[1, n]``.
    """
    if convention == "centered":
        if not (v.lo <= p <= v.hi and v.lo <= q <= v.hi):
            raise RankRangeError(f"rank query (p={p}, q={q}) outside [{v.lo}, {v.hi}]")
        return sum(1 for i in range(v.lo, -p + 1) if v(i) >= q)
    if convention == "small":
        if v.lo != 1:
            raise RankRangeError("small convention needs a permutation of 1..n")
        if not (1 <= p <= v.hi and 1 <= q <= v.hi):
            raise RankRangeError(f"rank query (p={p}, q={q}) outside 1..{v.hi}")
        return sum(1 for i in range(1, p + 1) if v(i) > q)
    raise ValueError(f"unknown convention {convention!r}")


def rank_table_A(v: WindowPermutation) -> np.ndarray:
    """``T[x - lo, y - lo] = #{i <= x : v(i) >= y}`` over the whole interval."""
    size = len(v.values)
    dots = np.zeros((size, size), dtype=np.int16)
    dots[np.arange(size), np.asarray(v.values) - v.lo] = 1
    # suffix sums over values, prefix sums over positions
    return np.cumsum(np.cumsum(dots[:, ::-1], axis=1)[:, ::-1], axis=0)


def rank_table_B(w: SignedPermutation) -> np.ndarray:
    """``T[p - 1, q + n] = rank_B(w, p, q)``."""
    n = w.n
    table = np.zeros((n, 2 * n + 1), dtype=np.int16)
    vals = np.asarray(w.window)
    qs = np.arange(-n, n + 1)
    for p in range(n, 0, -1):
        table[p - 1] = (vals[p - 1:, None] <= -qs[None, :]).sum(axis=0)
    return table


def _common(v1: WindowPermutation, v2: WindowPermutation):
    lo, hi = min(v1.lo, v2.lo), max(v1.hi, v2.hi)
    return v1.padded(lo, hi), v2.padded(lo, hi)


def leq_A(v1: WindowPermutation, v2: WindowPermutation) -> bool:
    """Bruhat order on permutations of an interval (padded to a common one)."""
    a, b = _common(v1, v2)
    return bool(np.all(rank_table_A(a) <= rank_table_A(b)))


def leq_B(w1: SignedPermutation, w2: SignedPermutation) -> bool:
    """Bruhat order on W_n, through the embedding into the symmetric group."""
    n = max(w1.n, w2.n)
    return leq_A(iota(pad(w1, n)), iota(pad(w2, n)))


def leq_B_by_rank(w1: SignedPermutation, w2: SignedPermutation) -> bool:
    """Same order, read off the signed rank function directly."""
    n = max(w1.n, w2.n)
    return bool(np.all(rank_table_B(pad(w1, n)) <= rank_table_B(pad(w2, n))))


def _check_budget(n: int, allow_large: bool):
    if n > MAX_N and not allow_large:
        raise BudgetError(f"refusing to enumerate for n={n} > {MAX_N} (pass allow_large=True)")


def enumerate_W(n: int, allow_large: bool = False) -> Iterator[SignedPermutation]:
    """All ``2^n n!`` elements of W_n in the documented order."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_budget(n, allow_large)
    for perm in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            yield SignedPermutation(tuple(-x if mask >> j & 1 else x for j, x in enumerate(perm)))


def enumerate_S(lo: int, hi: int, allow_large: bool = False) -> Iterator[WindowPermutation]:
    """All permutations of ``[lo, hi]`` in lexicographic order."""
    if hi - lo + 1 > 2 * MAX_N + 1 and not allow_large:
        raise BudgetError(f"refusing to enumerate S on [{lo}, {hi}]")
    for perm in itertools.permutations(range(lo, hi + 1)):
        yield WindowPermutation(lo, perm)


class Catalog:
    """
    Every element of a finite group with its flattened rank table.

    ``ranks[i] <= ranks[j]`` entrywise iff ``elements[i] <= elements[j]``.
    """

    def __init__(self, elements: Sequence, ranks: np.ndarray, lengths: Sequence[int]):
        self.elements = list(elements)
        self.ranks = ranks
        self.lengths = np.asarray(lengths)
        self.index = {e: i for i, e in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def rank_of(self, x) -> np.ndarray:
        return self.ranks[self.index[x]]

    def above(self, bound: np.ndarray) -> np.ndarray:
        """Indices of elements whose rank table dominates ``bound``."""
        return np.flatnonzero(np.all(self.ranks >= bound, axis=1))

    def below(self, bound: np.ndarray) -> np.ndarray:
        return np.flatnonzero(np.all(self.ranks <= bound, axis=1))

    def minimal(self, indices: Iterable[int]) -> list[int]:
        """Minimal elements among ``indices``."""
        idx = np.asarray(list(indices), dtype=np.int64)
        order = idx[np.argsort(self.lengths[idx], kind="stable")]
        found: list[int] = []
        for i in order:
            if found and np.any(np.all(self.ranks[found] <= self.ranks[i], axis=1)):
                continue
            found.append(int(i))
        return found

    def maximal(self, indices: Iterable[int]) -> list[int]:
        idx = np.asarray(list(indices), dtype=np.int64)
        order = idx[np.argsort(-self.lengths[idx], kind="stable")]
        found: list[int] = []
        for i in order:
            if found and np.any(np.all(self.ranks[found] >= self.ranks[i], axis=1)):
                continue
            found.append(int(i))
        return found


@lru_cache(maxsize=None)
def catalog_W(n: int, allow_large: bool = False) -> Catalog:
    elements = list(enumerate_W(n, allow_large))
    n_q = 2 * n + 1
    ranks = np.empty((len(elements), n * n_q), dtype=np.int16)
    for i, w in enumerate(elements):
        ranks[i] = rank_table_B(w).ravel()
    return Catalog(elements, ranks, [length(w) for w in elements])


@lru_cache(maxsize=None)
def catalog_S(lo: int, hi: int) -> Catalog:
    elements = list(enumerate_S(lo, hi))
    ranks = np.stack([rank_table_A(v).ravel() for v in elements])
    return Catalog(elements, ranks, [inversions_A(v) for v in elements])


@dataclass(frozen=True)
class SupremumResult:
    element: SignedPermutation
    minimal_upper_bounds: tuple[SignedPermutation, ...]
    n_upper_bounds: int

    @property
    def certified(self) -> bool:
        return self.minimal_upper_bounds == (self.element,)


def supremum(elems: Iterable[SignedPermutation], n: int) -> SupremumResult:
    """
    Least upper bound in W_n, by brute force over the whole group.

    The empty set has the identity as supremum.  Raises
    :class:`NoSupremumError` when the minimal upper bounds are not unique.
    """
    elems = list(elems)
    if any(w.n > n for w in elems):
        raise ValueError(f"element outside W_{n}")
    cat = catalog_W(n)
    if elems:
        bound = np.max(np.stack([cat.rank_of(pad(w, n)) for w in elems]), axis=0)
    else:
        bound = np.zeros(cat.ranks.shape[1], dtype=np.int16)
    ub = cat.above(bound)
    mins = cat.minimal(ub)
    if len(mins) != 1:
        raise NoSupremumError(
            f"{len(mins)} minimal upper bounds: " + ", ".join(str(cat.elements[i]) for i in mins))
    return SupremumResult(cat.elements[mins[0]], (cat.elements[mins[0]],), len(ub))


def minimal_not_below(w: SignedPermutation, n: int | None = None) -> set[SignedPermutation]:
    """Bruhat-minimal elements of ``{t in W_n : t not <= w}``."""
    n = w.n if n is None else n
    cat = catalog_W(n)
    r = cat.rank_of(pad(w, n))
    outside = np.flatnonzero(~np.all(cat.ranks <= r, axis=1))
    return {cat.elements[i] for i in cat.minimal(outside)}


def minimal_not_below_S(v: WindowPermutation) -> set[WindowPermutation]:
    """Ordinary-permutation analogue, over all permutations of ``v``'s interval."""
    cat = catalog_S(v.lo, v.hi)
    r = cat.rank_of(v)
    outside = np.flatnonzero(~np.all(cat.ranks <= r, axis=1))
    return {cat.elements[i] for i in cat.minimal(outside)}


def max_with_rank_below(k: int, p: int, q: int, n: int) -> SignedPermutation:
    """Unique Bruhat-maximal ``w`` in W_n with ``rank_B(w, p, q) < k`` (brute force)."""
    check_B((k, p, q))
    if n < n_min((k, p, q)):
        raise ValueError(f"n={n} is smaller than n(k,p,q)={n_min((k, p, q))}")
    cat = catalog_W(n)
    col = (p - 1) * (2 * n + 1) + (q + n)
    hits = np.flatnonzero(cat.ranks[:, col] < k)
    tops = cat.maximal(hits)
    if len(tops) != 1:
        raise NotUniqueError(f"{len(tops)} maximal elements with rank({p},{q}) < {k}")
    return cat.elements[tops[0]]
