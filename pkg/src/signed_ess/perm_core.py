"""
Signed permutations (elements of the hyperoctahedral group W_n) and ordinary
permutations of an integer interval.

A signed permutation is stored by its one-line window ``w(1) ... w(n)``; the
values elsewhere follow from ``w(-i) = -w(i)``, ``w(0) = 0`` and ``w(m) = m``
for ``m > n``.

>>> w = parse("-2 3 1")
>>> length(w)
3
>>> iota(w).values
(-1, -3, 2, 0, -2, 3, 1)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "ParseError",
    "SignedPermutation",
    "WindowPermutation",
    "parse",
    "format_window",
    "identity",
    "length",
    "inversions_A",
    "longest_element",
    "compose",
    "inverse",
    "pad",
    "iota",
    "iota_prime",
    "c_index",
    "c_label",
    "descents",
    "is_grassmannian",
    "is_bigrassmannian",
    "window_identity",
    "window_longest",
    "as_signed",
]


class ParseError(ValueError):
    """Malformed one-line notation."""


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if sorted(abs(x) for x in window) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation window: {window}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        if i < 0:
            return -self(-i)
        if i > self.n:
            return i
        return self.window[i - 1]

    def __iter__(self):
        return iter(self.window)

    def __len__(self):
        return self.n

    def __str__(self):
        return format_window(self.window)

    def __repr__(self):
        return f"SignedPermutation({self.window})"


@dataclass(frozen=True)
class WindowPermutation:
    """A permutation of the interval ``[lo, hi]``, extended by the identity."""
    lo: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(self.lo, self.lo + len(values))):
            raise ValueError(f"not a permutation of [{self.lo}, {self.hi}]: {values}")

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    @property
    def positions(self) -> range:
        return range(self.lo, self.hi + 1)

    def __call__(self, i: int) -> int:
        if self.lo <= i <= self.hi:
            return self.values[i - self.lo]
        return i

    def inverse(self) -> "WindowPermutation":
        inv = [0] * len(self.values)
        for i, v in zip(self.positions, self.values):
            inv[v - self.lo] = i
        return WindowPermutation(self.lo, tuple(inv))

    def padded(self, lo: int, hi: int) -> "WindowPermutation":
        """Same permutation viewed on a larger interval."""
        if lo > self.lo or hi < self.hi:
            raise ValueError(f"cannot shrink [{self.lo}, {self.hi}] to [{lo}, {hi}]")
        return WindowPermutation(lo, tuple(self(i) for i in range(lo, hi + 1)))

    def __str__(self):
        return format_window(self.values)


_TOKEN = re.compile(r"[,\s]+")


def parse(text: str) -> SignedPermutation:
    """
    Read a signed permutation from whitespace- or comma-separated integers.

    >>> parse("-2, 3, 1").window
    (-2, 3, 1)
    """
    tokens = [t for t in _TOKEN.split(text.strip()) if t]
    if not tokens:
        raise ParseError("empty permutation")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}") from None
    n = len(values)
    seen = set()
    for tok, v in zip(tokens, values):
        if v == 0:
            raise ParseError(f"zero entry: {tok!r}")
        if abs(v) > n:
            raise ParseError(f"absolute value exceeds n={n}: {tok!r}")
        if abs(v) in seen:
            raise ParseError(f"duplicate absolute value {abs(v)}: {tok!r}")
        seen.add(abs(v))
    return SignedPermutation(tuple(values))


def format_window(values: Iterable[int], bars: bool = False) -> str:
    """Space-separated one-line form; ``bars=True`` writes negatives with a combining overline."""
    if bars:
        return " ".join(f"{-v}̄" if v < 0 else str(v) for v in values)
    return " ".join(str(v) for v in values)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def pad(w: SignedPermutation, n: int) -> SignedPermutation:
    """Natural inclusion W_m into W_n (m <= n)."""
    if n < w.n:
        raise ValueError(f"cannot pad W_{w.n} element to W_{n}")
    return SignedPermutation(w.window + tuple(range(w.n + 1, n + 1)))


def length(w: SignedPermutation) -> int:
    win = w.window
    n = len(win)
    total = 0
    for i in range(n):
        for j in range(i, n):
            if j > i and win[i] > win[j]:
                total += 1
            if win[i] + win[j] < 0:
                total += 1
    return total


def inversions_A(v: WindowPermutation) -> int:
    vals = v.values
    return sum(1 for i in range(len(vals)) for j in range(i + 1, len(vals)) if vals[i] > vals[j])


def longest_element(n: int) -> SignedPermutation:
    if n < 1:
        raise ValueError("n must be positive")
    return SignedPermutation(tuple(-i for i in range(1, n + 1)))


def compose(w1, w2):
    """
    Product ``w1 * w2``, i.e. ``i -> w1(w2(i))``; the shorter factor is padded.

    Works for two signed permutations or two window permutations.

    >>> compose(SignedPermutation((-1, -2)), SignedPermutation((2, 1))).window
    (-2, -1)
    """
    if isinstance(w1, SignedPermutation) and isinstance(w2, SignedPermutation):
        n = max(w1.n, w2.n)
        return SignedPermutation(tuple(w1(w2(i)) for i in range(1, n + 1)))
    if isinstance(w1, WindowPermutation) and isinstance(w2, WindowPermutation):
        lo, hi = min(w1.lo, w2.lo), max(w1.hi, w2.hi)
        return WindowPermutation(lo, tuple(w1(w2(i)) for i in range(lo, hi + 1)))
    raise TypeError("compose needs two permutations of the same kind")


def inverse(w):
    if isinstance(w, WindowPermutation):
        return w.inverse()
    inv = [0] * w.n
    for i, v in enumerate(w.window, start=1):
        inv[abs(v) - 1] = i if v > 0 else -i
    return SignedPermutation(tuple(inv))


def iota(w: SignedPermutation) -> WindowPermutation:
    """The signed permutation as a permutation of ``[-n, n]``."""
    n = w.n
    return WindowPermutation(-n, tuple(w(i) for i in range(-n, n + 1)))


def iota_prime(w: SignedPermutation) -> WindowPermutation:
    """
    The signed permutation as a permutation of ``2n`` letters, dropping 0.

    The letters ``-n..-1, 1..n`` are relabelled order-preservingly as
    ``1..2n``; use :func:`c_label` to map back.

    >>> [c_label(x, 3) for x in iota_prime(parse("-2 3 1")).values]
    [-1, -3, 2, -2, 3, 1]
    """
    n = w.n
    letters = [i for i in range(-n, n + 1) if i != 0]
    return WindowPermutation(1, tuple(c_index(w(i), n) for i in letters))


def c_index(x: int, n: int) -> int:
    """Position of the letter ``x`` in ``-n..-1, 1..n`` (1-based)."""
    if x == 0 or abs(x) > n:
        raise ValueError(f"{x} is not a letter of the 2n-set")
    return x + n + 1 if x < 0 else x + n


def c_label(j: int, n: int) -> int:
    """Inverse of :func:`c_index`."""
    return j - n - 1 if j <= n else j - n


def descents(w) -> set[int]:
    """
    Descent positions. For a signed permutation only positions ``i >= 0``
    are reported (a descent at 0 means ``w(1) < 0``).

    >>> sorted(descents(parse("-2 1 -3")))
    [0, 2]
    """
    if isinstance(w, WindowPermutation):
        return {i for i in range(w.lo, w.hi) if w(i) > w(i + 1)}
    return {i for i in range(0, w.n) if w(i) > w(i + 1)}


def is_grassmannian(w) -> bool:
    return len(descents(w)) == 1


def is_bigrassmannian(w) -> bool:
    return is_grassmannian(w) and is_grassmannian(inverse(w))


def window_identity(lo: int, hi: int) -> WindowPermutation:
    return WindowPermutation(lo, tuple(range(lo, hi + 1)))


def window_longest(lo: int, hi: int) -> WindowPermutation:
    """The order-reversing permutation of ``[lo, hi]``."""
    return WindowPermutation(lo, tuple(range(hi, lo - 1, -1)))


def as_signed(values: Sequence[int]) -> SignedPermutation:
    return SignedPermutation(tuple(values))
