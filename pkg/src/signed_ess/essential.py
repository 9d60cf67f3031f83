"""
Basic elements and essential sets.

A type B basic triple ``(k, p, q)`` names the rank condition
``rank_B(w, p, q) >= k``; :func:`basic_signed` is the Bruhat-minimal signed
permutation satisfying it.  The essential set of ``w`` is read off the
south-east corners of its extended diagram: the corner ``(q - 1, -p)``
gives ``(rank_B(w, p, q), p, q)``, except that

* corners in the rightmost column above the centre row (``p = 1, q < 0``) are
  dropped, and
* a corner with ``p > 1, q > 0`` is dropped when ``(-q, -p)`` is also a corner
  and ``rank_B(w, p, q) == rank_B(w, p, 1 - q) - (q - 1)``.

>>> from signed_ess.perm_core import parse
>>> [t.as_tuple() for t in essential_set_B(parse("-2 3 1"))]
[(1, 1, 2), (1, 3, -1)]
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable

import numpy as np

from .bruhat import catalog_W, leq_A, leq_B, minimal_not_below, rank_A, rank_B, rank_table_A
from .diagrams import board, se_corners
from .perm_core import (
    SignedPermutation,
    WindowPermutation,
    compose,
    iota,
    is_bigrassmannian,
    longest_element,
    pad,
    window_longest,
)
from .triples import (
    BasicTriple,
    InvalidTripleError,
    check_B,
    is_basic_A,
    is_basic_A_small,
    is_basic_B,
    n_min,
)

__all__ = [
    "BasicTriple",
    "InvalidTripleError",
    "is_basic_A",
    "is_basic_A_small",
    "is_basic_B",
    "n_min",
    "reflect",
    "basic_perm_A",
    "basic_signed",
    "basic_length",
    "basic_inverse",
    "enumerate_basic",
    "count_basic",
    "essential_set_A",
    "essential_set_B",
    "essential_set_C",
    "essential_to_json",
    "maximal_basic_below",
    "dissecting_u",
    "dissecting_t_A",
    "rwy_via_bijection",
    "rwy_via_bijection_A",
    "basic_leq_via_typeA",
    "classify_exception",
    "base_of",
    "bigrassmannians",
]


def reflect(t) -> BasicTriple:
    """``(k, p, q) -> (k + p + q - 1, 1 - p, 1 - q)``; an involution on type A triples."""
    k, p, q = t
    return BasicTriple(k + p + q - 1, 1 - p, 1 - q, "A")


def basic_perm_A(t, convention: str = "centered", n: int | None = None) -> WindowPermutation:
    """
    Bigrassmannian permutation of a type A basic triple.

    ``centered``: on ``[-N, N]``; positions ``-p-k+1 .. -p`` carry
    ``q .. q+k-1`` and everything else is filled increasingly.
    ``small``: on ``[1, N]``, one-line ``1..p-k, q+1..q+k, p-k+1..q``.
    ``N`` is the smallest interval that fits, or ``n`` if larger.

    >>> basic_perm_A((3, 4, 2), "small").values
    (1, 3, 4, 5, 2)
    """
    k, p, q = t
    if convention == "centered":
        if not is_basic_A(t):
            raise InvalidTripleError(f"not a type A basic triple: {tuple(t)}")
        size = max(abs(p), abs(p + k - 1), abs(q), abs(q + k - 1), n or 0)
        block = dict(zip(range(-p - k + 1, -p + 1), range(q, q + k)))
        rest_vals = iter(x for x in range(-size, size + 1) if not q <= x < q + k)
        values = [block[i] if i in block else next(rest_vals) for i in range(-size, size + 1)]
        return WindowPermutation(-size, tuple(values))
    if convention == "small":
        if not is_basic_A_small(t):
            raise InvalidTripleError(f"not a small-convention basic triple: {tuple(t)}")
        size = max(q + k, n or 0)
        values = [*range(1, p - k + 1), *range(q + 1, q + k + 1), *range(p - k + 1, q + 1),
                  *range(q + k + 1, size + 1)]
        return WindowPermutation(1, tuple(values))
    raise ValueError(f"unknown convention {convention!r}")


def basic_signed(t) -> SignedPermutation:
    """
    Minimal signed permutation with ``rank_B(w, p, q) >= k``, in W_{n(k,p,q)}.

    >>> str(basic_signed((2, 2, 3))), str(basic_signed((3, 2, -2)))
    ('1 -4 -3 2', '4 -3 1 2')
    """
    k, p, q = check_B(t)
    tail = range(-(q + k - 1), -q + 1)  # -(q+k-1), ..., -q
    if q >= p:
        window = [*range(1, p), *tail, *range(p, q)]
    elif q > 0:
        window = [*range(1, q), *range(q + k, p + k), *tail]
    elif k > -q:
        window = [*range(k + 1, p + k), *range(-k, q), *range(1, -q + 1)]
    else:
        window = [*range(1, -q - k + 1), *range(-q + 1, p + k), *tail]
    return SignedPermutation(tuple(window))


def basic_length(t) -> int:
    k, p, q = check_B(t)
    if q > 0:
        return (p + q - 1) * k + comb(k, 2)
    if k > -q:
        return p * k + comb(k, 2) - comb(-q + 1, 2)
    return (p + q + k - 1) * k


def basic_inverse(t) -> BasicTriple:
    """Triple of ``basic_signed(t)^-1``."""
    k, p, q = check_B(t)
    if q > 0:
        return BasicTriple(k, q, p)
    return BasicTriple(p + q + k - 1, 1 - q, 1 - p)


def enumerate_basic(n: int) -> list[BasicTriple]:
    """All type B basic triples with ``n(k,p,q) <= n``; ``k`` outer, ``p``, then ``q``."""
    out = []
    for k in range(1, n + 1):
        for p in range(1, n - k + 2):
            for q in range(2 - p - k, n - k + 2):
                if is_basic_B((k, p, q)):
                    out.append(BasicTriple(k, p, q))
    return out


def count_basic(n: int) -> int:
    return (2 * n ** 3 + n) // 3


def _sorted(triples: Iterable[BasicTriple]) -> tuple[BasicTriple, ...]:
    return tuple(sorted(triples, key=BasicTriple.sort_key))


def essential_set_A(v: WindowPermutation, convention: str = "centered") -> tuple[BasicTriple, ...]:
    """
    Essential set of an ordinary permutation.

    ``centered``: corners ``(q - 1, -p)`` of the diagram.  ``small``
    (permutations of ``1..n``): corners ``(q, p)``.
    """
    corners = se_corners(board(v, "A"))
    if convention == "centered":
        return _sorted(BasicTriple(rank_A(v, -b, a + 1), -b, a + 1, "A") for a, b in corners)
    if convention == "small":
        return _sorted(BasicTriple(rank_A(v, b, a, "small"), b, a, "A-small") for a, b in corners)
    raise ValueError(f"unknown convention {convention!r}")


def _essential_signed(w: SignedPermutation, kind: str) -> tuple[BasicTriple, ...]:
    corners = se_corners(board(w, kind))
    out = []
    for a, b in corners:
        p = -b
        # on a C board row -1 is followed by row 1, so its corner stands for q = 1
        q = 1 if (kind == "C" and a == -1) else a + 1
        k = rank_B(w, p, q)
        if p == 1 and q < 0:
            continue
        if p > 1 and q > 0:
            mirror = (-q, b)
            if mirror != (a, b) and mirror in corners and k == rank_B(w, p, 1 - q) - (q - 1):
                continue
        out.append(BasicTriple(k, p, q))
    return _sorted(out)


def essential_set_B(w: SignedPermutation) -> tuple[BasicTriple, ...]:
    return _essential_signed(w, "B")


def essential_set_C(w: SignedPermutation) -> tuple[BasicTriple, ...]:
    """Essential set read from the type C board."""
    return _essential_signed(w, "C")


def essential_to_json(w: SignedPermutation, kind: str = "B") -> dict:
    kind = kind.upper()
    ess = essential_set_B(w) if kind == "B" else essential_set_C(w)
    return {"w": list(w.window), "type": kind, "essential": [t.to_json() for t in ess]}


@lru_cache(maxsize=None)
def _basic_tables(n: int):
    triples = enumerate_basic(n)
    tables = np.stack([rank_table_A(iota(pad(basic_signed(t), n))).ravel() for t in triples])
    return triples, tables


def maximal_basic_below(w: SignedPermutation, n: int | None = None) -> tuple[BasicTriple, ...]:
    """
    Triples whose basic element is Bruhat-maximal among the basic elements
    below ``w``, by direct comparison of the embedded permutations.
    """
    n = w.n if n is None else n
    triples, tables = _basic_tables(n)
    target = rank_table_A(iota(pad(w, n))).ravel()
    below = np.flatnonzero(np.all(tables <= target, axis=1))
    sub = tables[below]
    # leq[i, j]: basic i <= basic j
    leq = np.all(sub[:, None, :] <= sub[None, :, :], axis=2)
    np.fill_diagonal(leq, False)
    keep = ~leq.any(axis=1)
    return _sorted(triples[below[i]] for i in np.flatnonzero(keep))


def dissecting_u(t, n: int) -> SignedPermutation:
    """
    Dissecting element ``w(n+2-p-k, p, 1-q) * w_o``: the largest element of
    W_n with ``rank_B(., p, q) < k``.

    The condition inside ``w(...)`` is rewritten to an equivalent admissible
    triple when it is not one: third entry 1 when ``q = 1``, and
    ``(n+2-k-q, 1, q)`` when ``p = 1 < q``.
    """
    k, p, q = check_B(t)
    if n < n_min(t):
        raise ValueError(f"n={n} is smaller than n(k,p,q)={n_min(t)}")
    big_k, small_q = n + 2 - p - k, 1 - q
    if q == 1:
        small_q = 1
    elif p == 1:
        # rank_B(w, 1, -m) == m + rank_B(w, 1, m + 1) for m > 0
        big_k, small_q = big_k + small_q, q
    return compose(pad(basic_signed((big_k, p, small_q)), n), longest_element(n))


def dissecting_t_A(t, n: int) -> WindowPermutation:
    """``v(n+1-q-k, n-p, q) * w_o`` in S_n (small convention)."""
    k, p, q = t
    if not is_basic_A_small(t):
        raise InvalidTripleError(f"not a small-convention basic triple: {tuple(t)}")
    if n < q + k:
        raise ValueError(f"n={n} is smaller than q+k={q + k}")
    v = basic_perm_A((n + 1 - q - k, n - p, q), "small", n)
    return compose(v, window_longest(1, n))


def rwy_via_bijection(w: SignedPermutation, n: int | None = None) -> set[SignedPermutation]:
    """Minimal elements not below ``w``, obtained from the essential set of ``w * w_o``."""
    n = w.n if n is None else n
    w0 = longest_element(n)
    return {compose(dissecting_u(t, n), w0) for t in essential_set_B(compose(pad(w, n), w0))}


def rwy_via_bijection_A(v: WindowPermutation) -> set[WindowPermutation]:
    """Type A analogue for a permutation of ``1..n``."""
    n = v.hi
    w0 = window_longest(1, n)
    return {compose(dissecting_t_A(t, n), w0) for t in essential_set_A(compose(v, w0), "small")}


def _witnesses(t, t2):
    """The type A comparisons that can certify ``w(t) <= w(t2)``."""
    k2, p2, q2 = t2
    out = {"direct": t2}
    if -k2 < q2 < 0:
        out["case-i"] = (k2 + q2, p2, 1 - q2)
    if is_basic_A(reflect(t2)):
        out["case-ii"] = reflect(t2).as_tuple()
    return out


def _leq_A_triples(t, t2) -> bool:
    return leq_A(basic_perm_A(t), basic_perm_A(t2))


def basic_leq_via_typeA(t, t2) -> bool:
    """
    ``basic_signed(t) <= basic_signed(t2)`` decided by comparisons of
    ordinary basic permutations only: against ``v(t2)``, its reflection, or
    ``v(k2+q2, p2, 1-q2)`` when ``-k2 < q2 < 0``.
    """
    check_B(t)
    check_B(t2)
    return any(_leq_A_triples(t, s) for s in _witnesses(t, t2).values())


def classify_exception(t, t2) -> str:
    """
    Explain a comparison ``w(t) <= w(t2)`` that is invisible in type A.

    Returns ``"none"`` when there is nothing to explain (the type A basic
    permutations already compare, or the signed ones do not), ``"case-i"``
    when ``-k2 < q2 < 0 < q`` and ``v(t) <= v(k2+q2, p2, 1-q2)``,
    ``"case-ii"`` when ``q2 > 0 > q`` and ``v(t)`` lies below the reflection
    of ``v(t2)``, and ``"unclassified"`` otherwise.
    """

    k, p, q = check_B(t)
    k2, p2, q2 = check_B(t2)
    if _leq_A_triples(t, t2) or not leq_B(basic_signed(t), basic_signed(t2)):
        return "none"
    if -k2 < q2 < 0 < q and _leq_A_triples(t, (k2 + q2, p2, 1 - q2)):
        return "case-i"
    if q2 > 0 > q and _leq_A_triples(t, reflect(t2)):
        return "case-ii"
    return "unclassified"


def base_of(n: int) -> set[SignedPermutation]:
    """
    Join-irreducible elements of W_n, found as the elements that are
    minimal outside some lower interval ``{x <= u}``.
    """
    base = set()
    for u in catalog_W(n).elements:
        base |= minimal_not_below(u, n)
    return base


def bigrassmannians(n: int) -> list[SignedPermutation]:
    return [w for w in catalog_W(n).elements if is_bigrassmannian(w)]
