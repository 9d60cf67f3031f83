"""Basic triples ``(k, p, q)`` and their admissible regions."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "BasicTriple",
    "InvalidTripleError",
    "is_basic_A",
    "is_basic_A_small",
    "is_basic_B",
    "n_min",
    "check_B",
]

FLAVORS = ("A", "A-small", "B")


class InvalidTripleError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BasicTriple:
    """
    A rank condition ``(k, p, q)``.

    ``flavor`` records which admissible region the triple was built for
    (``"A"`` centred type A, ``"A-small"`` for S_n on ``1..n``, ``"B"`` signed)
    and takes no part in equality, so the same integers compare equal across
    flavors.
    """
    k: int
    p: int
    q: int
    flavor: str = field(default="B", compare=False)

    def __iter__(self):
        return iter((self.k, self.p, self.q))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.k, self.p, self.q)

    def sort_key(self):
        return (self.p, self.q, self.k)

    def is_valid(self) -> bool:
        return {"A": is_basic_A, "A-small": is_basic_A_small, "B": is_basic_B}[self.flavor](self)

    def to_json(self) -> dict:
        return {"k": self.k, "p": self.p, "q": self.q}

    def __str__(self):
        return f"({self.k},{self.p},{self.q})"


def is_basic_A(t) -> bool:
    k, p, q = t
    return k > max(0, 1 - p - q)


def is_basic_A_small(t) -> bool:
    k, p, q = t
    return k > 0 and p > 0 and q > 0 and p >= k > p - q


def is_basic_B(t) -> bool:
    k, p, q = t
    return is_basic_A(t) and p > 0 and q != 0 and (p != 1 or q > 0)


def check_B(t) -> BasicTriple:
    if not is_basic_B(t):
        raise InvalidTripleError(f"not a type B basic triple: {tuple(t)}")
    k, p, q = t
    return BasicTriple(k, p, q, "B")


def n_min(t) -> int:
    """Smallest n with the basic signed permutation in W_n."""
    k, p, q = t
    return max(p + k - 1, q + k - 1)
