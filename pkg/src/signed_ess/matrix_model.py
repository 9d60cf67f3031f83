"""
Schubert cell representatives over a prime field.

Matrices have rows ``-n..n`` (type B; type C omits row 0) and columns
``-n..-1``; columns are isotropic and mutually orthogonal for

* type B: the symmetric form ``<e_i, e_-j> = delta_ij`` (so ``<e_0, e_0> = 1``);
* type C: the alternating form ``<e_-i, e_j> = delta_ij`` for ``i, j > 0``.

Two charts are built around the coordinate point of ``w``:

``figure``  column ``b`` has its pivot 1 in row ``w(b)``, zeros in larger
            rows and in pivot rows of columns to its left, free entries on
            the diagram boxes of ``w`` and solved entries on the unstruck
            marked boxes.  It has ``l(w)`` free entries.
``open``    the row reversal ``a -> -a`` of the figure chart of ``-w``: pivot
            1 in row ``w(b)`` with zeros in smaller rows.  This is the dense
            open part of the Schubert variety of ``w``, of dimension
            ``n^2 - l(w)``, on which every corner nullity equals the rank
            function exactly.

``corner_nullity(m, p, q)`` is the nullity of the block on columns
``-n..-p`` and rows ``-n..q-1``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .bruhat import leq_B, rank_B
from .diagrams import board, diagram, extended_diagram
from .essential import dissecting_u, essential_set_B, essential_set_C
from .perm_core import SignedPermutation, length, pad

__all__ = [
    "PrimeField",
    "CellMatrix",
    "InvariantViolation",
    "CHARTS",
    "build_cell",
    "random_cell",
    "corner_nullity",
    "rank_mod",
    "Report",
    "verify_rank_function",
    "verify_theorem_A",
    "verify_minimality",
    "DEFAULT_MODULUS",
]

DEFAULT_MODULUS = 10007
CHARTS = ("open", "figure")


class InvariantViolation(RuntimeError):
    """A marked entry could not be solved, or a built column fails the form."""


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self):
        if self.modulus == 2:
            raise ValueError("characteristic 2 is not supported")
        if not _is_prime(self.modulus):
            raise ValueError(f"{self.modulus} is not prime")

    def inv(self, x: int) -> int:
        return pow(x % self.modulus, -1, self.modulus)


Cell = tuple[int, int]


@dataclass(frozen=True)
class CellMatrix:
    kind: str
    chart: str
    n: int
    field: PrimeField
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: dict = field(repr=False)
    pivot_rows: dict = field(repr=False)
    free_positions: frozenset = field(repr=False)
    forced_positions: frozenset = field(repr=False)

    def __getitem__(self, cell: Cell) -> int:
        return self.entries.get(cell, 0)

    def column(self, b: int) -> dict[int, int]:
        return {a: v for (a, bb), v in self.entries.items() if bb == b and v}

    def as_rows(self) -> list[list[int]]:
        return [[self[(a, b)] for b in self.cols] for a in self.rows]

    def to_json(self) -> dict:
        return {"kind": self.kind, "chart": self.chart, "n": self.n,
                "modulus": self.field.modulus, "rows": list(self.rows),
                "cols": list(self.cols), "matrix": self.as_rows()}


def _pair(kind: str, x: dict[int, int], y: dict[int, int], mod: int) -> int:
    """The bilinear form on sparse column vectors keyed by row label."""
    total = 0
    for a, xa in x.items():
        ya = y.get(-a)
        if ya:
            if kind == "B" or a < 0:
                total += xa * ya
            else:
                # alternating: <e_i, e_-i> = -1 for i > 0
                total -= xa * ya
    return total % mod


def _figure_chart(w: SignedPermutation, kind: str, fld: PrimeField,
                  free_values: dict) -> CellMatrix:
    mod = fld.modulus
    bd = board(w, kind)
    free = diagram(bd)
    forced = extended_diagram(bd) - free
    unknown = set(free_values) - free
    if unknown:
        raise ValueError(f"free values given for non-free cells {sorted(unknown)}")

    pivots = {b: w(b) for b in bd.cols}
    columns: dict[int, dict[int, int]] = {}
    for b in bd.cols:
        col = {pivots[b]: 1}
        for a in bd.rows:
            if (a, b) in free:
                val = free_values.get((a, b), 0) % mod
                if val:
                    col[a] = val
        # Entries in larger rows are already known when row a is solved: the
        # equation for row a pairs col with the column whose pivot is in -a,
        # and that column vanishes below its pivot.
        for a in sorted((a for a, bb in forced if bb == b), reverse=True):
            if -a == pivots[b]:
                if kind != "B":
                    raise InvariantViolation(f"self-pairing equation in type C at ({a}, {b})")
                coeff, rest = 2, _pair(kind, col, col, mod)
            else:
                partner = next((m for m in columns if pivots[m] == -a), None)
                if partner is None:
                    raise InvariantViolation(f"no equation determines ({a}, {b})")
                coeff = 1 if (kind == "B" or a < 0) else -1
                rest = _pair(kind, col, columns[partner], mod)
            # the coefficient is the pivot 1 (twice, for a self-pairing), up to sign
            assert coeff in (1, -1, 2)
            val = (-rest * fld.inv(coeff)) % mod
            if val:
                col[a] = val
        for m, other in columns.items():
            if _pair(kind, col, other, mod):
                raise InvariantViolation(f"columns {m} and {b} are not orthogonal")
        if _pair(kind, col, col, mod):
            raise InvariantViolation(f"column {b} is not isotropic")
        columns[b] = col
    entries = {(a, b): v for b, col in columns.items() for a, v in col.items()}
    return CellMatrix(kind, "figure", w.n, fld, bd.rows, bd.cols, entries,
                      pivots, free, forced)


def _reverse_rows(m: CellMatrix) -> CellMatrix:
    """The image under ``e_a -> e_-a`` (an isometry of the B form, minus one on the C form)."""
    flip = lambda cells: frozenset((-a, b) for a, b in cells)  # noqa: E731
    return CellMatrix(m.kind, "open", m.n, m.field, m.rows, m.cols,
                      {(-a, b): v for (a, b), v in m.entries.items()},
                      {b: -r for b, r in m.pivot_rows.items()},
                      flip(m.free_positions), flip(m.forced_positions))


def _negate(w: SignedPermutation) -> SignedPermutation:
    return SignedPermutation(tuple(-x for x in w.window))


def free_positions(w: SignedPermutation, kind: str = "B", chart: str = "open") -> frozenset:
    kind = kind.upper()
    if chart == "figure":
        return diagram(board(w, kind))
    return frozenset((-a, b) for a, b in diagram(board(_negate(w), kind)))


def build_cell(w: SignedPermutation, kind: str = "B", fld: PrimeField | None = None,
               free_values: dict | None = None, chart: str = "open") -> CellMatrix:
    """
    Cell representative with the given free entries (missing ones are 0).

    Marked entries are solved column by column, left to right, each from
    the single orthogonality (or type B self-pairing) equation in which it
    appears with a unit coefficient.
    """
    kind = kind.upper()
    if kind not in ("B", "C"):
        raise ValueError(f"unknown kind {kind!r}")
    if chart not in CHARTS:
        raise ValueError(f"unknown chart {chart!r}")
    fld = fld or PrimeField()
    free_values = dict(free_values or {})
    if chart == "figure":
        return _figure_chart(w, kind, fld, free_values)
    inner = {(-a, b): v for (a, b), v in free_values.items()}
    return _reverse_rows(_figure_chart(_negate(w), kind, fld, inner))


def random_cell(w: SignedPermutation, kind: str = "B", fld: PrimeField | None = None,
                rng: random.Random | None = None, chart: str = "open") -> CellMatrix:
    fld = fld or PrimeField()
    rng = rng or random.Random(0)
    values = {cell: rng.randrange(fld.modulus) for cell in sorted(free_positions(w, kind, chart))}
    return build_cell(w, kind, fld, values, chart)


def rank_mod(rows: list[list[int]], mod: int) -> int:
    """Rank by Gaussian elimination over ``Z/mod``."""
    mat = [[x % mod for x in r] for r in rows]
    if not mat:
        return 0
    rank = 0
    for c in range(len(mat[0])):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][c]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][c], -1, mod)
        mat[rank] = [(x * inv) % mod for x in mat[rank]]
        for r in range(rank + 1, len(mat)):
            if mat[r][c]:
                f = mat[r][c]
                mat[r] = [(x - f * y) % mod for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def corner_nullity(m: CellMatrix, p: int, q: int) -> int:
    """Nullity of the block on columns ``-n..-p`` and rows ``-n..q-1``."""
    n = m.n
    if not (1 <= p <= n and -n <= q <= n):
        raise ValueError(f"corner (p={p}, q={q}) out of range for n={n}")
    cols = [b for b in m.cols if b <= -p]
    rows = [a for a in m.rows if a < q]
    return len(cols) - rank_mod([[m[(a, b)] for b in cols] for a in rows], m.field.modulus)


@dataclass
class Report:
    """Outcome of a verification sweep; violations are JSON-ready dicts."""
    name: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.violations.extend(other.violations)
        return self

    def summary(self) -> dict:
        return {"summary": self.name, "checked": self.checked,
                "violations": len(self.violations)}

    def json_lines(self) -> str:
        lines = [json.dumps(v, sort_keys=True) for v in self.violations]
        lines.append(json.dumps(self.summary(), sort_keys=True))
        return "\n".join(lines) + "\n"


def _sample_seed(seed: int, s: int) -> int:
    return seed * 1_000_003 + s


def verify_rank_function(w: SignedPermutation, kind: str = "B", fld: PrimeField | None = None,
                         samples: int = 20, seed: int = 0) -> Report:
    """
    Check the cell model of ``w`` against the rank function.

    * every sampled point of the open chart has corner nullity equal to
      ``rank_B(w, p, q)`` at every ``(p, q)``;
    * the figure chart has ``l(w)`` free entries, the open chart ``n^2 - l(w)``;
    * on sampled figure-chart points the nullity never exceeds the rank
      function, with equality at the coordinate point.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    kind = kind.upper()
    fld = fld or PrimeField()
    report = Report(f"rank-function-{kind}")
    n, ell = w.n, length(w)
    corners = [(p, q) for p in range(1, n + 1) for q in range(-n, n + 1)]
    expected = {pq: rank_B(w, *pq) for pq in corners}

    def bad(**info):
        report.violations.append({"w": list(w.window), "wprime": list(w.window), **info})

    for chart, want in (("figure", ell), ("open", n * n - ell)):
        got = len(free_positions(w, kind, chart))
        report.checked += 1
        if got != want:
            bad(seed=None, check=f"free-count-{chart}", expected=want, got=got)
    origin = build_cell(w, kind, fld, chart="figure")
    for pq in corners:
        report.checked += 1
        if corner_nullity(origin, *pq) != expected[pq]:
            bad(seed=None, check="coordinate-point", p=pq[0], q=pq[1],
                expected=expected[pq], got=corner_nullity(origin, *pq))
    for s in range(samples):
        sd = _sample_seed(seed, s)
        m = random_cell(w, kind, fld, random.Random(sd), "open")
        f = random_cell(w, kind, fld, random.Random(sd), "figure")
        for p, q in corners:
            report.checked += 2
            got = corner_nullity(m, p, q)
            if got != expected[(p, q)]:
                bad(seed=sd, check="open", p=p, q=q, expected=expected[(p, q)], got=got)
            got = corner_nullity(f, p, q)
            if got > expected[(p, q)]:
                bad(seed=sd, check="figure-bound", p=p, q=q, expected=expected[(p, q)], got=got)
    return report


def _ess(w: SignedPermutation, kind: str):
    return essential_set_B(w) if kind == "B" else essential_set_C(w)


def verify_theorem_A(w: SignedPermutation, w2: SignedPermutation, kind: str = "B",
                     fld: PrimeField | None = None, samples: int = 3, seed: int = 0) -> Report:
    """
    On sampled points of the open cell of ``w2``, the essential conditions of
    ``w``, the full list of rank conditions of ``w``, and ``w <= w2`` give
    the same verdict.
    """
    kind = kind.upper()
    fld = fld or PrimeField()
    n = max(w.n, w2.n)
    w, w2 = pad(w, n), pad(w2, n)
    report = Report(f"theorem-A-{kind}")
    ess = _ess(w, kind)
    bruhat = leq_B(w, w2)
    for s in range(samples):
        sd = _sample_seed(seed, s)
        m = random_cell(w2, kind, fld, random.Random(sd))
        by_ess = all(corner_nullity(m, p, q) >= k for k, p, q in ess)
        by_all = all(corner_nullity(m, p, q) >= rank_B(w, p, q)
                     for p in range(1, n + 1) for q in range(-n, n + 1))
        report.checked += 1
        if not (by_ess == by_all == bruhat):
            report.violations.append({"w": list(w.window), "wprime": list(w2.window),
                                      "seed": sd, "essential": by_ess, "all": by_all,
                                      "bruhat": bruhat})
    return report


def verify_minimality(w: SignedPermutation, kind: str = "B", fld: PrimeField | None = None,
                      samples: int = 3, seed: int = 0) -> Report:
    """
    No essential condition can be dropped: points of the open cell of the
    dissecting element of ``t0`` fail ``t0`` and satisfy every other
    essential condition of ``w``.
    """
    kind = kind.upper()
    fld = fld or PrimeField()
    report = Report(f"minimality-{kind}")
    ess = _ess(w, kind)
    for t0 in ess:
        u = dissecting_u(t0, w.n)
        for s in range(samples):
            sd = _sample_seed(seed, s)
            m = random_cell(u, kind, fld, random.Random(sd))
            fails = corner_nullity(m, t0.p, t0.q) < t0.k
            others = all(corner_nullity(m, p, q) >= k for k, p, q in ess if (k, p, q) != tuple(t0))
            report.checked += 1
            if not (fails and others):
                report.violations.append({"w": list(w.window), "wprime": list(u.window),
                                          "seed": sd, "triple": list(t0),
                                          "fails": fails, "others": others})
    return report
