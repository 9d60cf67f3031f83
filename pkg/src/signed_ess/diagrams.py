"""
Dot matrices, diagrams and extended diagrams.

Cells are addressed ``(row, col)`` with signed labels.  Three board kinds:

``A``  a permutation ``v`` of ``[lo, hi]``; rows and columns ``lo..hi``,
       dots at ``(v(i), i)``.
``B``  a signed permutation in W_n; rows ``-n..n``, columns ``-n..-1``,
       dots at ``(w(i), i)`` for negative ``i``, an ``x`` at ``(a, b)`` when
       ``a = -w(i)`` for some ``i <= b``.
``C``  as ``B`` without row 0, and ``x`` only for ``i < b``.

A cell is struck when it lies weakly south of the dot in its column or weakly
east of the dot in its row.  The extended diagram is the set of unstruck
cells; the diagram drops the ``x``-marked ones from it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .perm_core import SignedPermutation, WindowPermutation

__all__ = [
    "Board",
    "board",
    "diagram",
    "extended_diagram",
    "se_corners",
    "corners_numeric",
    "corners_descent",
    "render",
    "to_json",
    "board_from_json",
    "BOARD_SCHEMA",
]

Cell = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Board:
    kind: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    dot: np.ndarray
    crossed: np.ndarray
    struck: np.ndarray
    perm: object

    @property
    def n(self) -> int:
        return len(self.cols)

    @cached_property
    def _row_pos(self) -> dict[int, int]:
        return {a: i for i, a in enumerate(self.rows)}

    @cached_property
    def _col_pos(self) -> dict[int, int]:
        return {b: j for j, b in enumerate(self.cols)}

    def has_cell(self, a: int, b: int) -> bool:
        return a in self._row_pos and b in self._col_pos

    def flags(self, a: int, b: int) -> tuple[bool, bool, bool]:
        i, j = self._row_pos[a], self._col_pos[b]
        return bool(self.dot[i, j]), bool(self.crossed[i, j]), bool(self.struck[i, j])

    def next_row(self, a: int) -> int | None:
        """Row just below ``a`` (skips the missing 0 row on a C board)."""
        i = self._row_pos[a] + 1
        return self.rows[i] if i < len(self.rows) else None

    def next_col(self, b: int) -> int | None:
        j = self._col_pos[b] + 1
        return self.cols[j] if j < len(self.cols) else None

    def cells(self, mask: np.ndarray) -> frozenset[Cell]:
        ii, jj = np.nonzero(mask)
        return frozenset((self.rows[i], self.cols[j]) for i, j in zip(ii, jj))

    @cached_property
    def dots(self) -> frozenset[Cell]:
        return self.cells(self.dot)

    @cached_property
    def crosses(self) -> frozenset[Cell]:
        return self.cells(self.crossed)

    def __eq__(self, other):
        if not isinstance(other, Board):
            return NotImplemented
        return (self.kind, self.rows, self.cols) == (other.kind, other.rows, other.cols) and all(
            np.array_equal(x, y) for x, y in
            ((self.dot, other.dot), (self.crossed, other.crossed), (self.struck, other.struck)))

    __hash__ = None


def board(perm, kind: str) -> Board:
    """Build the board of a permutation (``A``) or signed permutation (``B``/``C``)."""
    kind = kind.upper()
    if kind == "A":
        if not isinstance(perm, WindowPermutation):
            raise TypeError("kind A needs a WindowPermutation")
        rows = cols = tuple(perm.positions)
        dot_pairs = [(perm(i), i) for i in cols]
        cross_pairs: list[Cell] = []
    elif kind in ("B", "C"):
        if not isinstance(perm, SignedPermutation):
            raise TypeError(f"kind {kind} needs a SignedPermutation")
        n = perm.n
        rows = tuple(a for a in range(-n, n + 1) if kind == "B" or a != 0)
        cols = tuple(range(-n, 0))
        dot_pairs = [(perm(i), i) for i in cols]
        if kind == "B":
            cross_pairs = [(-perm(i), b) for b in cols for i in cols if i <= b]
        else:
            cross_pairs = [(-perm(i), b) for b in cols for i in cols if i < b]
    else:
        raise ValueError(f"unknown board kind {kind!r}")

    rpos = {a: i for i, a in enumerate(rows)}
    cpos = {b: j for j, b in enumerate(cols)}
    shape = (len(rows), len(cols))
    dot = np.zeros(shape, dtype=bool)
    crossed = np.zeros(shape, dtype=bool)
    struck = np.zeros(shape, dtype=bool)
    for a, b in dot_pairs:
        i, j = rpos[a], cpos[b]
        dot[i, j] = True
        struck[i:, j] = True
        struck[i, j:] = True
    for a, b in cross_pairs:
        crossed[rpos[a], cpos[b]] = True
    for arr in (dot, crossed, struck):
        arr.setflags(write=False)
    return Board(kind, rows, cols, dot, crossed, struck, perm)


def extended_diagram(bd: Board) -> frozenset[Cell]:
    return bd.cells(~bd.struck)


def diagram(bd: Board) -> frozenset[Cell]:
    return bd.cells(~bd.struck & ~bd.crossed)


def se_corners(bd: Board) -> frozenset[Cell]:
    """
    South-east corners: cells of the (extended, for B/C) diagram whose
    southern and eastern neighbours are not in it.
    """
    boxes = diagram(bd) if bd.kind == "A" else extended_diagram(bd)
    corners = set()
    for a, b in boxes:
        below, right = bd.next_row(a), bd.next_col(b)
        if (below, b) in boxes or (a, right) in boxes:
            continue
        corners.add((a, b))
    return frozenset(corners)


def corners_numeric(v: WindowPermutation) -> frozenset[Cell]:
    """SE corners of a type A diagram from the inequalities on ``v`` and ``v^-1``."""
    inv = v.inverse()
    return frozenset(
        (a, b) for a in v.positions for b in v.positions
        if inv(a) > b and v(b) > a and inv(a + 1) <= b and v(b + 1) <= a)


def corners_descent(v: WindowPermutation) -> frozenset[Cell]:
    """SE corners as double descents: ``v(b) > a >= v(b+1)`` and ``v^-1(a) > b >= v^-1(a+1)``."""
    inv = v.inverse()
    return frozenset(
        (a, b) for a in v.positions for b in v.positions
        if v(b) > a >= v(b + 1) and inv(a) > b >= inv(a + 1))


# -- rendering ------------------------------------------------------------

def _glyph(bd: Board, a: int, b: int, boxes: frozenset, dgm: frozenset) -> str:
    dot, crossed, struck = bd.flags(a, b)
    if dot:
        return "o"
    if crossed and struck:
        return "x"
    if (a, b) in dgm:
        return "#"
    if (a, b) in boxes:
        return "+"
    return "."


def _render_ascii(bd: Board) -> str:
    boxes = extended_diagram(bd)
    dgm = diagram(bd)
    lines = ["    |" + "".join(f"{b:>3}" for b in bd.cols)]
    lines.append("----+" + "-" * (3 * len(bd.cols)))
    for a in bd.rows:
        lines.append(f"{a:>3} |" + "".join(f"{_glyph(bd, a, b, boxes, dgm):>3}" for b in bd.cols))
    return "\n".join(lines) + "\n"


def _sorted_cells(cells) -> list[list[int]]:
    return [list(c) for c in sorted(cells)]


def to_json(bd: Board) -> dict:
    if bd.kind == "A":
        perm = {"lo": bd.perm.lo, "values": list(bd.perm.values)}
    else:
        perm = list(bd.perm.window)
    return {
        "kind": bd.kind,
        "n": bd.n,
        "perm": perm,
        "dots": _sorted_cells(bd.dots),
        "crossed": _sorted_cells(bd.crosses),
        "diagram": _sorted_cells(diagram(bd)),
        "extended": _sorted_cells(extended_diagram(bd)),
        "corners": _sorted_cells(se_corners(bd)),
    }


_CELL_LIST = {"type": "array", "items": {"type": "array", "items": {"type": "integer"},
                                         "minItems": 2, "maxItems": 2}}

BOARD_SCHEMA = {
    "type": "object",
    "required": ["kind", "n", "dots", "crossed", "diagram", "extended", "corners"],
    "properties": {
        "kind": {"enum": ["A", "B", "C"]},
        "n": {"type": "integer", "minimum": 1},
        "perm": {},
        "dots": _CELL_LIST,
        "crossed": _CELL_LIST,
        "diagram": _CELL_LIST,
        "extended": _CELL_LIST,
        "corners": _CELL_LIST,
    },
    "additionalProperties": False,
}


def board_from_json(data: dict) -> Board:
    """Rebuild a board from its JSON form (only the dots are needed)."""
    dots = {b: a for a, b in data["dots"]}
    if data["kind"] == "A":
        cols = sorted(dots)
        return board(WindowPermutation(cols[0], tuple(dots[b] for b in cols)), "A")
    n = data["n"]
    # column -i holds the dot (w(-i), -i) = (-w(i), -i)
    w = SignedPermutation(tuple(-dots[-i] for i in range(1, n + 1)))
    return board(w, data["kind"])


def _render_svg(bd: Board) -> str:
    size = 20
    boxes = extended_diagram(bd)
    width = size * (len(bd.cols) + 2)
    height = size * (len(bd.rows) + 2)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">']
    for j, b in enumerate(bd.cols):
        out.append(f'<text x="{size * (j + 1.3):.0f}" y="{size * 0.8:.0f}" font-size="10">{b}</text>')
    for i, a in enumerate(bd.rows):
        y = size * (i + 1)
        out.append(f'<text x="2" y="{y + 14}" font-size="10">{a}</text>')
        for j, b in enumerate(bd.cols):
            x = size * (j + 1)
            fill = "white" if (a, b) in boxes else "lightgray"
            out.append(f'<rect x="{x}" y="{y}" width="{size}" height="{size}" '
                       f'fill="{fill}" stroke="black"/>')
            dot, crossed, _ = bd.flags(a, b)
            if dot:
                out.append(f'<circle cx="{x + size // 2}" cy="{y + size // 2}" r="4" fill="black"/>')
            elif crossed:
                out.append(f'<text x="{x + 6}" y="{y + 14}" font-size="11">&#215;</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(bd: Board, format: str = "ascii") -> str:
    """
    Text rendering.  ASCII legend: ``o`` dot, ``x`` struck marked cell,
    ``#`` box of the diagram, ``+`` box of the extended diagram only (an
    unstruck marked cell), ``.`` struck unmarked cell.
    """
    if format == "ascii":
        return _render_ascii(bd)
    if format == "json":
        return json.dumps(to_json(bd), sort_keys=True) + "\n"
    if format == "svg":
        return _render_svg(bd)
    raise ValueError(f"unknown format {format!r}")
