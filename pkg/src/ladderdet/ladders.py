"""Ladders of indeterminates: parsing, validation, corners, and composition.

A ladder is a finite set of grid cells closed under completing rectangles:
whenever (i, j) and (p, q) both lie in the set with i <= p and j <= q, the
cells (i, q) and (p, j) must lie in it too.  Rows grow downward, columns grow
rightward, and all indices are 1-based.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple


class LadderError(ValueError):
    """Raised for structurally invalid ladders and malformed ladder input."""


class Cell(NamedTuple):
    row: int
    col: int

    def __repr__(self):
        return f"({self.row},{self.col})"


class Ladder:
    """An immutable ladder, normalized so its bounding box starts at (1, 1)."""

    __slots__ = ("cells", "m", "n", "_rows", "_hash")

    def __init__(self, cells: Iterable[tuple[int, int]]):
        pts = set()
        for rc in cells:
            try:
                r, c = rc
            except (TypeError, ValueError):
                raise LadderError(f"bad cell {rc!r}: expected a (row, col) pair") from None
            if not isinstance(r, int) or not isinstance(c, int) or isinstance(r, bool) or isinstance(c, bool):
                raise LadderError(f"cell indices must be integers, got {rc!r}")
            pts.add(Cell(r, c))
        if not pts:
            raise LadderError("a ladder needs at least one cell")
        dr = 1 - min(p.row for p in pts)
        dc = 1 - min(p.col for p in pts)
        if dr or dc:
            pts = {Cell(p.row + dr, p.col + dc) for p in pts}
        rows = {}
        for p in pts:
            rows.setdefault(p.row, set()).add(p.col)
        object.__setattr__(self, "cells", frozenset(pts))
        object.__setattr__(self, "m", max(p.row for p in pts))
        object.__setattr__(self, "n", max(p.col for p in pts))
        object.__setattr__(self, "_rows", {r: frozenset(s) for r, s in rows.items()})
        object.__setattr__(self, "_hash", hash(self.cells))
        _check_closure(self._rows)

    def __setattr__(self, name, value):
        raise AttributeError("Ladder is immutable")

    @classmethod
    def full_matrix(cls, m: int, n: int) -> "Ladder":
        """The full m x n grid of cells."""
        if m < 1 or n < 1:
            raise LadderError("matrix dimensions must be positive")
        return cls(Cell(r, c) for r in range(1, m + 1) for c in range(1, n + 1))

    def row_cols(self, r: int) -> frozenset[int]:
        """Columns occupied in row r (empty set if the row is empty)."""
        return self._rows.get(r, frozenset())

    @property
    def occupied_rows(self) -> tuple[int, ...]:
        return tuple(sorted(self._rows))

    @property
    def is_full_matrix(self) -> bool:
        return len(self.cells) == self.m * self.n

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def to_json_dict(self) -> dict:
        return {"cells": [[p.row, p.col] for p in self.sorted_cells()]}

    def __contains__(self, cell) -> bool:
        return Cell(*cell) in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.sorted_cells())

    def __eq__(self, other) -> bool:
        return isinstance(other, Ladder) and self.cells == other.cells

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self):
        return f"Ladder({self.m}x{self.n}, {len(self.cells)} cells)"


def _check_closure(rows: dict[int, frozenset[int]]) -> None:
    """Verify the rectangle-closure axiom, naming one violating pair on failure.

    For rows r1 < r2 with column sets C1, C2 the axiom is equivalent to:
    every q in C2 with q >= min(C1) lies in C1, and every j in C1 with
    j <= max(C2) lies in C2.
    """
    order = sorted(rows)
    for a, r1 in enumerate(order):
        c1 = rows[r1]
        m1 = min(c1)
        for r2 in order[a + 1:]:
            c2 = rows[r2]
            m2 = max(c2)
            if all(q in c1 for q in c2 if q >= m1) and all(j in c2 for j in c1 if j <= m2):
                continue
            for j in sorted(c1):
                for q in sorted(c2):
                    if j <= q and (q not in c1 or j not in c2):
                        raise LadderError(
                            f"closure violation: cells ({r1},{j}) and ({r2},{q}) "
                            f"require ({r1},{q}) and ({r2},{j})"
                        )


# ---------------------------------------------------------------------------
# parsing / rendering

def parse_json(text: str) -> Ladder:
    """Parse a ladder from ``{"cells": [[row, col], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LadderError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict) or "cells" not in doc:
        raise LadderError('ladder JSON must be an object with a "cells" key')
    raw = doc["cells"]
    if not isinstance(raw, list):
        raise LadderError('"cells" must be a list of [row, col] pairs')
    cells = []
    for entry in raw:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise LadderError(f"bad cell entry {entry!r}: expected [row, col]")
        cells.append((entry[0], entry[1]))
    if len(set(map(tuple, cells))) != len(cells):
        warnings.warn("duplicate cells in ladder input; deduplicating", stacklevel=2)
    return Ladder(cells)


def parse_ascii(text: str) -> Ladder:
    """Parse a ladder from a ``#``/``.`` grid, one row per line.

    Spaces and tabs count as absent cells; trailing whitespace and blank
    lines at the top or bottom are ignored.  Blank lines between occupied
    rows are rejected.
    """
    lines = [line.rstrip() for line in text.split("\n")]
    occupied = [i for i, line in enumerate(lines) if "#" in line]
    if not occupied:
        raise LadderError("empty grid: no '#' cells found")
    first, last = occupied[0], occupied[-1]
    cells = []
    for i in range(first, last + 1):
        line = lines[i]
        if "#" not in line:
            raise LadderError(f"blank row {i + 1} between occupied rows")
        for j, ch in enumerate(line):
            if ch == "#":
                cells.append((i - first + 1, j + 1))
            elif ch not in ". \t":
                raise LadderError(f"unexpected character {ch!r} at row {i + 1}, column {j + 1}")
    return Ladder(cells)


def parse_auto(text: str) -> Ladder:
    """Parse JSON if the first non-space byte is '{', else the ASCII grid format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json(text)
    return parse_ascii(text)


def render_ascii(ladder: Ladder, annotate: bool = False) -> str:
    """Render as a ``#``/``.`` grid; with annotate, mark corners L/U/C."""
    grid = [["." for _ in range(ladder.n)] for _ in range(ladder.m)]
    for p in ladder.cells:
        grid[p.row - 1][p.col - 1] = "#"
    if annotate:
        prof = corners(ladder)
        lower, upper = set(prof.lower), set(prof.upper)
        for p in lower | upper:
            mark = "C" if p in lower and p in upper else ("L" if p in lower else "U")
            grid[p.row - 1][p.col - 1] = mark
    return "\n".join("".join(row) for row in grid)


# ---------------------------------------------------------------------------
# corners

@dataclass(frozen=True)
class CornerProfile:
    """Inside corners of a ladder, with the conventional sentinel corners.

    ``lower_ext`` lists (a_0, b_0) = (1, n), the lower inside corners in row
    order, then (a_{h+1}, b_{h+1}) = (m, 1); ``upper_ext`` is analogous for
    the upper corners.
    """

    m: int
    n: int
    lower: tuple[Cell, ...]
    upper: tuple[Cell, ...]

    @property
    def h(self) -> int:
        return len(self.lower)

    @property
    def k(self) -> int:
        return len(self.upper)

    @property
    def lower_ext(self) -> tuple[Cell, ...]:
        return (Cell(1, self.n),) + self.lower + (Cell(self.m, 1),)

    @property
    def upper_ext(self) -> tuple[Cell, ...]:
        return (Cell(1, self.n),) + self.upper + (Cell(self.m, 1),)

    @property
    def coincidental(self) -> tuple[Cell, ...]:
        both = set(self.lower) & set(self.upper)
        return tuple(sorted(both))

    def rows_strictly_increasing(self) -> bool:
        for seq in (self.lower, self.upper):
            if any(a.row >= b.row for a, b in zip(seq, seq[1:])):
                return False
        return True


@lru_cache(maxsize=None)
def corners(ladder: Ladder) -> CornerProfile:
    """All lower and upper inside corners, found by exhaustive membership test."""
    cells = ladder.cells
    lower = []
    upper = []
    for p in cells:
        r, c = p
        if (r - 1, c) in cells and (r, c - 1) in cells and (r - 1, c - 1) not in cells:
            lower.append(p)
        if (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) not in cells:
            upper.append(p)
    return CornerProfile(ladder.m, ladder.n, tuple(sorted(lower)), tuple(sorted(upper)))


def coincidental_corners(ladder: Ladder) -> tuple[Cell, ...]:
    """Cells that are simultaneously lower and upper inside corners, by row."""
    return corners(ladder).coincidental


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class ValidationReport:
    is_ladder: bool
    normalized: bool
    every_cell_in_minor: bool
    two_connected: bool
    path_connected: bool
    sidedness: str  # matrix | one-sided | two-sided | other
    messages: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "is_ladder": self.is_ladder,
            "normalized": self.normalized,
            "every_cell_in_minor": self.every_cell_in_minor,
            "two_connected": self.two_connected,
            "path_connected": self.path_connected,
            "sidedness": self.sidedness,
            "messages": list(self.messages),
        }


@lru_cache(maxsize=None)
def validate(ladder: Ladder) -> ValidationReport:
    """Diagnostic checks on a structurally valid ladder.

    Two-connectedness is tested operationally: every cell must belong to some
    full 2-minor and the hypergraph whose hyperedges are the full 2-minors
    must be connected.
    """
    cells = sorted(ladder.cells)
    index = {p: i for i, p in enumerate(cells)}
    parent = list(range(len(cells)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri

    covered = [False] * len(cells)
    rows = ladder.occupied_rows
    # Full minors between rows r1 < r2 live exactly on the common columns:
    # closure makes {(r1,j),(r1,q),(r2,j),(r2,q)} a minor for j < q in the
    # intersection, so one union over the shared columns suffices.
    for a, r1 in enumerate(rows):
        c1 = ladder.row_cols(r1)
        for r2 in rows[a + 1:]:
            common = sorted(c1 & ladder.row_cols(r2))
            if len(common) < 2:
                continue
            anchor = index[Cell(r1, common[0])]
            for c in common:
                for r in (r1, r2):
                    i = index[Cell(r, c)]
                    covered[i] = True
                    union(anchor, i)

    every_cell_in_minor = all(covered)
    roots = {find(i) for i in range(len(cells))}
    two_connected = every_cell_in_minor and len(roots) == 1

    # 4-neighbor connectivity
    seen = {cells[0]}
    stack = [cells[0]]
    while stack:
        r, c = stack.pop()
        for q in (Cell(r - 1, c), Cell(r + 1, c), Cell(r, c - 1), Cell(r, c + 1)):
            if q in ladder.cells and q not in seen:
                seen.add(q)
                stack.append(q)
    path_connected = len(seen) == len(cells)

    prof = corners(ladder)
    ordered = prof.rows_strictly_increasing()

    messages = []
    if not every_cell_in_minor:
        loose = sum(1 for c in covered if not c)
        messages.append(f"{loose} cell(s) belong to no full 2-minor")
    if not two_connected and every_cell_in_minor:
        messages.append("the 2-minor hypergraph is disconnected")
    if not path_connected:
        messages.append("cell set is not path-connected")
    if not ordered:
        messages.append("inside-corner rows are not strictly increasing")

    if not path_connected or not ordered:
        sidedness = "other"
    elif ladder.is_full_matrix:
        sidedness = "matrix"
    elif prof.h > 0 and prof.k > 0:
        sidedness = "two-sided"
    elif (prof.h == 0) != (prof.k == 0):
        sidedness = "one-sided"
    else:
        sidedness = "other"

    normalized = (
        1 in ladder._rows
        and ladder.m in ladder._rows
        and any(1 in s for s in ladder._rows.values())
        and any(ladder.n in s for s in ladder._rows.values())
    )
    return ValidationReport(
        is_ladder=True,
        normalized=normalized,
        every_cell_in_minor=every_cell_in_minor,
        two_connected=two_connected,
        path_connected=path_connected,
        sidedness=sidedness,
        messages=tuple(messages),
    )


def require_analyzable(ladder: Ladder) -> ValidationReport:
    """Reject ladders outside the analyzed class (not 2-connected, or degenerate)."""
    report = validate(ladder)
    if not report.two_connected:
        raise LadderError("ladder is not 2-connected: " + "; ".join(report.messages))
    if report.sidedness == "other":
        raise LadderError("degenerate ladder: " + "; ".join(report.messages))
    return report


# ---------------------------------------------------------------------------
# antitranspose and sharp composition

def antitranspose(ladder: Ladder) -> Ladder:
    """Reflect along the antidiagonal: cell (i, j) maps to (n+1-j, m+1-i)."""
    m, n = ladder.m, ladder.n
    return Ladder(Cell(n + 1 - p.col, m + 1 - p.row) for p in ladder.cells)


def compose(factors: Iterable[Ladder]) -> Ladder:
    """Glue ladders corner to corner, first factor top-right.

    The lower-left cell of the accumulated ladder is identified with the
    top-right cell of each successive factor, producing one coincidental
    inside corner per identification.
    """
    factors = list(factors)
    if not factors:
        raise LadderError("compose needs at least one factor")
    for f in factors:
        if Cell(f.m, 1) not in f.cells or Cell(1, f.n) not in f.cells:
            raise LadderError("factor lacks its lower-left or top-right cell")
    acc = set(factors[0].cells)
    acc_m = factors[0].m
    for nxt in factors[1:]:
        shift = nxt.n - 1
        acc = {Cell(p.row, p.col + shift) for p in acc}
        acc |= {Cell(p.row + acc_m - 1, p.col) for p in nxt.cells}
        acc_m += nxt.m - 1
    return Ladder(acc)
