"""Exact monomial computation modulo the 2-minor relations of a ladder.

Each full 2-minor contributes the binomial relation
x[i,j]*x[p,q] = x[i,q]*x[p,j] (i < p, j < q); rewriting is oriented from the
diagonal product to the antidiagonal one, which strictly decreases monomials
in the lexicographic order with row-major variables, so every chain stops.
All ideal-level operations are degree-bounded brute force at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .decompose import decompose
from .ladders import Cell, Ladder, LadderError

MAX_DEGREE_BOUND = 8


class Monomial:
    """A monomial over the cells of a ladder, as a sparse exponent map."""

    __slots__ = ("_exps",)

    def __init__(self, exps=()):
        merged: dict[Cell, int] = {}
        items = exps.items() if hasattr(exps, "items") else exps
        for cell, e in items:
            cell = Cell(*cell)
            e = int(e)
            if e < 0:
                raise LadderError(f"negative exponent for {cell}")
            if e:
                merged[cell] = merged.get(cell, 0) + e
        object.__setattr__(self, "_exps", tuple(sorted(merged.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def unit(cls) -> "Monomial":
        return cls()

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]]) -> "Monomial":
        return cls((cell, 1) for cell in cells)

    @classmethod
    def from_json_dict(cls, doc) -> "Monomial":
        if not isinstance(doc, dict) or "exps" not in doc or not isinstance(doc["exps"], list):
            raise LadderError('monomial JSON must be an object with an "exps" list')
        exps = []
        for entry in doc["exps"]:
            if not isinstance(entry, (list, tuple)) or len(entry) != 3:
                raise LadderError(f"bad exponent entry {entry!r}: expected [row, col, e]")
            exps.append(((entry[0], entry[1]), entry[2]))
        return cls(exps)

    def items(self) -> tuple:
        return self._exps

    def exponent(self, cell) -> int:
        cell = Cell(*cell)
        for c, e in self._exps:
            if c == cell:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def support(self) -> tuple[Cell, ...]:
        return tuple(c for c, _ in self._exps)

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self._exps + other._exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self):
        return hash(self._exps)

    def sort_key(self):
        return (self.degree, self._exps)

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        if not self._exps:
            return "1"
        parts = []
        for (r, c), e in self._exps:
            parts.append(f"x({r},{c})" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    def to_json_dict(self) -> dict:
        return {"exps": [[c.row, c.col, e] for c, e in self._exps]}


class RewriteSystem:
    """The 2-minor rewriting rules of a ladder.

    A rule is a diagonal cell pair ((i, j), (p, q)) with i < p, j < q whose
    full minor lies in the ladder; it rewrites x[i,j]*x[p,q] into
    x[i,q]*x[p,j].
    """

    __slots__ = ("ladder", "__dict__")

    def __init__(self, ladder: Ladder):
        object.__setattr__(self, "ladder", ladder)

    @cached_property
    def rules(self) -> frozenset[tuple[Cell, Cell]]:
        cells = self.ladder.sorted_cells()
        out = []
        for a, u in enumerate(cells):
            for v in cells[a + 1:]:
                if self.has_rule(u, v):
                    out.append((u, v))
        return frozenset(out)

    def has_rule(self, a: Cell, b: Cell) -> bool:
        cells = self.ladder.cells
        return (
            a.row < b.row
            and a.col < b.col
            and a in cells
            and b in cells
            and Cell(a.row, b.col) in cells
            and Cell(b.row, a.col) in cells
        )

    def __repr__(self):
        return f"RewriteSystem({self.ladder!r})"


def _check_supported(mono: Monomial, system: RewriteSystem) -> None:
    bad = [c for c in mono.support if c not in system.ladder.cells]
    if bad:
        raise LadderError(f"monomial uses cells outside the ladder: {bad}")


def _as_multiset(mono: Monomial) -> tuple[Cell, ...]:
    out = []
    for cell, e in mono.items():
        out.extend([cell] * e)
    return tuple(out)


def _redexes(ms: tuple[Cell, ...], system: RewriteSystem):
    """Applicable rules on a sorted cell multiset, in lexicographic rule order."""
    support = sorted(set(ms))
    out = []
    for a, u in enumerate(support):
        for v in support[a + 1:]:
            if u.col < v.col and system.has_rule(u, v):
                out.append((u, v))
    return out


def _apply(ms: tuple[Cell, ...], u: Cell, v: Cell) -> tuple[Cell, ...]:
    lst = list(ms)
    lst.remove(u)
    lst.remove(v)
    lst.append(Cell(u.row, v.col))
    lst.append(Cell(v.row, u.col))
    return tuple(sorted(lst))


def normal_form(mono: Monomial, system: RewriteSystem) -> Monomial:
    """Rewrite to the unique fixed point, always taking the smallest redex."""
    _check_supported(mono, system)
    ms = _as_multiset(mono)
    while True:
        reds = _redexes(ms, system)
        if not reds:
            return Monomial.from_cells(ms)
        u, v = reds[0]
        ms = _apply(ms, u, v)


def is_normal(mono: Monomial, system: RewriteSystem) -> bool:
    _check_supported(mono, system)
    return not _redexes(_as_multiset(mono), system)


def equal_mod_minors(m1: Monomial, m2: Monomial, system: RewriteSystem) -> bool:
    """Whether two monomials agree in the quotient ring (equal normal forms)."""
    return normal_form(m1, system) == normal_form(m2, system)


def reachable_normal_forms(mono: Monomial, system: RewriteSystem) -> frozenset[Monomial]:
    """All normal forms reachable by any rewriting strategy (confluence probe)."""
    _check_supported(mono, system)
    memo: dict[tuple[Cell, ...], frozenset[tuple[Cell, ...]]] = {}
    result = _reachable(_as_multiset(mono), system, memo)
    return frozenset(Monomial.from_cells(ms) for ms in result)


def _reachable(ms, system, memo):
    found = memo.get(ms)
    if found is not None:
        return found
    reds = _redexes(ms, system)
    if not reds:
        result = frozenset((ms,))
    else:
        acc = set()
        for u, v in reds:
            acc |= _reachable(_apply(ms, u, v), system, memo)
        result = frozenset(acc)
    memo[ms] = result
    return result


def certify_confluence(system: RewriteSystem, max_degree: int = 3) -> int:
    """Exhaustively check unique normal forms for all monomials up to max_degree.

    Explores every rewrite order from every monomial of degree 2..max_degree
    over the ladder, asserting a single terminal monomial of unchanged degree.
    Returns the number of monomials checked; raises on any violation.
    """
    cells = system.ladder.sorted_cells()
    memo: dict[tuple[Cell, ...], frozenset[tuple[Cell, ...]]] = {}
    checked = 0
    for degree in range(2, max_degree + 1):
        for ms in itertools.combinations_with_replacement(cells, degree):
            outcomes = _reachable(ms, system, memo)
            if len(outcomes) != 1:
                raise LadderError(f"non-confluent rewriting from {ms}: {sorted(outcomes)}")
            terminal = next(iter(outcomes))
            if len(terminal) != degree:
                raise LadderError(f"degree not preserved rewriting {ms} to {terminal}")
            checked += 1
    return checked


# ---------------------------------------------------------------------------
# degree-bounded ideal operations

def _check_bound(d: int) -> None:
    if d < 1:
        raise LadderError("degree bound must be at least 1")
    if d > MAX_DEGREE_BOUND:
        raise LadderError(f"degree bound {d} exceeds the safety cap {MAX_DEGREE_BOUND}")


def normal_monomials(system: RewriteSystem, degree: int) -> list[Monomial]:
    """All normal-form monomials of the given exact degree, sorted."""
    if degree == 0:
        return [Monomial.unit()]
    cells = system.ladder.sorted_cells()
    out = []
    for ms in itertools.combinations_with_replacement(cells, degree):
        if not _redexes(tuple(ms), system):
            out.append(Monomial.from_cells(ms))
    return out


def ideal_monomials_bounded(gens, d: int, system: RewriteSystem) -> frozenset[Monomial]:
    """Normal forms of all degree <= d monomials in the ideal generated by gens."""
    _check_bound(d)
    gens = sorted(Cell(*g) for g in gens)
    bad = [g for g in gens if g not in system.ladder.cells]
    if bad:
        raise LadderError(f"generators outside the ladder: {bad}")
    out = set()
    for t_degree in range(d):
        for t in normal_monomials(system, t_degree):
            base = _as_multiset(t)
            for g in gens:
                out.add(normal_form(Monomial.from_cells(base + (g,)), system))
    return frozenset(out)


def intersect_bounded(gens1, gens2, d: int, system: RewriteSystem) -> frozenset[Monomial]:
    """Minimal members of the degree <= d intersection of two monomial-generated ideals.

    A member is dropped when another member times a normal-form monomial of
    the complementary degree rewrites to it.
    """
    common = ideal_monomials_bounded(gens1, d, system) & ideal_monomials_bounded(gens2, d, system)
    members = sorted(common, key=Monomial.sort_key)
    kept = []
    for mono in members:
        reducible = False
        for other in members:
            gap = mono.degree - other.degree
            if gap < 1:
                continue
            for t in normal_monomials(system, gap):
                if normal_form(t * other, system) == mono:
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            kept.append(mono)
    return frozenset(kept)


# ---------------------------------------------------------------------------
# the two displayed non-injectivity witnesses

class WitnessCase(NamedTuple):
    name: str
    holds: bool


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of the multiplication-map witness identities on a two-matrix glue."""

    corner: Cell
    lam_top: int
    lam_bottom: int
    cases: tuple[WitnessCase, ...]

    @property
    def vacuous(self) -> bool:
        return not self.cases

    def to_json_dict(self) -> dict:
        return {
            "corner": [self.corner.row, self.corner.col],
            "lambda_top": self.lam_top,
            "lambda_bottom": self.lam_bottom,
            "cases": [{"name": c.name, "holds": c.holds} for c in self.cases],
            "vacuous": self.vacuous,
        }


def verify_witnesses(ladder: Ladder) -> WitnessReport:
    """Check the two witness identities on a glue of two full matrices.

    The ladder must decompose as exactly two full-matrix factors with one
    coincidental corner (a, b).  With lam_top = a + b - 1 - n and
    lam_bottom = m + 1 - a - b, each applicable case hypothesis
    (lam_bottom equal to lam_top or to -lam_top, and positive) is tested by
    checking that its two tensor-argument products agree modulo the minors.
    """
    factorization = decompose(ladder)
    if factorization.w != 1:
        raise LadderError(f"witness check needs exactly one coincidental corner, found {factorization.w}")
    for u, factor in enumerate(factorization.factors):
        if not factor.is_full_matrix:
            raise LadderError(f"witness check needs full-matrix factors; factor {u} is not one")

    a, b = factorization.coincidental[0]
    m, n = ladder.m, ladder.n
    lam_top = a + b - 1 - n
    lam_bottom = m + 1 - a - b
    system = RewriteSystem(ladder)
    cases = []

    if lam_bottom > 0 and lam_bottom == -lam_top:
        lam = lam_bottom
        left = Monomial({Cell(a, b): lam}) * Monomial(
            {Cell(1, b): 1, Cell(a, 1): 1, Cell(a, b): lam - 1}
        )
        right = Monomial({Cell(a, 1): 1, Cell(1, b): 1, Cell(a, b): lam - 1}) * Monomial(
            {Cell(a, b): lam}
        )
        cases.append(WitnessCase("opposite-sign", equal_mod_minors(left, right, system)))

    if lam_bottom > 0 and lam_bottom == lam_top:
        lam = lam_bottom
        left = Monomial({Cell(1, b): lam - 1, Cell(1, n): 1, Cell(a, 1): 1}) * Monomial(
            {Cell(a, b): 1, Cell(a, n): lam - 1}
        )
        right = Monomial({Cell(a, 1): 1, Cell(1, b): lam}) * Monomial({Cell(a, n): lam})
        cases.append(WitnessCase("equal-sign", equal_mod_minors(left, right, system)))

    return WitnessReport(
        corner=Cell(a, b), lam_top=lam_top, lam_bottom=lam_bottom, cases=tuple(cases)
    )
