"""Exact arithmetic in the divisor class group of a ladder determinantal ring.

For a 2-connected ladder with h lower and k upper inside corners the class
group is free abelian of rank h + k + 1, with basis classes Q(1)..Q(h+1)
(row ideals keyed to the rows a_0, ..., a_h) and P(1)..P(k) (one ideal per
upper corner).  Classes are sparse integer vectors over these labels.
"""

from __future__ import annotations

from typing import NamedTuple

from .decompose import Factorization
from .ladders import Cell, Ladder, LadderError, corners, require_analyzable


class BasisLabel(NamedTuple):
    kind: str  # "Q" or "P"
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


class QPrime(NamedTuple):
    """Label for the auxiliary column ideal paired with Q(index)."""

    index: int


def Q(i: int) -> BasisLabel:
    return BasisLabel("Q", i)


def P(j: int) -> BasisLabel:
    return BasisLabel("P", j)


def _label_key(label: BasisLabel):
    return (0 if label.kind == "Q" else 1, label.index)


class DivisorClass:
    """Sparse integer vector over the basis labels of a fixed ambient ladder."""

    __slots__ = ("ladder", "_items")

    def __init__(self, ladder: Ladder, coeffs=None):
        prof = corners(ladder)
        merged: dict[BasisLabel, int] = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for label, c in items:
                if not isinstance(label, BasisLabel):
                    raise LadderError(f"not a basis label: {label!r}")
                if label.kind == "Q":
                    if not 1 <= label.index <= prof.h + 1:
                        raise LadderError(f"label {label} out of range (h = {prof.h})")
                elif label.kind == "P":
                    if not 1 <= label.index <= prof.k:
                        raise LadderError(f"label {label} out of range (k = {prof.k})")
                else:
                    raise LadderError(f"unknown label kind {label.kind!r}")
                merged[label] = merged.get(label, 0) + int(c)
        object.__setattr__(self, "ladder", ladder)
        object.__setattr__(
            self, "_items", tuple(sorted(((l, c) for l, c in merged.items() if c), key=lambda t: _label_key(t[0])))
        )

    def __setattr__(self, name, value):
        raise AttributeError("DivisorClass is immutable")

    @classmethod
    def zero(cls, ladder: Ladder) -> "DivisorClass":
        return cls(ladder)

    def items(self) -> tuple:
        return self._items

    def coeff(self, label: BasisLabel) -> int:
        for l, c in self._items:
            if l == label:
                return c
        return 0

    @property
    def is_zero(self) -> bool:
        return not self._items

    def _require_same_group(self, other):
        if not isinstance(other, DivisorClass):
            raise TypeError("expected a DivisorClass")
        if other.ladder != self.ladder:
            raise LadderError("divisor classes live over different ladders")

    def __add__(self, other):
        self._require_same_group(other)
        coeffs = dict(self._items)
        for l, c in other._items:
            coeffs[l] = coeffs.get(l, 0) + c
        return DivisorClass(self.ladder, coeffs)

    def __neg__(self):
        return DivisorClass(self.ladder, {l: -c for l, c in self._items})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (
            isinstance(other, DivisorClass)
            and self.ladder == other.ladder
            and self._items == other._items
        )

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return f"DivisorClass({self})"

    def __str__(self):
        if not self._items:
            return "0"
        parts = []
        for l, c in self._items:
            if c == 1:
                term = str(l)
            elif c == -1:
                term = f"-{l}"
            else:
                term = f"{c}*{l}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def to_json_dict(self) -> dict:
        qs = {str(l.index): c for l, c in self._items if l.kind == "Q"}
        ps = {str(l.index): c for l, c in self._items if l.kind == "P"}
        return {"Q": qs, "P": ps}


# ---------------------------------------------------------------------------
# basis, ideals, canonical class

def basis(ladder: Ladder) -> tuple[BasisLabel, ...]:
    """The free basis [Q(1)..Q(h+1), P(1)..P(k)] of the class group."""
    require_analyzable(ladder)
    prof = corners(ladder)
    return tuple(Q(i) for i in range(1, prof.h + 2)) + tuple(P(j) for j in range(1, prof.k + 1))


def ideal_generators(ladder: Ladder, label) -> frozenset[Cell]:
    """Variable generators of the height-1 prime ideal named by the label.

    Q(i) is generated by the cells in row a_{i-1}; P(j) by the cells weakly
    above and left of the j-th upper corner; QPrime(i) by the cells in
    column b_{i-1}.
    """
    require_analyzable(ladder)
    prof = corners(ladder)
    if isinstance(label, QPrime):
        if not 1 <= label.index <= prof.h + 1:
            raise LadderError(f"QPrime index {label.index} out of range (h = {prof.h})")
        col = prof.lower_ext[label.index - 1].col
        return frozenset(p for p in ladder.cells if p.col == col)
    if not isinstance(label, BasisLabel):
        raise LadderError(f"not a basis label: {label!r}")
    if label.kind == "Q":
        if not 1 <= label.index <= prof.h + 1:
            raise LadderError(f"label {label} out of range (h = {prof.h})")
        row = prof.lower_ext[label.index - 1].row
        return frozenset(p for p in ladder.cells if p.row == row)
    if not 1 <= label.index <= prof.k:
        raise LadderError(f"label {label} out of range (k = {prof.k})")
    c, d = prof.upper[label.index - 1]
    return frozenset(p for p in ladder.cells if p.row <= c and p.col <= d)


def canonical_class(ladder: Ladder) -> DivisorClass:
    """The canonical class: sum of lambda_i Q(i) and delta_j P(j).

    lambda_i = a_i + b_i - a_{i-1} - b_{i-1} over the sentinel-extended lower
    corners; delta_j = a_{i_j} + b_{i_j} - c_j - d_j where i_j is the least i
    with a_i > c_j.
    """
    require_analyzable(ladder)
    prof = corners(ladder)
    le = prof.lower_ext
    coeffs: dict[BasisLabel, int] = {}
    for i in range(1, prof.h + 2):
        coeffs[Q(i)] = le[i].row + le[i].col - le[i - 1].row - le[i - 1].col
    for j, (c, d) in enumerate(prof.upper, start=1):
        i_j = next(i for i in range(1, prof.h + 2) if le[i].row > c)
        coeffs[P(j)] = le[i_j].row + le[i_j].col - c - d
    return DivisorClass(ladder, coeffs)


def qprime_class(ladder: Ladder, i: int) -> DivisorClass:
    """[QPrime(i)] expressed in the basis: -Q(i) minus the P(j) dominating (a_{i-1}, b_i)."""
    require_analyzable(ladder)
    prof = corners(ladder)
    if not 1 <= i <= prof.h + 1:
        raise LadderError(f"QPrime index {i} out of range (h = {prof.h})")
    le = prof.lower_ext
    a_prev, b_i = le[i - 1].row, le[i].col
    coeffs: dict[BasisLabel, int] = {Q(i): -1}
    for j, (c, d) in enumerate(prof.upper, start=1):
        if a_prev <= c and b_i <= d:
            coeffs[P(j)] = -1
    return DivisorClass(ladder, coeffs)


# ---------------------------------------------------------------------------
# factor relabeling and embedding

class FactorRole(NamedTuple):
    """Double-indexed name of a basis class: q_{u,index} or p_{u,index}."""

    factor: int
    kind: str  # "q" or "p"
    index: int

    def __str__(self):
        return f"{self.kind}[{self.factor},{self.index}]"


class RelabelMap:
    """Bijection between global basis labels and double-indexed factor roles."""

    __slots__ = ("_forward", "_backward")

    def __init__(self, pairs):
        forward = dict(pairs)
        backward = {role: label for label, role in forward.items()}
        if len(backward) != len(forward):
            raise LadderError("relabeling is not a bijection")
        object.__setattr__(self, "_forward", forward)
        object.__setattr__(self, "_backward", backward)

    def __setattr__(self, name, value):
        raise AttributeError("RelabelMap is immutable")

    def __len__(self):
        return len(self._forward)

    def role_of(self, label: BasisLabel) -> FactorRole:
        return self._forward[label]

    def label_of(self, role: FactorRole) -> BasisLabel:
        return self._backward[role]

    def items(self):
        return sorted(self._forward.items(), key=lambda t: _label_key(t[0]))


def relabel(factorization: Factorization) -> RelabelMap:
    """Name each global basis label by its factor and local role.

    A Q keyed to the u-th coincidental corner row belongs to the factor below
    the cut as q_{u,1}; the P at that corner becomes p_{u,0}.  All other
    labels keep their position within the factor that owns the corner.
    """
    ladder = factorization.ladder
    prof = corners(ladder)
    cc = factorization.coincidental
    cc_of = {cell: u + 1 for u, cell in enumerate(cc)}

    q_row_role: dict[int, FactorRole] = {}
    upper_cell_role: dict[Cell, FactorRole] = {}
    for u, (fprof, (dr, dc)) in enumerate(zip(factorization.per_factor_corners, factorization.offsets)):
        top_row = 1 if u == 0 else cc[u - 1].row
        key_rows = [top_row] + [p.row + dr for p in fprof.lower]
        for i, row in enumerate(key_rows, start=1):
            if row in q_row_role:
                raise LadderError("relabeling failure: duplicate row key")
            q_row_role[row] = FactorRole(u, "q", i)
        for j, p in enumerate(fprof.upper, start=1):
            upper_cell_role[Cell(p.row + dr, p.col + dc)] = FactorRole(u, "p", j)

    pairs = []
    for i in range(1, prof.h + 2):
        row = prof.lower_ext[i - 1].row
        role = q_row_role.get(row)
        if role is None:
            raise LadderError(f"relabeling failure: no factor owns the row ideal keyed to row {row}")
        pairs.append((Q(i), role))
    for j, cell in enumerate(prof.upper, start=1):
        if cell in cc_of:
            pairs.append((P(j), FactorRole(cc_of[cell], "p", 0)))
        else:
            role = upper_cell_role.get(cell)
            if role is None:
                raise LadderError(f"relabeling failure: no factor owns the upper corner {cell}")
            pairs.append((P(j), role))

    rmap = RelabelMap(pairs)
    if len(rmap) != prof.h + prof.k + 1:
        raise LadderError("relabeling failure: wrong label count")
    return rmap


def embed_factor_omega(factorization: Factorization, u: int) -> DivisorClass:
    """Image of the u-th factor's canonical class inside the composite group.

    The factor-local coefficient on q_{u,1} is carried to both q_{u,1} and
    p_{u,0} for u >= 1; factor 0 has no p-role at the cut.
    """
    if not 0 <= u <= factorization.w:
        raise LadderError(f"factor index {u} out of range (w = {factorization.w})")
    local = canonical_class(factorization.factors[u])
    rmap = relabel(factorization)
    coeffs: dict[BasisLabel, int] = {}
    for label, c in local.items():
        target = rmap.label_of(FactorRole(u, label.kind.lower(), label.index))
        coeffs[target] = coeffs.get(target, 0) + c
    if u >= 1:
        lam1 = local.coeff(Q(1))
        if lam1:
            target = rmap.label_of(FactorRole(u, "p", 0))
            coeffs[target] = coeffs.get(target, 0) + lam1
    return DivisorClass(factorization.ladder, coeffs)
