"""Splitting a 2-connected ladder at its coincidental inside corners.

A coincidental corner is both a lower and an upper inside corner; cutting at
each one yields factors that overlap pairwise in exactly that corner cell,
and gluing the factors back with :func:`ladderdet.ladders.compose` recovers
the original ladder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ladders import (
    Cell,
    CornerProfile,
    Ladder,
    LadderError,
    coincidental_corners,
    compose,
    corners,
    require_analyzable,
    validate,
)


@dataclass(frozen=True)
class Factorization:
    """Ordered factors of a ladder, cut at its coincidental inside corners.

    ``offsets[u]`` translates factor-local coordinates into coordinates of
    the original ladder: local (r, c) sits at (r + dr, c + dc).
    """

    ladder: Ladder
    factors: tuple[Ladder, ...]
    coincidental: tuple[Cell, ...]
    offsets: tuple[tuple[int, int], ...]
    per_factor_corners: tuple[CornerProfile, ...]

    @property
    def w(self) -> int:
        return len(self.coincidental)

    def to_json_dict(self) -> dict:
        return {
            "coincidental": [[p.row, p.col] for p in self.coincidental],
            "factors": [f.to_json_dict() for f in self.factors],
            "offsets": [[dr, dc] for dr, dc in self.offsets],
        }


def decompose(ladder: Ladder) -> Factorization:
    """Cut a 2-connected ladder at its coincidental corners into factors.

    With the corners cc_1 < ... < cc_w ordered by row, the factors are the
    closed regions between consecutive corners; all structural invariants
    (exact union, one-cell overlaps, corner-free 2-connected factors,
    compose round trip) are asserted before returning.
    """
    require_analyzable(ladder)
    cc = coincidental_corners(ladder)
    w = len(cc)
    if w == 0:
        regions = [set(ladder.cells)]
    else:
        regions = []
        regions.append({p for p in ladder.cells if p.row <= cc[0].row and p.col >= cc[0].col})
        for u in range(1, w):
            hi, lo = cc[u - 1], cc[u]
            regions.append(
                {p for p in ladder.cells if hi.row <= p.row <= lo.row and lo.col <= p.col <= hi.col}
            )
        regions.append({p for p in ladder.cells if p.row >= cc[-1].row and p.col <= cc[-1].col})

    factors = []
    offsets = []
    for region in regions:
        if not region:
            raise LadderError("decomposition failure: empty factor region")
        dr = min(p.row for p in region) - 1
        dc = min(p.col for p in region) - 1
        factors.append(Ladder(Cell(p.row - dr, p.col - dc) for p in region))
        offsets.append((dr, dc))

    _check_invariants(ladder, factors, offsets, cc, regions)
    return Factorization(
        ladder=ladder,
        factors=tuple(factors),
        coincidental=cc,
        offsets=tuple(offsets),
        per_factor_corners=tuple(corners(f) for f in factors),
    )


def _check_invariants(ladder, factors, offsets, cc, regions):
    union = set()
    for region in regions:
        union |= region
    if union != set(ladder.cells):
        raise LadderError("decomposition failure: factors do not cover the ladder")
    for u in range(len(regions) - 1):
        overlap = regions[u] & regions[u + 1]
        if overlap != {cc[u]}:
            raise LadderError(
                f"decomposition failure: factors {u} and {u + 1} overlap in {sorted(overlap)}, "
                f"expected exactly {cc[u]}"
            )
        for v in range(u + 2, len(regions)):
            if regions[u] & regions[v]:
                raise LadderError(f"decomposition failure: factors {u} and {v} overlap")
    prof = corners(ladder)
    sum_h = sum(corners(f).h for f in factors)
    sum_k = sum(corners(f).k for f in factors)
    if sum_h + len(cc) != prof.h or sum_k + len(cc) != prof.k:
        raise LadderError("decomposition failure: corner counts do not add up")
    for u, f in enumerate(factors):
        if coincidental_corners(f):
            raise LadderError(f"decomposition failure: factor {u} has a coincidental corner")
        if not validate(f).two_connected:
            raise LadderError(f"decomposition failure: factor {u} is not 2-connected")
    if compose(factors) != ladder:
        raise LadderError("decomposition failure: composing the factors does not recover the ladder")


def factorization_roundtrip_check(factors) -> bool:
    """Whether decompose(compose(factors)) returns exactly the given factors."""
    factors = list(factors)
    for f in factors:
        require_analyzable(f)
        if coincidental_corners(f):
            raise LadderError("round-trip factors must be free of coincidental corners")
    result = decompose(compose(factors))
    return list(result.factors) == factors
