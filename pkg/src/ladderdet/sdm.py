"""Gorenstein testing and enumeration of semidualizing module classes.

The class set is the family of 0/1 combinations of the embedded factor
canonical classes, so its size is 2 to the number of non-Gorenstein factors
in the coincidental-corner decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classgroup import DivisorClass, canonical_class, embed_factor_omega
from .decompose import Factorization, decompose
from .ladders import Ladder, LadderError, compose, corners, require_analyzable


def is_gorenstein(ladder: Ladder) -> bool:
    """True iff m = n and every inside corner (r, s) satisfies r + s = m + 1."""
    require_analyzable(ladder)
    if ladder.m != ladder.n:
        return False
    prof = corners(ladder)
    target = ladder.m + 1
    return all(r + s == target for r, s in prof.lower + prof.upper)


@dataclass(frozen=True)
class FactorReport:
    m: int
    n: int
    gorenstein: bool
    epsilon: int
    omega_image: DivisorClass

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "gorenstein": self.gorenstein,
            "omega_image": self.omega_image.to_json_dict(),
        }


@dataclass(frozen=True)
class SdmReport:
    """Classification of the semidualizing module classes of one ladder."""

    rank: int
    omega: DivisorClass
    factors: tuple[FactorReport, ...]
    count: int
    classes: tuple[DivisorClass, ...]
    theta_vectors: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "omega": self.omega.to_json_dict(),
            "count": self.count,
            "factors": [f.to_json_dict() for f in self.factors],
            "classes": [c.to_json_dict() for c in self.classes],
            "thetas": [list(t) for t in self.theta_vectors],
        }


def classify(ladder: Ladder) -> SdmReport:
    """Decompose, test each factor, and enumerate all 0/1 sums of factor classes.

    Theta vectors are kept in lexicographic order, with the coordinate of a
    Gorenstein factor pinned to 0 (its class is the zero vector, so allowing
    1 there would only duplicate classes).
    """
    factorization = decompose(ladder)
    omega = canonical_class(ladder)
    prof = corners(ladder)
    rank = prof.h + prof.k + 1

    reports = []
    images = []
    for u, factor in enumerate(factorization.factors):
        gor = is_gorenstein(factor)
        image = embed_factor_omega(factorization, u)
        if gor != image.is_zero:
            raise LadderError(
                f"internal inconsistency: factor {u} Gorenstein test and canonical image disagree"
            )
        reports.append(FactorReport(factor.m, factor.n, gor, 0 if gor else 1, image))
        images.append(image)

    total = DivisorClass.zero(ladder)
    for image in images:
        total = total + image
    if total != omega:
        raise LadderError("internal inconsistency: factor images do not sum to the canonical class")

    count = 2 ** sum(r.epsilon for r in reports)
    thetas = []
    classes = []
    for theta in itertools.product((0, 1), repeat=len(images)):
        if any(t and reports[u].gorenstein for u, t in enumerate(theta)):
            continue
        acc = DivisorClass.zero(ladder)
        for u, t in enumerate(theta):
            if t:
                acc = acc + images[u]
        thetas.append(theta)
        classes.append(acc)
    if len(set(classes)) != count or len(classes) != count:
        raise LadderError("internal inconsistency: class enumeration does not match the expected count")

    return SdmReport(
        rank=rank,
        omega=omega,
        factors=tuple(reports),
        count=count,
        classes=tuple(classes),
        theta_vectors=tuple(thetas),
    )


def construct_2n(n: int, sizes) -> Ladder:
    """Compose n non-square full-matrix blocks, giving exactly 2**n classes.

    Each block must be m x n with m, n > 1 and m != n; a square block would
    be Gorenstein (trivial canonical class) and contribute no factor of 2.
    """
    sizes = list(sizes)
    if n < 1:
        raise LadderError("need at least one block; any Gorenstein ladder already gives a count of 1")
    if len(sizes) != n:
        raise LadderError(f"expected {n} block sizes, got {len(sizes)}")
    blocks = []
    for m_u, n_u in sizes:
        if m_u < 2 or n_u < 2:
            raise LadderError(f"block {m_u}x{n_u} too small: both sides must exceed 1")
        if m_u == n_u:
            raise LadderError(
                f"square block {m_u}x{n_u} rejected: a square matrix is Gorenstein (m = n), "
                "so it contributes no factor of 2"
            )
        blocks.append(Ladder.full_matrix(m_u, n_u))
    return compose(blocks)
