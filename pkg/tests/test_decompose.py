import json
import random

import pytest

from ladderdet import (
    Cell,
    Ladder,
    LadderError,
    coincidental_corners,
    compose,
    corners,
    decompose,
    factorization_roundtrip_check,
    validate,
)

from helpers import random_staircase_cells


def random_corner_free_factor(rng, max_m=6, max_n=6):
    while True:
        ladder = Ladder(random_staircase_cells(rng, max_m, max_n))
        if validate(ladder).two_connected and not coincidental_corners(ladder):
            return ladder


def test_decompose_l3(l3):
    f = decompose(l3)
    assert f.w == 1
    assert f.factors == (Ladder.full_matrix(3, 2), Ladder.full_matrix(3, 2))
    assert f.coincidental == (Cell(3, 2),)
    assert f.offsets == ((0, 1), (2, 0))


def test_decompose_without_coincidental_corner(l1):
    f = decompose(l1)
    assert f.w == 0
    assert f.factors == (l1,)
    assert f.offsets == ((0, 0),)


def test_decompose_four_factors(l1, l2):
    half = Ladder.full_matrix(3, 2)
    composite = compose([l1, l2, half, half])
    f = decompose(composite)
    assert f.w == 3
    assert f.factors == (l1, l2, half, half)


def test_decompose_rejects_non_two_connected():
    with pytest.raises(LadderError, match="2-connected"):
        decompose(Ladder.full_matrix(1, 4))


def test_roundtrip_check_examples(l1, l2):
    half = Ladder.full_matrix(3, 2)
    assert factorization_roundtrip_check([half, half])
    assert factorization_roundtrip_check([l1])
    assert factorization_roundtrip_check([l1, l2, half, half])


def test_roundtrip_check_rejects_coincidental_factor(l3):
    with pytest.raises(LadderError, match="coincidental"):
        factorization_roundtrip_check([l3])


def test_decompose_compose_roundtrip_randomized():
    rng = random.Random(17)
    for _ in range(30):
        factors = [random_corner_free_factor(rng) for _ in range(rng.randint(1, 4))]
        assert factorization_roundtrip_check(factors)


def test_factor_invariants_randomized():
    rng = random.Random(23)
    for _ in range(25):
        factors = [random_corner_free_factor(rng, 5, 5) for _ in range(rng.randint(2, 4))]
        composite = compose(factors)
        f = decompose(composite)
        assert len(f.factors) == f.w + 1
        prof = corners(composite)
        assert sum(p.h for p in f.per_factor_corners) + f.w == prof.h
        assert sum(p.k for p in f.per_factor_corners) + f.w == prof.k
        translated = set()
        for factor, (dr, dc) in zip(f.factors, f.offsets):
            assert validate(factor).two_connected
            assert not coincidental_corners(factor)
            translated |= {Cell(p.row + dr, p.col + dc) for p in factor.cells}
        assert translated == set(composite.cells)
        assert compose(f.factors) == composite


def test_factorization_json(l3):
    doc = decompose(l3).to_json_dict()
    assert doc["coincidental"] == [[3, 2]]
    assert doc["offsets"] == [[0, 1], [2, 0]]
    assert [len(f["cells"]) for f in doc["factors"]] == [6, 6]
    json.dumps(doc)  # serializable
