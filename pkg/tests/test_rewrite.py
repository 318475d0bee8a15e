import itertools
import random

import pytest

from ladderdet import (
    Cell,
    Ladder,
    LadderError,
    Monomial,
    P,
    Q,
    RewriteSystem,
    certify_confluence,
    compose,
    equal_mod_minors,
    ideal_generators,
    ideal_monomials_bounded,
    intersect_bounded,
    is_normal,
    normal_form,
    normal_monomials,
    reachable_normal_forms,
    verify_witnesses,
)

from helpers import random_staircase_cells


def mono(*cells):
    return Monomial.from_cells(cells)


# ---------------------------------------------------------------------------
# monomials

def test_monomial_basics():
    m = Monomial({Cell(1, 2): 2, Cell(3, 3): 1})
    assert m.degree == 3
    assert m.exponent((1, 2)) == 2 and m.exponent((5, 5)) == 0
    assert str(m) == "x(1,2)^2*x(3,3)"
    assert str(Monomial.unit()) == "1"
    assert m * Monomial.unit() == m
    assert mono((1, 2)) * mono((1, 2)) == Monomial({Cell(1, 2): 2})


def test_monomial_json_roundtrip():
    m = Monomial({Cell(1, 2): 2, Cell(3, 3): 1})
    assert Monomial.from_json_dict(m.to_json_dict()) == m
    assert m.to_json_dict() == {"exps": [[1, 2, 2], [3, 3, 1]]}
    with pytest.raises(LadderError):
        Monomial.from_json_dict({"exps": [[1, 2]]})


def test_monomial_rejects_negative_exponents():
    with pytest.raises(LadderError):
        Monomial({Cell(1, 1): -1})


# ---------------------------------------------------------------------------
# rewrite system and normal forms

def test_rules_of_l3(l3):
    rules = RewriteSystem(l3).rules
    assert (Cell(1, 2), Cell(2, 3)) in rules
    assert (Cell(1, 2), Cell(3, 3)) in rules
    assert (Cell(3, 1), Cell(4, 2)) in rules
    # (2,1) is missing from L3, so no rule pairs rows 2 and 5 on columns 1,2
    assert (Cell(2, 2), Cell(5, 1)) not in rules
    assert all(a.row < b.row and a.col < b.col for a, b in rules)


def test_normal_form_single_step(l3):
    s = RewriteSystem(l3)
    assert normal_form(mono((1, 2), (3, 3)), s) == mono((1, 3), (3, 2))


def test_normal_form_no_applicable_rule(l3):
    s = RewriteSystem(l3)
    m = mono((2, 2), (5, 1))
    assert normal_form(m, s) == m
    assert is_normal(m, s)


def test_normal_form_unit(l3):
    s = RewriteSystem(l3)
    assert normal_form(Monomial.unit(), s) == Monomial.unit()


def test_normal_form_rejects_unsupported_cells(l3):
    with pytest.raises(LadderError, match="outside the ladder"):
        normal_form(mono((1, 1)), RewriteSystem(l3))


def test_equal_mod_minors(l3):
    s = RewriteSystem(l3)
    assert equal_mod_minors(mono((1, 2), (2, 3)), mono((1, 3), (2, 2)), s)
    m = mono((1, 2), (5, 1), (3, 3))
    assert equal_mod_minors(m, m, s)
    assert not equal_mod_minors(mono((1, 2), (5, 1)), mono((1, 3), (5, 1)), s)


def test_degree_preserved_randomized():
    rng = random.Random(61)
    for _ in range(40):
        ladder = Ladder(random_staircase_cells(rng, 6, 6))
        s = RewriteSystem(ladder)
        cells = ladder.sorted_cells()
        m = Monomial.from_cells(rng.choices(cells, k=rng.randint(1, 6)))
        assert normal_form(m, s).degree == m.degree


def test_normal_form_is_reachable_and_unique_small():
    rng = random.Random(67)
    for _ in range(25):
        ladder = Ladder(random_staircase_cells(rng, 5, 5))
        s = RewriteSystem(ladder)
        cells = ladder.sorted_cells()
        m = Monomial.from_cells(rng.choices(cells, k=3))
        outcomes = reachable_normal_forms(m, s)
        assert outcomes == frozenset({normal_form(m, s)})


def test_certify_confluence_counts(l3):
    s = RewriteSystem(l3)
    n_cells = len(l3)
    expected = sum(
        len(list(itertools.combinations_with_replacement(range(n_cells), d))) for d in (2, 3)
    )
    assert certify_confluence(s, max_degree=3) == expected


def test_equivalence_classes_partition_bidirectional_closure():
    # classes by normal form must equal connected components under single
    # rewrites used in both directions
    ladder = Ladder.full_matrix(3, 3)
    s = RewriteSystem(ladder)
    cells = ladder.sorted_cells()
    monos = [Monomial.from_cells(c) for c in itertools.combinations_with_replacement(cells, 2)]
    by_nf = {}
    for m in monos:
        by_nf.setdefault(normal_form(m, s), set()).add(m)

    def step(m, remove, add):
        stepped = dict(m.items())
        for c in remove:
            stepped[c] = stepped.get(c, 0) - 1
        for c in add:
            stepped[c] = stepped.get(c, 0) + 1
        if any(v < 0 for v in stepped.values()):
            return None
        return Monomial(stepped)

    def neighbors(m):
        ms = []
        for a, b in itertools.combinations(m.support, 2):
            if s.has_rule(a, b):  # forward: diagonal to antidiagonal
                ms.append(step(m, (a, b), (Cell(a.row, b.col), Cell(b.row, a.col))))
            elif a.row < b.row and a.col > b.col:  # backward over the same minor
                u, v = Cell(a.row, b.col), Cell(b.row, a.col)
                if s.has_rule(u, v):
                    ms.append(step(m, (a, b), (u, v)))
        return [m2 for m2 in ms if m2 is not None]

    for m in monos:
        component = {m}
        frontier = [m]
        while frontier:
            cur = frontier.pop()
            for nxt in neighbors(cur):
                if nxt not in component:
                    component.add(nxt)
                    frontier.append(nxt)
        assert component == by_nf[normal_form(m, s)]


# ---------------------------------------------------------------------------
# bounded ideal operations

def test_normal_monomials_degree_one(l3):
    s = RewriteSystem(l3)
    assert len(normal_monomials(s, 1)) == len(l3)
    assert normal_monomials(s, 0) == [Monomial.unit()]


def test_ideal_monomials_degree_one_slice(l3):
    s = RewriteSystem(l3)
    assert ideal_monomials_bounded({(1, 2), (1, 3)}, 1, s) == {mono((1, 2)), mono((1, 3))}


def test_ideal_monomials_empty_gens(l3):
    assert ideal_monomials_bounded(set(), 3, RewriteSystem(l3)) == frozenset()


def test_ideal_monomials_monotone(l3):
    s = RewriteSystem(l3)
    small = ideal_monomials_bounded({(3, 1)}, 2, s)
    assert small <= ideal_monomials_bounded({(3, 1)}, 3, s)
    assert small <= ideal_monomials_bounded({(3, 1), (1, 2)}, 2, s)


def test_ideal_monomials_bounds_checked(l3):
    s = RewriteSystem(l3)
    with pytest.raises(LadderError):
        ideal_monomials_bounded({(1, 2)}, 0, s)
    with pytest.raises(LadderError):
        ideal_monomials_bounded({(1, 2)}, 9, s)
    with pytest.raises(LadderError):
        ideal_monomials_bounded({(1, 1)}, 2, s)


def test_intersect_worked_example(l3):
    s = RewriteSystem(l3)
    q11 = ideal_generators(l3, Q(2))
    p10 = ideal_generators(l3, P(1))
    assert intersect_bounded(q11, p10, 2, s) == {mono((3, 1)), mono((3, 2))}


def test_intersect_contains_all_bounded_multiples(l3):
    s = RewriteSystem(l3)
    q11 = ideal_generators(l3, Q(2))
    p10 = ideal_generators(l3, P(1))
    common = ideal_monomials_bounded(q11, 2, s) & ideal_monomials_bounded(p10, 2, s)
    for g in ((3, 1), (3, 2)):
        assert mono(g) in common
        for c in l3.sorted_cells():
            assert normal_form(mono(g, c), s) in common


def test_intersect_identical_gens(l3):
    s = RewriteSystem(l3)
    assert intersect_bounded({(1, 2)}, {(1, 2)}, 2, s) == {mono((1, 2))}


def test_intersect_disjoint_gens(l3):
    s = RewriteSystem(l3)
    assert intersect_bounded({(1, 2)}, {(3, 3)}, 2, s) == {mono((1, 3), (3, 2))}


# ---------------------------------------------------------------------------
# witness identities

def test_witness_equal_sign_on_l3(l3):
    report = verify_witnesses(l3)
    assert (report.lam_top, report.lam_bottom) == (1, 1)
    assert report.cases == (("equal-sign", True),)
    assert not report.vacuous


def test_witness_opposite_sign():
    ladder = compose([Ladder.full_matrix(2, 3), Ladder.full_matrix(3, 2)])
    report = verify_witnesses(ladder)
    assert (report.lam_top, report.lam_bottom) == (-1, 1)
    assert [c.name for c in report.cases] == ["opposite-sign"]
    assert all(c.holds for c in report.cases)


def test_witness_larger_lambda():
    # 5x3 # 4x2: lam_top = 5-3 = 2 and lam_bottom = 4-2 = 2
    ladder = compose([Ladder.full_matrix(5, 3), Ladder.full_matrix(4, 2)])
    report = verify_witnesses(ladder)
    assert (report.lam_top, report.lam_bottom) == (2, 2)
    assert [(c.name, c.holds) for c in report.cases] == [("equal-sign", True)]


def test_witness_vacuous_when_one_factor_square():
    ladder = compose([Ladder.full_matrix(2, 2), Ladder.full_matrix(3, 2)])
    report = verify_witnesses(ladder)
    assert report.vacuous
    assert (report.lam_top, report.lam_bottom) == (0, 1)


def test_witness_shape_errors(l1, l3):
    with pytest.raises(LadderError, match="exactly one coincidental"):
        verify_witnesses(l1)
    with pytest.raises(LadderError, match="full-matrix"):
        verify_witnesses(compose([l1, Ladder.full_matrix(3, 2)]))
    with pytest.raises(LadderError, match="exactly one coincidental"):
        verify_witnesses(compose([l3, Ladder.full_matrix(3, 2)]))


def test_witness_json(l3):
    doc = verify_witnesses(l3).to_json_dict()
    assert doc == {
        "corner": [3, 2],
        "lambda_top": 1,
        "lambda_bottom": 1,
        "cases": [{"name": "equal-sign", "holds": True}],
        "vacuous": False,
    }
