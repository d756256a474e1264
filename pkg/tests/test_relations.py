import json
import random

import pytest
from hypothesis import given, settings

from sklyanin_points.geometry import (
    LA, LB, LC, PA, PB, PC, WHOLE_PLANE, GenericPoint, LinearForm, ProjPoint, incident,
)
from sklyanin_points.linalg import det3
from sklyanin_points.relations import (
    QuadraticRelationSet, apply_matrix, bilinear, check_relations, default_relations,
    det_cubic, factor_check, generic_successor, multilinearize, successor_locus,
    successor_matrix, successor_rank, validate_relations,
)
from sklyanin_points.scalars import ZERO, ZETA, ZETA2, EisensteinScalar as Eis, MPoly

from conftest import eisenstein

R = default_relations()


def as_int_matrix(M):
    return [[int(e.re) if e.is_rational() else e for e in row] for row in M]


def test_default_coefficients():
    assert R.terms(0) == [(0, 0, Eis(1)), (1, 2, Eis(1)), (2, 1, Eis(1))]
    assert str(R) == "f = x*x + y*z + z*y; g = x*z + y*y + z*x; h = x*y + y*x + z*z"


def test_successor_matrix_at_pa():
    M = successor_matrix(R, PA)
    assert all(e == 1 for row in M for e in row)


def test_successor_matrix_example():
    M = successor_matrix(R, ProjPoint.of(0, 1, -1))
    assert as_int_matrix(M) == [[0, -1, 1], [-1, 1, 0], [1, 0, -1]]


@given(eisenstein(nonzero=True), eisenstein(), eisenstein())
def test_successor_matrix_is_linear(lam, a, b):
    raw = (Eis(1), a, b)
    M = successor_matrix(R, raw)
    Ml = successor_matrix(R, tuple(lam * c for c in raw))
    assert all(x * lam == y for r1, r2 in zip(M, Ml) for x, y in zip(r1, r2))


@pytest.mark.parametrize("p, expected", [(PA, LA), (PB, LB), (PC, LC)])
def test_special_point_successor_is_line(p, expected):
    assert successor_locus(R, p) == expected
    assert successor_rank(R, p) == 1


@pytest.mark.parametrize("line, expected", [(LA, PA), (LB, PB), (LC, PC)])
def test_generic_line_successor_is_point(line, expected):
    gs = generic_successor(R, GenericPoint.on(line))
    assert gs.rank == 2 and gs.locus == expected
    assert set(gs.exceptional) == {q for q in (PA, PB, PC) if q != expected}


def test_off_cubic_point_has_no_successor():
    p = ProjPoint.of(1, 2, 3)
    assert det3(successor_matrix(R, p)) == -18
    assert successor_locus(R, p) is None


def test_point_on_line_successor():
    # a non-special point of L_A maps to p_a
    q = ProjPoint.of(1, -1, 0)
    assert incident(LA, q)
    assert successor_locus(R, q) == PA


def test_det_cubic():
    x, y, z = (MPoly.var(3, i) for i in range(3))
    assert det_cubic(R) == -(x * x * x + y * y * y + z * z * z - x * y * z * 3)
    fc = factor_check(R)
    assert fc.ok and fc.constant == -1
    assert fc.factors == (LA, LB, LC)


def test_det_vanishes_exactly_on_lines():
    rng = random.Random(11)
    g = [GenericPoint.on(L) for L in (LA, LB, LC)]
    for _ in range(20):
        t = Eis(rng.randint(-9, 9), rng.randint(-9, 9))
        p = rng.choice(g).at(t)
        assert det3(successor_matrix(R, p)) == 0
    checked = 0
    while checked < 20:
        p = ProjPoint.of(1, rng.randint(-9, 9), Eis(rng.randint(-9, 9), rng.randint(-9, 9)))
        on = any(incident(L, p) for L in (LA, LB, LC))
        assert (det3(successor_matrix(R, p)) == 0) == on
        checked += 1


@given(eisenstein(), eisenstein(), eisenstein(), eisenstein())
@settings(max_examples=200)
def test_locus_membership_iff_forms_vanish(a, b, c, e):
    p, q = (Eis(1), a, b), (c, Eis(1), e)
    vanish = all(bilinear(R, r, p, q) == 0 for r in range(3))
    locus = successor_locus(R, ProjPoint(p))
    inside = locus is not None and (
        locus is WHOLE_PLANE
        or (isinstance(locus, ProjPoint) and locus == ProjPoint(q))
        or (isinstance(locus, LinearForm) and incident(locus, ProjPoint(q)))
    )
    assert vanish == inside
    assert apply_matrix(successor_matrix(R, p), q) == tuple(bilinear(R, r, p, q) for r in range(3))


def test_multilinearize():
    forms = multilinearize(R, 2)
    assert [f.name for f in forms] == ["f_1", "g_1", "h_1"]
    assert all(len(f.coefficients) == 9 for f in forms)
    assert forms[0]((PA.coords, PB.coords)) == ZERO
    assert len(multilinearize(R, 5)) == 12
    with pytest.raises(ValueError):
        multilinearize(R, 1)


def test_validate_default_and_scaled():
    assert validate_relations(R)
    assert validate_relations(R.scaled(ZETA))
    assert validate_relations(R.scaled(-3))


def _without_x_squared():
    data = R.to_json()
    data["f"][0][0] = "0"
    return QuadraticRelationSet.from_json(data)


def test_validate_rejects_corruption():
    bad = _without_x_squared()
    assert not validate_relations(bad)
    report = check_relations(bad)
    assert report.failures()[0].startswith("det_cubic")


def test_json_round_trip(tmp_path):
    path = tmp_path / "r.json"
    path.write_text(json.dumps(R.scaled(ZETA2).to_json()))
    assert QuadraticRelationSet.load(path) == R.scaled(ZETA2)
