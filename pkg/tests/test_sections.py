from itertools import product

import pytest

from sklyanin_points.geometry import LA, LB, LC, PA, PB, PC, LinearForm, incident
from sklyanin_points.schemes import SchemeUnion, component
from sklyanin_points.sections import (
    ambient_image_dim, claim_checks, dim_B, dim_P, gamma_dim, gluing_system, grid, h0_union,
    intersection_census, scheme_V, scheme_W,
)

from golden import LINES4, POINTS4, X41, X42


def _point_in(C, t):
    return all(incident(f, p) if isinstance(f, LinearForm) else f == p for f, p in zip(C, t))


def union_find_h0(components):
    """Count classes of (component, grid point) identified when the point lies in both."""
    comps = list(components)
    nodes = [(i, t) for i, C in enumerate(comps) for t in grid(C)]
    parent = {n: n for n in nodes}

    def find(n):
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    index = {n: True for n in nodes}
    for i, t in nodes:
        for j, D in enumerate(comps):
            if j != i and _point_in(D, t) and (j, t) in index:
                parent[find((i, t))] = find((j, t))
    return len({find(n) for n in nodes})


def test_gamma_dim():
    assert gamma_dim(component(LA, PA)) == 2
    assert gamma_dim(component(LA, PA, LA, PA)) == 4
    assert gamma_dim(component(PA, PB)) == 1


def test_h0_small_unions():
    assert h0_union([component(LA, PA)]) == 2
    assert h0_union([component(LA, PA), component(PB, LB)]) == 3
    assert h0_union([component(LA, PA), component(PA, LB)]) == 4


@pytest.mark.parametrize("d", range(1, 7))
def test_h0_matches_union_find(d):
    for S in (scheme_V(d), scheme_W(d)):
        if d == 1:
            continue
        assert h0_union(S) == union_find_h0(S)


def test_dim_values():
    assert [dim_B(d) for d in range(0, 5)] == [1, 3, 6, 12, 24]
    assert [dim_P(d) for d in range(0, 5)] == [1, 3, 6, 12, 18]
    with pytest.raises(ValueError):
        dim_B(-1)


def test_kernel_basis_glues():
    system = gluing_system(scheme_V(4))
    basis = system.kernel_basis()
    assert len(basis) == system.h0() == 24
    assert all(system.satisfies(v) for v in basis)


def test_census_d4():
    assert set(intersection_census(sorted(X41), sorted(X42))) == LINES4
    assert set(intersection_census(sorted(LINES4))) == POINTS4


def test_claims_d4():
    rep = claim_checks(4)
    assert rep.ok, rep.problems
    assert set(rep.x41) == X41 and set(rep.x42) == X42
    assert (rep.h0_x41, rep.h0_x42) == (18, 24)
    assert (rep.theta_rank, rep.theta_domain) == (6, 24)
    assert rep.h0_lines_formula == rep.h0_lines_direct == 18
    assert (rep.tau_rank, rep.tau_domain) == (18, 42)
    assert rep.planes_total_sections == 48
    assert rep.h0_v4_direct == rep.h0_v4_inclusion_exclusion == 24
    assert all(rep.incidence.values())


@pytest.mark.parametrize("d", range(1, 5))
def test_ambient_bases_agree(d):
    for S in (scheme_V(d), scheme_W(d)):
        assert ambient_image_dim(S, "special") == ambient_image_dim(S, "monomial")


@pytest.mark.parametrize("d", range(1, 6))
def test_image_rank_bounded(d):
    for S in (scheme_V(d), scheme_W(d)):
        r = ambient_image_dim(S)
        assert r <= h0_union(S) and r <= 3 ** d


def test_ambient_rejects_basis():
    with pytest.raises(ValueError):
        ambient_image_dim(scheme_V(2), "other")


def test_monotone_in_components():
    # adding components never lowers the section count
    comps = sorted(X41 | X42)
    prev = 0
    for k in range(1, len(comps) + 1):
        h = h0_union(SchemeUnion(comps[:k]))
        assert h >= prev
        prev = h
