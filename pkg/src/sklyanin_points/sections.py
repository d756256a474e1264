"""Global sections of O(1,...,1) on unions of product components.

A section on a single component is recorded by its values on a grid: for each
factor the point itself, or the two marked points of a line. Multidegree
(1,...,1) sections on a product of lines and points are determined by these
2^(#lines) values (multilinear interpolation), evaluated at the fixed
normalized representatives of the marked points.

On a union, H^0 is the space of per-component sections that agree on every
pairwise intersection (the equalizer). Since intersections of the components
that occur here are again products of special points and named lines, every
grid tuple of an intersection is a grid tuple of both components and the
gluing constraints are ``value_C(t) - value_D(t) = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from . import linalg
from .geometry import (
    PA, PB, PC, WHOLE_PLANE, LinearForm, ProjPoint, factor_key, param_point,
)
from .quiver import build_q, build_qprime
from .scalars import Eis
from .schemes import ComponentProduct, SchemeUnion, absorb, build_scheme, contains, intersect

GridTuple = tuple[ProjPoint, ...]

# three non-collinear points; their values determine a linear form on P^2
PLANE_GRID = (PA, PB, PC)


def factor_grid(f) -> tuple[ProjPoint, ...]:
    if f is WHOLE_PLANE:
        return PLANE_GRID
    if isinstance(f, LinearForm):
        return param_point(f)
    return (f,)


def grid(C: ComponentProduct) -> list[GridTuple]:
    return list(product(*(factor_grid(f) for f in C.factors)))


def gamma_dim(C: ComponentProduct) -> int:
    """dim H^0(C, O(1,...,1)) = 2^(#lines), or 3 for the plane P^2."""
    if any(f is WHOLE_PLANE for f in C.factors):
        if len(C) != 1:
            raise ValueError("whole-plane factors only occur for d = 1")
        return 3
    return 2 ** C.n_lines


@dataclass
class GluingSystem:
    components: tuple[ComponentProduct, ...]
    grids: list[list[GridTuple]]
    columns: dict[tuple[int, GridTuple], int]
    constraints: list[dict[int, int]] = field(default_factory=list)
    pairs: list[tuple[int, int, ComponentProduct]] = field(default_factory=list)

    @property
    def n_columns(self) -> int:
        return len(self.columns)

    def constraint_rank(self) -> int:
        return linalg.sparse_rank(self.constraints)

    def h0(self) -> int:
        return self.n_columns - self.constraint_rank()

    def kernel_basis(self) -> list[list[Eis]]:
        return linalg.sparse_nullspace(self.constraints, self.n_columns)

    def satisfies(self, vec: Sequence) -> bool:
        return all(
            not sum((vec[c] * v for c, v in row.items()), Eis(0)) for row in self.constraints
        )

    def column(self, comp_index: int, t: GridTuple) -> int:
        return self.columns[(comp_index, t)]


def gluing_system(components: Iterable[ComponentProduct]) -> GluingSystem:
    comps = tuple(components)
    grids = [grid(C) for C in comps]
    columns: dict[tuple[int, GridTuple], int] = {}
    for i, g in enumerate(grids):
        for t in g:
            columns[(i, t)] = len(columns)
    system = GluingSystem(comps, grids, columns)
    for i, j in combinations(range(len(comps)), 2):
        inter = intersect(comps[i], comps[j])
        if inter is None:
            continue
        system.pairs.append((i, j, inter))
        for t in grid(inter):
            ci, cj = columns.get((i, t)), columns.get((j, t))
            if ci is None or cj is None:
                raise AssertionError(
                    f"intersection {inter.label()} has grid point off the grids of "
                    f"{comps[i].label()} and {comps[j].label()}"
                )
            system.constraints.append({ci: 1, cj: -1})
    return system


def h0_union(S: SchemeUnion | Iterable[ComponentProduct]) -> int:
    comps = S.components if isinstance(S, SchemeUnion) else tuple(S)
    return gluing_system(comps).h0()


def scheme_V(d: int) -> SchemeUnion:
    return build_scheme(build_q(), d)


def scheme_W(d: int) -> SchemeUnion:
    return build_scheme(build_qprime(), d)


def dim_B(d: int) -> int:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    return h0_union(scheme_V(d))


def dim_P(d: int) -> int:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    return h0_union(scheme_W(d))


def intersection_census(
    A: SchemeUnion | Sequence[ComponentProduct],
    B: SchemeUnion | Sequence[ComponentProduct] | None = None,
) -> list[ComponentProduct]:
    """Maximal components of all nonempty pairwise intersections.

    With ``B`` omitted, intersections are taken between distinct components of
    ``A``; otherwise between a component of ``A`` and a different one of ``B``.
    """
    a = list(A.components if isinstance(A, SchemeUnion) else A)
    if B is None:
        pairs = combinations(a, 2)
    else:
        b = list(B.components if isinstance(B, SchemeUnion) else B)
        pairs = ((c, d) for c in a for d in b if c != d)
    found = []
    for c, d in pairs:
        inter = intersect(c, d)
        if inter is not None:
            found.append(inter)
    return absorb(found)


# ---------------------------------------------------------------------------
# restriction from ambient multilinear forms


def _special_dual_coords(p: ProjPoint) -> tuple:
    """Coordinates of ``p`` in the basis (PA, PB, PC) of k^3."""
    cols = [PA.coords, PB.coords, PC.coords]
    aug = [[cols[j][i] for j in range(3)] + [p.coords[i]] for i in range(3)]
    red, pivots = linalg.rref(aug, 4)
    if pivots != [0, 1, 2]:
        raise AssertionError("special points are not a basis")
    return tuple(_int_if_possible(row[3]) for row in red)


def _int_if_possible(v):
    if isinstance(v, Eis) and v.ze == 0 and v.re.denominator == 1:
        return int(v.re)
    return v


def _evaluation_rows(points: Iterable[GridTuple], coords_of) -> list[dict]:
    cache: dict[ProjPoint, tuple] = {}
    rows = []
    for t in points:
        row: dict[int, object] = {0: 1}
        for p in t:
            if p not in cache:
                cache[p] = coords_of(p)
            cp = cache[p]
            nxt: dict[int, object] = {}
            for col, val in row.items():
                for k, c in enumerate(cp):
                    if c:
                        nxt[3 * col + k] = val * c
            row = nxt
        rows.append({c: _int_if_possible(v) for c, v in row.items()})
    return rows


def ambient_image_dim(S: SchemeUnion, basis: str = "special") -> int:
    """Rank of the restriction of the 3^d multilinear forms to the union.

    A multidegree (1,...,1) form is determined on a component by its grid
    values, so the image dimension is the rank of the evaluation matrix on the
    union of the grids. ``basis="monomial"`` evaluates the monomials
    u_1...u_d directly; ``basis="special"`` uses the basis of linear forms
    dual to (PA, PB, PC) on every factor, an invertible change of coordinates
    (same rank) under which special points evaluate to unit vectors.
    """
    points = sorted({t for C in S.components for t in grid(C)},
                    key=lambda t: tuple(factor_key(p) for p in t))
    if basis == "special":
        rows = _evaluation_rows(points, _special_dual_coords)
    elif basis == "monomial":
        rows = _evaluation_rows(points, lambda p: tuple(_int_if_possible(c) for c in p.coords))
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return linalg.sparse_rank(rows)


# ---------------------------------------------------------------------------
# the degree-4 computation: X_{4,1} = W_4, X_{4,2} = the rest of V_4


@dataclass
class ClaimReport:
    x41: list[ComponentProduct]
    x42: list[ComponentProduct]
    h0_x41: int
    h0_x42: int
    lines: list[ComponentProduct]
    special_points: list[ComponentProduct]
    theta_rank: int
    theta_domain: int
    h0_lines_formula: int
    h0_lines_direct: int
    tau_rank: int
    tau_domain: int
    tau_image_glued: bool
    planes_total_sections: int
    h0_v4_direct: int
    h0_v4_inclusion_exclusion: int
    incidence: dict[str, bool]
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems


def _containing(items: Sequence[ComponentProduct], C: ComponentProduct) -> list[int]:
    return [i for i, D in enumerate(items) if contains(D, C)]


def claim_checks(d: int = 4) -> ClaimReport:
    """Verify the section-count bookkeeping for V_d = X_{d,1} u X_{d,2}.

    X_{d,1} is W_d and X_{d,2} the remaining components of V_d. Checks the
    surjectivity of theta (sections on the disjoint intersection lines ->
    values at the points where they meet) and of tau (sections on X_{d,1} and
    X_{d,2} -> glued sections on their intersection), plus the incidence facts
    used to prove them.
    """
    V, W = scheme_V(d), scheme_W(d)
    problems: list[str] = []
    x41 = list(W.components)
    for C in x41:
        if C not in V.components:
            problems.append(f"W component {C.label()} is not a component of V")
    x42 = [C for C in V.components if C not in x41]
    sys41, sys42 = gluing_system(x41), gluing_system(x42)
    h41, h42 = sys41.h0(), sys42.h0()

    lines = intersection_census(x41, x42)
    points = intersection_census(lines)
    line_sys = gluing_system(lines)

    # theta: (s_L)_L -> (s_L1(v) - s_L2(v))_v for the two lines through v
    theta_rows = []
    for v in points:
        through = _containing(lines, v)
        if len(through) != 2:
            problems.append(f"point {v.label()} lies on {len(through)} intersection lines")
            continue
        i, j = through
        t = tuple(v.factors)
        theta_rows.append({line_sys.column(i, t): 1, line_sys.column(j, t): -1})
    theta_rank = linalg.sparse_rank(theta_rows)
    if theta_rank != len(points):
        problems.append(f"theta has rank {theta_rank}, expected {len(points)}")
    h_lines_formula = line_sys.n_columns - theta_rank
    h_lines_direct = line_sys.h0()

    # tau: (s_1, s_2) -> s_1|_lines - s_2|_lines
    home41 = [(_containing(x41, L) or [None])[0] for L in lines]
    home42 = [(_containing(x42, L) or [None])[0] for L in lines]
    for L, a, b in zip(lines, home41, home42):
        if a is None or b is None:
            problems.append(f"intersection line {L.label()} is not in both pieces")
    images = []
    if not any(h is None for h in home41 + home42):
        for sys_, homes, sign in ((sys41, home41, 1), (sys42, home42, -1)):
            for vec in sys_.kernel_basis():
                img = [Eis(0)] * line_sys.n_columns
                for li, home in enumerate(homes):
                    for t in line_sys.grids[li]:
                        img[line_sys.column(li, t)] = vec[sys_.column(home, t)] * sign
                images.append(img)
    tau_rank = linalg.rank(images) if images else 0
    tau_glued = all(line_sys.satisfies(img) for img in images)
    if not tau_glued:
        problems.append("tau image leaves the glued section space of the intersection")
    if tau_rank != h_lines_direct:
        problems.append(f"tau has rank {tau_rank}, glued target has dimension {h_lines_direct}")

    planes = x41 + x42
    incidence = {
        "each point of S on exactly two lines": all(
            len(_containing(lines, v)) == 2 for v in points),
        "each line contains exactly one point of S": all(
            sum(contains(L, v) for v in points) == 1 for L in lines),
        "each plane contains exactly two lines": all(
            sum(contains(P, L) for L in lines) == 2 for P in planes),
        "each line lies in exactly two planes": all(
            len(_containing(planes, L)) == 2 for L in lines),
    }
    for name, ok in incidence.items():
        if not ok:
            problems.append(f"incidence check failed: {name}")

    direct = h0_union(V)
    incl_excl = h41 + h42 - h_lines_direct
    if direct != incl_excl:
        problems.append(f"direct h0 {direct} != inclusion-exclusion {incl_excl}")

    return ClaimReport(
        x41=x41, x42=x42, h0_x41=h41, h0_x42=h42, lines=lines, special_points=points,
        theta_rank=theta_rank, theta_domain=line_sys.n_columns,
        h0_lines_formula=h_lines_formula, h0_lines_direct=h_lines_direct,
        tau_rank=tau_rank, tau_domain=h41 + h42, tau_image_glued=tau_glued,
        planes_total_sections=sum(gamma_dim(P) for P in planes),
        h0_v4_direct=direct, h0_v4_inclusion_exclusion=incl_excl,
        incidence=incidence, problems=problems,
    )
