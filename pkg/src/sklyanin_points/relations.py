"""Quadratic relations of S(1,1,1) and the successor analysis they induce.

For a relation ``r = sum c[u][v] u*v`` the multilinearization on consecutive
coordinates is the bilinear form ``r(p, q) = sum c[u][v] p_u q_v``. Freezing the
first argument at ``p`` gives the 3x3 successor matrix ``M(p)`` (rows f, g, h;
columns x, y, z of the next coordinate). Its projectivized kernel is the set
of admissible next points; ``det M(p)`` is a cubic whose zero set is where the
successor is nonempty.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence, Union

from . import linalg
from .geometry import (
    LA, LB, LC, PA, PB, PC, SPECIAL_LINES, WHOLE_PLANE, Factor, GenericPoint,
    LinearForm, ProjPoint,
)
from .scalars import ZERO, Eis, MPoly, ParamPoly, poly_gcd

GENERATORS = ("x", "y", "z")
RELATION_NAMES = ("f", "g", "h")

Matrix3 = tuple[tuple[Eis, Eis, Eis], tuple[Eis, Eis, Eis], tuple[Eis, Eis, Eis]]


@dataclass(frozen=True)
class QuadraticRelationSet:
    """Three quadratic relations; ``matrices[r][u][v]`` is the coefficient of u*v."""

    matrices: tuple[Matrix3, Matrix3, Matrix3]

    def __post_init__(self):
        if len(self.matrices) != 3:
            raise ValueError("exactly three relations are required")
        norm = tuple(
            tuple(tuple(Eis.coerce(c) for c in row) for row in m) for m in self.matrices
        )
        for m in norm:
            if len(m) != 3 or any(len(row) != 3 for row in m):
                raise ValueError("relation matrices must be 3x3")
            if not any(c for row in m for c in row):
                raise ValueError("relation matrices must be nonzero")
        object.__setattr__(self, "matrices", norm)

    def coeff(self, r: int, u: int, v: int) -> Eis:
        return self.matrices[r][u][v]

    def scaled(self, c) -> "QuadraticRelationSet":
        c = Eis.coerce(c)
        return QuadraticRelationSet(
            tuple(tuple(tuple(x * c for x in row) for row in m) for m in self.matrices)
        )

    def is_rational(self) -> bool:
        return all(c.is_rational() for m in self.matrices for row in m for c in row)

    def terms(self, r: int) -> list[tuple[int, int, Eis]]:
        m = self.matrices[r]
        return [(u, v, m[u][v]) for u in range(3) for v in range(3) if m[u][v]]

    def to_json(self) -> dict:
        return {
            name: [[str(c) for c in row] for row in m]
            for name, m in zip(RELATION_NAMES, self.matrices)
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuadraticRelationSet":
        return cls(tuple(
            tuple(tuple(Eis.parse(str(c)) for c in row) for row in data[name])
            for name in RELATION_NAMES
        ))

    @classmethod
    def load(cls, path: str | Path) -> "QuadraticRelationSet":
        return cls.from_json(json.loads(Path(path).read_text()))

    def __str__(self) -> str:
        parts = []
        for name, m in zip(RELATION_NAMES, self.matrices):
            mono = [
                ("" if m[u][v] == 1 else f"({m[u][v]})*") + f"{GENERATORS[u]}*{GENERATORS[v]}"
                for u in range(3) for v in range(3) if m[u][v]
            ]
            parts.append(f"{name} = " + " + ".join(mono))
        return "; ".join(parts)


def _matrix(entries: dict[tuple[int, int], int]) -> Matrix3:
    return tuple(tuple(Eis(entries.get((u, v), 0)) for v in range(3)) for u in range(3))


def default_relations() -> QuadraticRelationSet:
    """f = yz + zy + x^2, g = zx + xz + y^2, h = xy + yx + z^2."""
    x, y, z = 0, 1, 2
    return QuadraticRelationSet((
        _matrix({(y, z): 1, (z, y): 1, (x, x): 1}),
        _matrix({(z, x): 1, (x, z): 1, (y, y): 1}),
        _matrix({(x, y): 1, (y, x): 1, (z, z): 1}),
    ))


PointLike = Union[ProjPoint, GenericPoint, Sequence]


def _coords(p: PointLike):
    if isinstance(p, (ProjPoint, GenericPoint)):
        return p.coords
    return tuple(p)


def successor_matrix(R: QuadraticRelationSet, p: PointLike) -> tuple:
    """``M(p)[r][v] = sum_u c_r[u][v] * p_u``.

    Entries are Eisenstein scalars for a concrete point and ParamPoly for a
    generic point of a line (or whatever ring the raw coordinates live in).
    """
    pc = _coords(p)
    rows = []
    for m in R.matrices:
        row = []
        for v in range(3):
            acc = None
            for u in range(3):
                c = m[u][v]
                if not c:
                    continue
                term = pc[u] * c
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else pc[0] * ZERO)
        rows.append(tuple(row))
    return tuple(rows)


def apply_matrix(M, q: Sequence) -> tuple:
    return tuple(row[0] * q[0] + row[1] * q[1] + row[2] * q[2] for row in M)


def bilinear(R: QuadraticRelationSet, r: int, p: Sequence, q: Sequence):
    """Value of relation ``r`` multilinearized at ``(p, q)``."""
    acc = ZERO
    for u, v, c in R.terms(r):
        acc = acc + c * p[u] * q[v]
    return acc


def _locus_from_kernel(M) -> Factor | None:
    kernel = linalg.nullspace([list(row) for row in M], 3)
    if len(kernel) == 0:
        return None
    if len(kernel) == 1:
        return ProjPoint(tuple(kernel[0]))
    if len(kernel) == 2:
        return LinearForm(linalg.cross(kernel[0], kernel[1]))
    return WHOLE_PLANE


def successor_locus(R: QuadraticRelationSet, p: ProjPoint | GenericPoint) -> Factor | None:
    """Projectivized kernel of ``M(p)``.

    Returns None (empty), a ProjPoint (rank 2), a LinearForm (rank 1) or
    WHOLE_PLANE (rank 0). For a :class:`GenericPoint` the kernel is computed over
    Q(zeta)(t) and must be independent of t; a ValueError is raised otherwise.
    """
    if isinstance(p, GenericPoint):
        return generic_successor(R, p).locus
    return _locus_from_kernel(successor_matrix(R, p))


def successor_rank(R: QuadraticRelationSet, p: ProjPoint) -> int:
    return linalg.rank([list(row) for row in successor_matrix(R, p)])


@dataclass(frozen=True)
class GenericSuccessor:
    """Kernel analysis of M along a line, parametrized by ``q0 + t*q1``."""

    point: GenericPoint
    rank: int
    locus: Factor | None
    exceptional: tuple[ProjPoint, ...] = field(default=())


def _constant_direction(vec: Sequence[ParamPoly]) -> tuple[Eis, Eis, Eis] | None:
    """If ``vec(t)`` is a polynomial multiple of a constant vector, return it."""
    if all(c.is_zero() for c in vec):
        return None
    # pick t0 with vec(t0) != 0, then test vec(t) x vec(t0) == 0 identically
    for t0 in range(max(c.degree for c in vec) + 1):
        val = tuple(c(t0) for c in vec)
        if any(val):
            break
    const = tuple(ParamPoly.const(v) for v in val)
    if all(c.is_zero() for c in linalg.cross(vec, const)):
        return val
    return None


def generic_successor(R: QuadraticRelationSet, g: GenericPoint) -> GenericSuccessor:
    """Successor of the generic point of a line, plus the points where it jumps.

    The rank over Q(zeta)(t) is read from the polynomial minors. The exceptional
    set (points of the line of smaller rank) is found from the gcd of the
    minors of the generic rank; roots other than ``t = 0`` (the point ``q0``)
    are not expected for named lines and raise ValueError.
    """
    M = successor_matrix(R, g)
    det = linalg.det3(M)
    minors = linalg.minors2(M)
    if not det.is_zero():
        rank, locus, witnesses = 3, None, [det]
    elif any(not m.is_zero() for m in minors):
        rank = 2
        # kernel vector: cross product of two rows with a nonzero minor
        vec = None
        for r1 in range(3):
            for r2 in range(r1 + 1, 3):
                cand = linalg.cross(M[r1], M[r2])
                if any(not c.is_zero() for c in cand):
                    vec = cand
                    break
            if vec is not None:
                break
        direction = _constant_direction(vec)
        if direction is None:
            raise ValueError(f"successor of generic point of {g.line.label()} varies with t")
        locus = ProjPoint(direction)
        witnesses = [m for m in minors if not m.is_zero()]
    elif any(not e.is_zero() for row in M for e in row):
        rank = 1
        row = next(r for r in M if any(not e.is_zero() for e in r))
        direction = _constant_direction(row)
        if direction is None:
            raise ValueError(f"successor line of generic point of {g.line.label()} varies with t")
        locus = LinearForm(direction)
        witnesses = [e for r in M for e in r if not e.is_zero()]
    else:
        return GenericSuccessor(g, 0, WHOLE_PLANE, ())

    exceptional: list[ProjPoint] = []
    common = poly_gcd(witnesses)
    if common.degree > 0:
        t = ParamPoly.t()
        rest = common
        while not rest.is_zero() and rest.degree > 0 and rest(0) == 0:
            rest = rest.divmod(t)[0]
        if rest.degree > 0:
            raise ValueError(
                f"unexpected rank drop on {g.line.label()} at roots of {rest}"
            )
        if common(0) == 0:
            exceptional.append(g.q0)
    # the point t = infinity is q1
    if linalg.rank([list(r) for r in successor_matrix(R, g.q1)]) < rank:
        exceptional.append(g.q1)
    return GenericSuccessor(g, rank, locus, tuple(exceptional))


def det_cubic(R: QuadraticRelationSet) -> MPoly:
    """``det M(p)`` as a cubic form in (x, y, z)."""
    xyz = tuple(MPoly.var(3, i) for i in range(3))
    return linalg.det3(successor_matrix(R, xyz))


def linear_mpoly(line: LinearForm) -> MPoly:
    return sum((MPoly.var(3, i) * c for i, c in enumerate(line.coeffs)), MPoly(3))


@dataclass(frozen=True)
class CubicFactorization:
    cubic: MPoly
    factors: tuple[LinearForm, ...]
    constant: Eis | None
    ok: bool


def factor_check(R: QuadraticRelationSet | None = None) -> CubicFactorization:
    """Check ``det M = c * L_A * L_B * L_C`` for a nonzero constant c."""
    R = R or default_relations()
    cubic = det_cubic(R)
    product = linear_mpoly(LA) * linear_mpoly(LB) * linear_mpoly(LC)
    constant = None
    ok = False
    if not cubic.is_zero():
        exp, c = next(iter(product.terms.items()))
        constant = cubic.coefficient(exp) / c
        ok = bool(constant) and cubic == product * constant
    return CubicFactorization(cubic, SPECIAL_LINES, constant if ok else None, ok)


@dataclass(frozen=True)
class MultilinearForm:
    """Relation ``relation`` applied to coordinates ``slot`` and ``slot + 1`` (0-based)."""

    relation: int
    slot: int
    coefficients: dict

    @property
    def name(self) -> str:
        return f"{RELATION_NAMES[self.relation]}_{self.slot + 1}"

    def __call__(self, points: Sequence[Sequence]):
        p, q = points[self.slot], points[self.slot + 1]
        acc = None
        for (u, v), c in self.coefficients.items():
            if not c:
                continue
            term = p[u] * q[v] * c
            acc = term if acc is None else acc + term
        return acc if acc is not None else ZERO


def multilinearize(R: QuadraticRelationSet, d: int) -> list[MultilinearForm]:
    """The 3(d-1) forms f_i, g_i, h_i on (P^2)^d, ordered by slot then relation."""
    if d < 2:
        raise ValueError("multilinearization needs d >= 2")
    forms = []
    for i in range(d - 1):
        for r in range(3):
            coeffs = {(u, v): R.coeff(r, u, v) for u in range(3) for v in range(3)}
            forms.append(MultilinearForm(r, i, coeffs))
    return forms


@dataclass
class RelationReport:
    ok: bool
    checks: list[tuple[str, bool, str]]

    def failures(self) -> list[str]:
        return [name for name, passed, _ in self.checks if not passed]


def check_relations(R: QuadraticRelationSet) -> RelationReport:
    """Run the three gates tying relation coefficients to the expected geometry."""
    checks: list[tuple[str, bool, str]] = []
    fc = factor_check(R)
    checks.append(("det_cubic factors as c*L_A*L_B*L_C", fc.ok,
                   f"det = {fc.cubic.format(GENERATORS)}"))
    for p, line in ((PA, LA), (PB, LB), (PC, LC)):
        locus = successor_locus(R, p)
        got = locus.label() if hasattr(locus, "label") else "empty"
        checks.append((f"successor({p.label()}) = {line.label()}", locus == line, f"got {got}"))
    for line, p in ((LA, PA), (LB, PB), (LC, PC)):
        g = GenericPoint.on(line)
        try:
            gs = generic_successor(R, g)
            ok = gs.rank == 2 and gs.locus == p and set(gs.exceptional) == set(
                q for q in (PA, PB, PC) if q != p)
            detail = (f"rank {gs.rank}, locus "
                      f"{gs.locus.label() if hasattr(gs.locus, 'label') else 'empty'}, "
                      f"exceptional {[q.label() for q in gs.exceptional]}")
        except ValueError as exc:
            ok, detail = False, str(exc)
        checks.append((f"successor(generic {line.label()}) = {p.label()}", ok, detail))
    return RelationReport(all(ok for _, ok, _ in checks), checks)


def validate_relations(R: QuadraticRelationSet) -> bool:
    return check_relations(R).ok


__all__ = [
    "QuadraticRelationSet", "default_relations", "successor_matrix", "successor_locus",
    "successor_rank", "generic_successor", "GenericSuccessor", "det_cubic",
    "factor_check", "CubicFactorization", "multilinearize", "MultilinearForm",
    "validate_relations", "check_relations", "bilinear", "apply_matrix",
]
