"""Points and lines of the projective plane over Q(zeta).

Points and lines are stored normalized (first nonzero coordinate equal to 1),
so projective equality is plain tuple equality. The three special points
``PA, PB, PC`` and the three lines ``LA, LB, LC`` of the cubic x^3+y^3+z^3-3xyz
are module constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .linalg import cross
from .scalars import ZETA, ZETA2, Eis, ParamPoly


def _normalize(raw: Sequence) -> tuple[Eis, Eis, Eis]:
    vals = tuple(Eis.coerce(v) for v in raw)
    if len(vals) != 3:
        raise ValueError("expected three coordinates")
    lead = next((v for v in vals if v), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    inv = lead.inverse()
    return tuple(v * inv for v in vals)  # type: ignore[return-value]


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[Eis, Eis, Eis]

    def __post_init__(self):
        object.__setattr__(self, "coords", _normalize(self.coords))

    @classmethod
    def of(cls, x, y, z) -> "ProjPoint":
        return cls((x, y, z))

    @property
    def name(self) -> str | None:
        return _POINT_NAMES.get(self)

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"

    def label(self) -> str:
        return self.name or str(self)


@dataclass(frozen=True)
class LinearForm:
    """The line ``a*x + b*y + c*z = 0``."""

    coeffs: tuple[Eis, Eis, Eis]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def of(cls, a, b, c) -> "LinearForm":
        return cls((a, b, c))

    @property
    def name(self) -> str | None:
        return _LINE_NAMES.get(self)

    def __call__(self, p: Sequence) -> Eis:
        a, b, c = self.coeffs
        return a * p[0] + b * p[1] + c * p[2]

    def __str__(self) -> str:
        a, b, c = self.coeffs
        head = "x" if a == 1 else f"({a})*x"
        return f"{head} + ({b})*y + ({c})*z = 0"

    def label(self) -> str:
        return self.name or str(self)


class WholePlane:
    """The factor P^2 itself (only occurs in V_1 = W_1)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    name = "P2"

    def label(self) -> str:
        return "P2"

    def __repr__(self) -> str:
        return "WholePlane()"

    def __reduce__(self):
        return (WholePlane, ())


WHOLE_PLANE = WholePlane()

Factor = Union[ProjPoint, LinearForm, WholePlane]

PA = ProjPoint.of(1, 1, 1)
PB = ProjPoint.of(1, ZETA, ZETA2)
PC = ProjPoint.of(1, ZETA2, ZETA)
LA = LinearForm.of(1, 1, 1)
LB = LinearForm.of(1, ZETA2, ZETA)
LC = LinearForm.of(1, ZETA, ZETA2)

SPECIAL_POINTS = (PA, PB, PC)
SPECIAL_LINES = (LA, LB, LC)

_POINT_NAMES = {PA: "pa", PB: "pb", PC: "pc"}
_LINE_NAMES = {LA: "PA1", LB: "PB1", LC: "PC1"}

# two marked points per named line: the special points lying on it
MARKED_POINTS = {LA: (PB, PC), LB: (PA, PC), LC: (PA, PB)}

# LineA < PtA < PtB < PtC < LineB < LineC
_NAMED_ORDER = {LA: 0, PA: 1, PB: 2, PC: 3, LB: 4, LC: 5}


def normalize_point(raw: Sequence) -> ProjPoint:
    return ProjPoint(tuple(raw))


def incident(line: LinearForm, p: ProjPoint) -> bool:
    return not line(p.coords)


def meet(line1: LinearForm, line2: LinearForm) -> ProjPoint:
    if line1 == line2:
        raise ValueError("meet of a line with itself is not a point")
    return ProjPoint(cross(line1.coeffs, line2.coeffs))


def join(p: ProjPoint, q: ProjPoint) -> LinearForm:
    if p == q:
        raise ValueError("join of a point with itself is not a line")
    return LinearForm(cross(p.coords, q.coords))


def param_point(line: LinearForm) -> tuple[ProjPoint, ProjPoint]:
    """Two distinct marked points ``(q0, q1)`` on ``line``.

    Named lines use their two special points; any other line uses two of its
    intersections with the coordinate lines.
    """
    if line in MARKED_POINTS:
        return MARKED_POINTS[line]
    found: list[ProjPoint] = []
    for axis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        ax = LinearForm.of(*axis)
        if ax == line:
            continue
        q = meet(line, ax)
        if q not in found:
            found.append(q)
        if len(found) == 2:
            break
    return found[0], found[1]


@dataclass(frozen=True)
class GenericPoint:
    """The point ``q0 + t*q1`` of a line, with ParamPoly coordinates."""

    line: LinearForm
    q0: ProjPoint
    q1: ProjPoint

    @classmethod
    def on(cls, line: LinearForm) -> "GenericPoint":
        q0, q1 = param_point(line)
        return cls(line, q0, q1)

    @property
    def coords(self) -> tuple[ParamPoly, ParamPoly, ParamPoly]:
        return tuple(ParamPoly([a, b]) for a, b in zip(self.q0.coords, self.q1.coords))  # type: ignore[return-value]

    def at(self, t) -> ProjPoint:
        return ProjPoint(tuple(c(t) for c in self.coords))


def factor_key(f: Factor) -> tuple:
    """Sort key: named objects first in the fixed vertex order."""
    if f is WHOLE_PLANE:
        return (9,)
    if f in _NAMED_ORDER:
        return (0, _NAMED_ORDER[f])
    kind = 1 if isinstance(f, ProjPoint) else 2
    vals = f.coords if isinstance(f, ProjPoint) else f.coeffs
    return (kind, tuple((v.re, v.ze) for v in vals))


def factor_label(f: Factor) -> str:
    return f.label()


def factor_dim(f: Factor) -> int:
    if f is WHOLE_PLANE:
        return 2
    return 1 if isinstance(f, LinearForm) else 0


def factor_contains(big: Factor, small: Factor) -> bool:
    if big is WHOLE_PLANE:
        return True
    if small is WHOLE_PLANE:
        return False
    if isinstance(big, ProjPoint):
        return small == big
    if isinstance(small, ProjPoint):
        return incident(big, small)
    return small == big


def factor_meet(f: Factor, g: Factor) -> Factor | None:
    """Set-theoretic intersection of two factors, or None if empty."""
    if f is WHOLE_PLANE:
        return g
    if g is WHOLE_PLANE:
        return f
    if isinstance(f, ProjPoint) and isinstance(g, ProjPoint):
        return f if f == g else None
    if isinstance(f, ProjPoint):
        return f if incident(g, f) else None
    if isinstance(g, ProjPoint):
        return g if incident(f, g) else None
    return f if f == g else meet(f, g)


def special_point_on(line: LinearForm) -> list[ProjPoint]:
    return [p for p in SPECIAL_POINTS if incident(line, p)]


__all__ = [
    "ProjPoint", "LinearForm", "WholePlane", "WHOLE_PLANE", "Factor", "GenericPoint",
    "PA", "PB", "PC", "LA", "LB", "LC", "SPECIAL_POINTS", "SPECIAL_LINES",
    "MARKED_POINTS", "normalize_point", "incident", "meet", "join", "param_point",
    "factor_key", "factor_label", "factor_dim", "factor_contains", "factor_meet",
    "special_point_on",
]
