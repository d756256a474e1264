"""Product components of (P^2)^d and the truncated point schemes V_d, W_d.

Two independent constructions of V_d are provided:

* :func:`build_scheme` maps the length-d paths of a quiver to products of
  points and lines and keeps the maximal ones;
* :func:`oracle_extend` grows V_{d-1} to V_d using only the successor loci
  computed from the relations (kernels of M(p)), never the quiver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .geometry import (
    LA, LB, LC, PA, PB, PC, WHOLE_PLANE, Factor, GenericPoint, LinearForm, ProjPoint,
    factor_contains, factor_dim, factor_key, factor_meet, param_point,
)
from .quiver import Quiver, QuiverPath, enumerate_paths
from .relations import (
    QuadraticRelationSet, default_relations, factor_check, generic_successor,
    multilinearize, successor_locus,
)
from .scalars import MPoly


@dataclass(frozen=True)
class ComponentProduct:
    factors: tuple[Factor, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a component needs at least one factor")

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    @property
    def dim(self) -> int:
        return sum(factor_dim(f) for f in self.factors)

    @property
    def n_lines(self) -> int:
        return sum(1 for f in self.factors if isinstance(f, LinearForm))

    def key(self) -> tuple:
        return tuple(factor_key(f) for f in self.factors)

    def label(self) -> str:
        return " x ".join(f.label() for f in self.factors)

    def __str__(self) -> str:
        return self.label()

    def __lt__(self, other: "ComponentProduct") -> bool:
        return self.key() < other.key()


def component(*factors: Factor) -> ComponentProduct:
    return ComponentProduct(tuple(factors))


def path_to_component(path: QuiverPath) -> ComponentProduct:
    return ComponentProduct(tuple(v.factor() for v in path))


def _check_lengths(C: ComponentProduct, D: ComponentProduct) -> None:
    if len(C) != len(D):
        raise ValueError(f"length mismatch: {len(C)} vs {len(D)}")


def contains(C: ComponentProduct, D: ComponentProduct) -> bool:
    """True iff D is a subset of C, factor by factor."""
    _check_lengths(C, D)
    return all(factor_contains(c, d) for c, d in zip(C.factors, D.factors))


def intersect(C: ComponentProduct, D: ComponentProduct) -> ComponentProduct | None:
    _check_lengths(C, D)
    out = []
    for c, d in zip(C.factors, D.factors):
        m = factor_meet(c, d)
        if m is None:
            return None
        out.append(m)
    return ComponentProduct(tuple(out))


def absorb(components: Iterable[ComponentProduct]) -> list[ComponentProduct]:
    """Keep the maximal components (antichain under containment), sorted."""
    unique = sorted(set(components), key=lambda c: (-c.dim, c.key()))
    kept: list[ComponentProduct] = []
    for c in unique:
        if not any(k.dim > c.dim and contains(k, c) for k in kept):
            kept.append(c)
    return sorted(kept, key=ComponentProduct.key)


class SchemeUnion:
    """A union of irreducible product components of common length."""

    def __init__(self, components: Iterable[ComponentProduct]):
        comps = absorb(components)
        if comps and len({len(c) for c in comps}) != 1:
            raise ValueError("components must share a common length")
        self.components: tuple[ComponentProduct, ...] = tuple(comps)

    @property
    def length(self) -> int:
        return len(self.components[0]) if self.components else 0

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchemeUnion):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"SchemeUnion({len(self)} components of length {self.length})"

    def covers(self, C: ComponentProduct) -> bool:
        """True iff C lies inside some component."""
        return any(contains(D, C) for D in self.components)

    def is_subset_of(self, other: "SchemeUnion") -> bool:
        return all(other.covers(C) for C in self.components)

    def labels(self) -> list[str]:
        return [c.label() for c in self.components]


def plane_scheme() -> SchemeUnion:
    return SchemeUnion([component(WHOLE_PLANE)])


def build_scheme(G: Quiver, d: int) -> SchemeUnion:
    """Union of the components read off the length-d paths of G."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if d == 1:
        return plane_scheme()
    return SchemeUnion(path_to_component(p) for p in enumerate_paths(G, d))


def _factor_coordinates(f: Factor, var: int | None, nvars: int):
    """Coordinates of a point or of the generic point ``q0 + s_var*q1`` as MPolys."""
    if isinstance(f, ProjPoint):
        return tuple(MPoly.const(nvars, c) for c in f.coords)
    q0, q1 = param_point(f)
    s = MPoly.var(nvars, var)
    return tuple(MPoly.const(nvars, a) + s * b for a, b in zip(q0.coords, q1.coords))


def verify_vanishing(C: ComponentProduct, R: QuadraticRelationSet | None = None) -> bool:
    """Do all multilinearized relations vanish identically on C?

    Each line factor gets its own parameter; the forms are expanded as
    multivariate polynomials and tested for being zero. Being multilinear, a
    form vanishing identically on ``q0 + s*q1`` also vanishes at ``q1``.
    """
    R = R or default_relations()
    if len(C) == 1:
        return True
    if any(f is WHOLE_PLANE for f in C.factors):
        raise ValueError("whole-plane factors only occur for d = 1")
    nvars = max(C.n_lines, 1)
    coords = []
    var = 0
    for f in C.factors:
        if isinstance(f, LinearForm):
            coords.append(_factor_coordinates(f, var, nvars))
            var += 1
        else:
            coords.append(_factor_coordinates(f, None, nvars))
    for form in multilinearize(R, len(C)):
        if not form(coords).is_zero():
            return False
    return True


def _extend_component(
    C: ComponentProduct, R: QuadraticRelationSet, cache: dict
) -> list[ComponentProduct]:
    last = C.factors[-1]
    prefix = C.factors[:-1]
    out: list[ComponentProduct] = []

    def locus(p: ProjPoint):
        if p not in cache:
            cache[p] = successor_locus(R, p)
        return cache[p]

    def line_split(line: LinearForm):
        key = ("line", line)
        if key not in cache:
            gs = generic_successor(R, GenericPoint.on(line))
            cache[key] = gs
        return cache[key]

    if isinstance(last, ProjPoint):
        nxt = locus(last)
        if nxt is not None:
            out.append(ComponentProduct(prefix + (last, nxt)))
    elif isinstance(last, LinearForm):
        gs = line_split(last)
        if gs.locus is not None:
            out.append(ComponentProduct(prefix + (last, gs.locus)))
        for p in gs.exceptional:
            nxt = locus(p)
            if nxt is not None:
                out.append(ComponentProduct(prefix + (p, nxt)))
    else:
        # successor is empty off det M = 0, i.e. off the three factor lines
        fc = factor_check(R)
        if not fc.ok:
            raise ValueError("det M does not split into the three expected lines")
        for line in fc.factors:
            out.extend(_extend_component(ComponentProduct(prefix + (line,)), R, cache))
    return out


def oracle_extend(S: SchemeUnion, R: QuadraticRelationSet | None = None) -> SchemeUnion:
    """V_d from V_{d-1} using successor loci only."""
    R = R or default_relations()
    cache: dict = {}
    new: list[ComponentProduct] = []
    for C in S.components:
        new.extend(_extend_component(C, R, cache))
    return SchemeUnion(new)


def oracle_scheme(d: int, R: QuadraticRelationSet | None = None) -> SchemeUnion:
    S = plane_scheme()
    for _ in range(d - 1):
        S = oracle_extend(S, R)
    return S


def parse_component(labels: Sequence[str]) -> ComponentProduct:
    """Build a component from named labels such as ``["PA1", "pa", "pb"]``."""
    table = {"PA1": LA, "PB1": LB, "PC1": LC, "pa": PA, "pb": PB, "pc": PC, "P2": WHOLE_PLANE}
    try:
        return ComponentProduct(tuple(table[s.strip()] for s in labels))
    except KeyError as exc:
        raise ValueError(f"unknown factor label {exc.args[0]!r}") from None
