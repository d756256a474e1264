"""Exact rank and null space computations.

Two engines:

* :func:`sparse_rank` -- row-by-row sparse elimination. Integer matrices are
  reduced fraction-free (cross-multiplication followed by removal of the row
  content), so no rational arithmetic is ever needed. Rows with entries in
  Q(zeta) fall back to field elimination with monic pivot rows.
* :func:`nullspace` -- dense reduced row echelon form over Q or Q(zeta), used
  for the small matrices (3x3 successor matrices, local gluing systems).

Pivoting is deterministic: rows are consumed in the given order and each row
is keyed by its lowest nonzero column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .scalars import Eis

SparseRow = Mapping[int, object]


@dataclass
class EchelonBasis:
    """Incrementally built echelon form of a row space.

    ``pivots`` maps a pivot column to the stored row whose lowest column it is.
    ``pivot_sequence`` records ``(row_index, pivot_column)`` in insertion order.
    """

    pivots: dict[int, dict] = field(default_factory=dict)
    pivot_sequence: list[tuple[int, int]] = field(default_factory=list)
    _rows_seen: int = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: SparseRow) -> bool:
        """Insert ``row``; return True if it enlarged the row space."""
        index = self._rows_seen
        self._rows_seen += 1
        r = {c: v for c, v in row.items() if v}
        if not r:
            return False
        integral = all(isinstance(v, int) for v in r.values())
        if not integral:
            r = {c: Eis.coerce(_lift(v)) for c, v in r.items()}
        while r:
            col = min(r)
            piv = self.pivots.get(col)
            if piv is None:
                if integral:
                    r = _primitive(r, col)
                else:
                    inv = r[col].inverse()
                    r = {c: v * inv for c, v in r.items()}
                self.pivots[col] = r
                self.pivot_sequence.append((index, col))
                return True
            piv_integral = all(isinstance(v, int) for v in piv.values())
            if integral and piv_integral:
                r = _ff_reduce(r, piv, col)
            else:
                if integral:
                    r = {c: Eis(v) for c, v in r.items()}
                    integral = False
                r = _field_reduce(r, piv, col)
        return False


def _lift(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def _primitive(r: dict[int, int], lead: int) -> dict[int, int]:
    g = 0
    for v in r.values():
        g = gcd(g, v)
        if g == 1:
            break
    if r[lead] < 0:
        g = -g
    if g not in (0, 1):
        r = {c: v // g for c, v in r.items()}
    return r


def _ff_reduce(r: dict[int, int], piv: dict[int, int], col: int) -> dict[int, int]:
    a, b = r[col], piv[col]
    g = gcd(a, b)
    ma, mb = b // g, a // g
    out = {c: v * ma for c, v in r.items()} if ma != 1 else dict(r)
    for c, v in piv.items():
        nv = out.get(c, 0) - mb * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    if out:
        out = _primitive(out, min(out))
    return out


def _field_reduce(r: dict, piv: dict, col: int) -> dict:
    # pivot rows in the field path are monic
    a = Eis.coerce(r[col]) / Eis.coerce(piv[col])
    out = dict(r)
    for c, v in piv.items():
        nv = Eis.coerce(out.get(c, 0)) - a * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return basis.rank


def sparse_echelon(rows: Iterable[SparseRow]) -> EchelonBasis:
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return basis


def _field_elem(v):
    if isinstance(v, Eis):
        return v
    return Eis.coerce(Fraction(v) if not isinstance(v, Fraction) else v)


def rref(matrix: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Eis]], list[int]]:
    """Reduced row echelon form over Q(zeta); returns (rows, pivot columns)."""
    rows = [[_field_elem(v) for v in row] for row in matrix]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Eis]]:
    """Basis of {v : M v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0])
    if not matrix:
        return [[Eis(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(matrix, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Eis(0)] * ncols
        v[fcol] = Eis(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis


def sparse_nullspace(rows: Sequence[SparseRow], ncols: int) -> list[list[Eis]]:
    """Null space of a sparse matrix, computed via the dense routine."""
    dense = [[row.get(c, 0) for c in range(ncols)] for row in rows]
    return nullspace(dense, ncols)


def cross(u: Sequence, v: Sequence) -> tuple:
    """Cross product; works for any ring elements supporting * and -."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(m: Sequence[Sequence]):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def minors2(m: Sequence[Sequence]) -> list:
    """All nine 2x2 minors of a 3x3 matrix."""
    out = []
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            out.extend(cross(m[r1], m[r2]))
    return out
