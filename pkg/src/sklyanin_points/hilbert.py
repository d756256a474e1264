"""Graded dimensions of S(1,1,1) by linear algebra in the free algebra.

Words of length d in x < y < z are indexed base 3 (x = 0). The degree-d part of
the two-sided ideal is spanned by the words ``u * r * v`` with ``r`` a relation
and ``|u| + |v| = d - 2``; its rank is computed exactly.
"""

from __future__ import annotations

import logging

from .linalg import sparse_echelon
from .relations import QuadraticRelationSet, default_relations
from .scalars import Eis

log = logging.getLogger(__name__)

MAX_DEGREE = 8


def _coeff(c: Eis):
    if c.ze == 0 and c.re.denominator == 1:
        return int(c.re)
    return c


def ideal_rows(R: QuadraticRelationSet, d: int, reverse: bool = False) -> list[dict[int, object]]:
    """Sparse rows u*r*v in the word basis; ``reverse`` reverses the column order."""
    total = 3 ** d
    rows = []
    for i in range(d - 1):
        left = 3 ** i
        right = 3 ** (d - 2 - i)
        for r in range(3):
            terms = [(3 * u + v, _coeff(c)) for u, v, c in R.terms(r)]
            for a in range(left):
                for b in range(right):
                    row = {}
                    for mid, c in terms:
                        col = (a * 9 + mid) * right + b
                        if reverse:
                            col = total - 1 - col
                        row[col] = c
                    rows.append(row)
    return rows


def relation_span_rank(R: QuadraticRelationSet, d: int, reverse: bool = False) -> int:
    if d < 2:
        return 0
    return sparse_echelon(ideal_rows(R, d, reverse)).rank


def dim_S(d: int, R: QuadraticRelationSet | None = None, max_degree: int = MAX_DEGREE,
          reverse: bool = False) -> int:
    """dim S_d = 3^d - rank(span of u*r*v)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d > max_degree:
        raise ValueError(
            f"degree {d} exceeds the cost bound {max_degree} "
            f"(3^{d} = {3 ** d} columns); raise max_degree to force it"
        )
    if d == 0:
        return 1
    R = R or default_relations()
    rank = relation_span_rank(R, d, reverse)
    log.debug("dim_S(%d): rank %d of %d rows", d, rank, (d - 1) * 3 ** (d - 1))
    return 3 ** d - rank
