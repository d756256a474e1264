from itertools import product

import pytest
import sympy

from sklyanin_points.hilbert import MAX_DEGREE, dim_S, ideal_rows
from sklyanin_points.relations import default_relations
from sklyanin_points.scalars import ZETA

R = default_relations()
RELS = [{"yz": 1, "zy": 1, "xx": 1}, {"zx": 1, "xz": 1, "yy": 1}, {"xy": 1, "yx": 1, "zz": 1}]


def word_oracle(d):
    """3^d minus the rank of u*r*v, built from word strings and ranked by sympy."""
    words = ["".join(w) for w in product("xyz", repeat=d)]
    col = {w: i for i, w in enumerate(words)}
    rows = []
    for i in range(d - 1):
        for u in product("xyz", repeat=i):
            for v in product("xyz", repeat=d - 2 - i):
                for rel in RELS:
                    row = [0] * len(words)
                    for mid, c in rel.items():
                        row[col["".join(u) + mid + "".join(v)]] += c
                    rows.append(row)
    rank = sympy.Matrix(rows).rank() if rows else 0
    return 3 ** d - rank


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_against_word_oracle(d):
    assert dim_S(d) == word_oracle(d)


def test_values():
    assert [dim_S(d) for d in range(7)] == [1, 3, 6, 12, 24, 48, 96]


@pytest.mark.parametrize("d", range(2, 7))
def test_column_order_invariance(d):
    assert dim_S(d, reverse=True) == dim_S(d)


@pytest.mark.parametrize("d", range(2, 6))
def test_scaling_invariance(d):
    assert dim_S(d, R.scaled(ZETA)) == dim_S(d)


@pytest.mark.parametrize("d", range(1, 7))
def test_growth_bound(d):
    assert dim_S(d) <= 3 * dim_S(d - 1)


def test_row_count():
    assert len(ideal_rows(R, 4)) == 3 * 3 * 9


def test_cost_bound():
    with pytest.raises(ValueError):
        dim_S(MAX_DEGREE + 1)
    with pytest.raises(ValueError):
        dim_S(-1)
