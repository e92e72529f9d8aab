from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from macstab.linalg import Matrix, extend_to_basis, unit_vec


def test_rank_and_rref_agree_small():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    red, pivots = m.rref()
    assert len(pivots) == 2


def test_rank_empty_shapes():
    assert Matrix(0, 5).rank() == 0
    assert Matrix(5, 0).rank() == 0
    assert Matrix(0, 0).rank() == 0
    assert Matrix(0, 3).nullspace() == [unit_vec(3, i) for i in range(3)]
    assert Matrix(3, 0).nullspace() == []


def test_nullspace_is_kernel():
    m = Matrix.from_rows([[1, 1, 0], [0, 1, 1]])
    basis = m.nullspace()
    assert len(basis) == 1
    assert all(x == 0 for x in m.mul_vec(basis[0]))


def test_solve_consistent_and_inconsistent():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    x = m.solve([5, 11])
    assert m.mul_vec(x) == (Fraction(5), Fraction(11))
    singular = Matrix.from_rows([[1, 1], [1, 1]])
    assert singular.solve([0, 1]) is None


def test_extend_to_basis_skips_dependent():
    base = [(Fraction(1), Fraction(0), Fraction(0))]
    cands = [
        (Fraction(2), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(1), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(5)),
    ]
    chosen = extend_to_basis(base, cands)
    assert chosen == [cands[1], cands[3]]


def test_rational_entries_survive():
    m = Matrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 6)]])
    assert m.rank() == 1


@given(
    st.lists(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=3, max_size=3),
        min_size=1,
        max_size=4,
    )
)
def test_rank_matches_rref_pivot_count(rows):
    m = Matrix.from_rows(rows)
    _, pivots = m.rref()
    assert m.rank() == len(pivots)


@given(
    st.lists(
        st.lists(st.integers(min_value=-4, max_value=4), min_size=4, max_size=4),
        min_size=2,
        max_size=4,
    )
)
def test_nullspace_dimension_theorem(rows):
    m = Matrix.from_rows(rows)
    assert m.rank() + len(m.nullspace()) == m.cols


def test_trace_requires_square():
    with pytest.raises(ValueError):
        Matrix(2, 3).trace()
