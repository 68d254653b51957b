# coding=utf-8
"""
Unit tests for exact linear algebra
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies

from koszulkit.linalg import (
    ONE,
    EchelonBasis,
    Matrix,
    Subspace,
    annihilator,
    block_diagonal,
    dot,
    gf_rank,
    gf_rref,
    hstack,
    kernel_basis,
    rank,
    rref,
    solve,
    vec_add,
    vstack,
)

small_ints = strategies.integers(min_value=-3, max_value=3)

#: Six properties below; together they draw a little over ten thousand matrices.
PROPERTY_SETTINGS = settings(max_examples=1700, deadline=None)


@strategies.composite
def matrices(draw, max_rows=5, max_cols=5):
    rows = draw(strategies.integers(min_value=1, max_value=max_rows))
    cols = draw(strategies.integers(min_value=1, max_value=max_cols))
    row = strategies.lists(small_ints, min_size=cols, max_size=cols)
    entries = draw(strategies.lists(row, min_size=rows, max_size=rows))
    return Matrix.from_rows(entries)


class TestMatrix(object):
    def test_from_rows_accepts_rational_strings(self):
        m = Matrix.from_rows([["1/2", 0], [3, "-2/3"]])
        assert m[0, 0] == Fraction(1, 2)
        assert m[1, 1] == Fraction(-2, 3)
        assert m.row(0) == {0: Fraction(1, 2)}

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            Matrix.from_rows([[1, 2], [3]])

    def test_product_shape_mismatch(self):
        with pytest.raises(ValueError):
            Matrix.identity(2) * Matrix.identity(3)

    def test_product(self):
        a = Matrix.from_rows([[1, 2], [0, 1]])
        b = Matrix.from_rows([[0, 1], [1, 0]])
        assert (a * b).to_rows() == [[2, 1], [1, 0]]

    def test_apply_matches_column(self):
        m = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert m.apply({1: ONE}) == m.column(1) == {0: 2, 1: 5}

    def test_from_columns(self):
        m = Matrix.from_columns([{0: ONE}, {}, {1: Fraction(2)}], 2)
        assert m.shape == (2, 3)
        assert m.to_rows() == [[1, 0, 0], [0, 0, 2]]

    def test_scale_and_subtract(self):
        m = Matrix.from_rows([[1, -1], [2, 0]])
        assert (m.scale(2) - m - m).is_zero()

    @PROPERTY_SETTINGS
    @given(matrices())
    def test_transpose_twice(self, m):
        assert m.transpose().transpose() == m

    def test_stacking(self):
        a = Matrix.identity(2)
        b = Matrix.from_rows([[5], [7]])
        assert hstack([a, b], 2).to_rows() == [[1, 0, 5], [0, 1, 7]]
        assert vstack([a, Matrix.from_rows([[1, 1]])], 2).shape == (3, 2)
        assert hstack([], 3).shape == (3, 0)
        assert block_diagonal([a, b]).to_rows() == [[1, 0, 0], [0, 1, 0], [0, 0, 5], [0, 0, 7]]


class TestReduction(object):
    def test_rref_example(self):
        reduced, pivots = rref(Matrix.from_rows([[1, 2], [2, 4]]))
        assert pivots == [0]
        assert reduced.to_rows() == [[1, 2], [0, 0]]

    @PROPERTY_SETTINGS
    @given(matrices())
    def test_rank_nullity(self, m):
        assert rank(m) + kernel_basis(m).dim == m.cols

    @PROPERTY_SETTINGS
    @given(matrices())
    def test_kernel_is_killed(self, m):
        for v in kernel_basis(m).vectors():
            assert not m.apply(v)

    @PROPERTY_SETTINGS
    @given(matrices())
    def test_rref_is_idempotent(self, m):
        reduced, pivots = rref(m)
        again, pivots_again = rref(reduced)
        assert again == reduced
        assert pivots_again == pivots

    @PROPERTY_SETTINGS
    @given(matrices(), strategies.lists(small_ints, min_size=5, max_size=5))
    def test_solve_reaches_image(self, m, coeffs):
        x = {j: Fraction(c) for j, c in enumerate(coeffs[: m.cols]) if c}
        b = m.apply(x)
        found = solve(m, b)
        assert found is not None
        assert m.apply(found) == b

    def test_solve_inconsistent(self):
        m = Matrix.from_rows([[1, 1], [2, 2]])
        assert solve(m, [1, 0]) is None
        with pytest.raises(ValueError):
            solve(m, [1])


class TestSubspace(object):
    def test_canonical_equality(self):
        a = Subspace(3, [{0: ONE, 1: ONE}, {1: ONE}])
        b = Subspace(3, [{0: ONE}, {1: Fraction(3)}])
        assert a == b
        assert a != Subspace(3, [{0: ONE}])
        assert a.free_coordinates == [2]

    def test_quotient_coordinates(self):
        s = Subspace(3, [{0: ONE, 1: ONE}])
        assert s.free_coordinates == [1, 2]
        assert s.quotient_coordinates({0: ONE}) == {0: -ONE}
        assert s.quotient_coordinates({0: ONE, 1: ONE}) == {}

    def test_sum_and_inclusion(self):
        a = Subspace(3, [{0: ONE}])
        b = Subspace(3, [{2: ONE}])
        total = a + b
        assert total.dim == 2
        assert a.is_subspace_of(total)
        assert not total.is_subspace_of(a)

    @PROPERTY_SETTINGS
    @given(matrices())
    def test_annihilator_twice(self, m):
        s = Subspace(m.cols, [m.row(i) for i in range(m.rows)])
        dual = annihilator(s)
        assert dual.dim == s.ambient_dim - s.dim
        assert annihilator(dual) == s
        for phi in dual.vectors():
            for v in s.vectors():
                assert dot(phi, v) == 0

    def test_echelon_growth(self):
        basis = EchelonBasis(2)
        assert basis.add({0: Fraction(2)})
        assert not basis.add({0: ONE})
        assert basis.add({0: ONE, 1: ONE})
        assert len(basis) == 2
        assert basis.contains({1: Fraction(5)})


class TestSparseVectors(object):
    def test_vec_add_drops_zeros(self):
        assert vec_add({0: ONE, 1: ONE}, {0: ONE}, -ONE) == {1: ONE}


class TestPrimeFields(object):
    @pytest.mark.parametrize(
        "rows,p,expected",
        [
            ([[1, 1], [1, 1]], 2, 1),
            ([[1, 1], [1, 3]], 2, 1),
            ([[1, 1], [1, 3]], 3, 2),
            ([[2, 4], [1, 2]], 7, 1),
            ([], 5, 0),
        ],
        ids=["equal rows", "char 2 collapse", "char 3 full", "multiple", "empty"],
    )
    def test_gf_rank(self, rows, p, expected):
        assert gf_rank(rows, p) == expected

    def test_gf_rref_pivots(self):
        mat, pivots = gf_rref([[0, 2, 1], [0, 1, 1]], 3)
        assert pivots == (1, 2)
        assert mat.tolist() == [[0, 1, 0], [0, 0, 1]]

    def test_unsupported_prime(self):
        with pytest.raises(ValueError):
            gf_rank([[1]], 11)
