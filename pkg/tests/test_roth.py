import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilfactor.errors import DivisionByZero, SingularMatrix
from nilfactor.field import GF, QQ
from nilfactor.matrix import Matrix, basis_vector, block_assemble, matrix_unit
from nilfactor.roth import (
    block_diagonalizes,
    roth_transform,
    solve_roth_e11case,
    solve_roth_j2case,
    solve_sylvester_generic,
)
from nilfactor.sampling import random_invertible

A0_J2 = lambda f: Matrix(f, [[0, 1], [0, 0]])


def test_generic_examples():
    f = QQ
    sol = solve_sylvester_generic(Matrix.zeros(f, 2), Matrix.identity(f, 2), Matrix.zeros(f, 2))
    assert sol.X.is_zero()
    I = Matrix.identity(f, 2)
    assert solve_sylvester_generic(I, I, I) is None


def test_j2_examples():
    f = QQ
    X = solve_roth_j2case(Matrix.identity(f, 2)).X
    assert X == Matrix.from_columns(f, [(0, 0), basis_vector(f, 2, 1)])
    X = solve_roth_j2case(Matrix.diag(f, [2, 3])).X
    assert X.column(1) == (0, Fraction(1, 3))
    with pytest.raises(SingularMatrix):
        solve_roth_j2case(Matrix.zeros(f, 2))


def test_j2_matches_generic_gf7():
    f = GF(7)
    A1 = random_invertible(f, 4, random.Random(4))
    B = matrix_unit(f, 4, 3, 1, ncols=2).scale(-1)
    X = solve_roth_j2case(A1).X
    assert solve_sylvester_generic(A0_J2(f), A1, B).X == X


def test_e11_examples():
    assert solve_roth_e11case(QQ.scalar(1), 2, 3).X == Matrix.zeros(QQ, 2, 3).with_entries({(0, 0): -1})
    assert solve_roth_e11case(QQ.scalar(2), 1, 3).X[0, 0] == Fraction(-1, 2)
    with pytest.raises(DivisionByZero):
        solve_roth_e11case(GF(5).scalar(0), 1, 3)


def test_transform_shape():
    f = QQ
    X = Matrix(f, [[1, 2]])
    R = roth_transform(X)
    assert R == block_assemble([[Matrix.identity(f, 2), Matrix.zeros(f, 2, 1)], [X, Matrix.identity(f, 1)]])
    assert R.inverse() == roth_transform(X.scale(-1))


@given(st.sampled_from([QQ, GF(3), GF(5), GF(7)]), st.integers(1, 5), st.integers(0, 2**32))
def test_j2_case_against_oracle(f, k, seed):
    A1 = random_invertible(f, k, random.Random(seed))
    B = matrix_unit(f, k, k - 1, 1, ncols=2).scale(-1)
    X = solve_roth_j2case(A1).X
    assert X @ A0_J2(f) - A1 @ X == B
    assert solve_sylvester_generic(A0_J2(f), A1, B).X == X
    assert block_diagonalizes(A0_J2(f), A1, B, X)


def test_roth_suite_passes():
    from nilfactor.suites import roth_suite

    report = roth_suite(count=40, seed=3)
    assert report.passed, report.failures
