import random

import pytest
from hypothesis import given, settings, strategies as st

from nilfactor.canonical import NilpotentPartition, fitting_split
from nilfactor.errors import DimensionMismatch, ExceptionalCase, NotSingular, UnsupportedSize
from nilfactor.factorizer import (
    Route,
    factor,
    factor_case_general,
    factor_case_j2,
    factor_case_zero_block,
    is_factorable,
)
from nilfactor.field import GF, QQ
from nilfactor.matrix import Matrix, block_diag, jordan_block
from nilfactor.sampling import random_invertible, random_singular, random_structured_singular


def assert_certified(A, fac):
    n = A.nrows
    assert fac.N1 @ fac.N2 == A
    assert (fac.N1**n).is_zero() and (fac.N2**n).is_zero()
    assert fac.certificate.ok


def test_one_by_one_zero():
    fac = factor(Matrix.zeros(QQ, 1))
    assert fac.N1.is_zero() and fac.N2.is_zero() and fac.route is Route.NILPOTENT


def test_zero_block_two_by_two():
    A = Matrix.diag(QQ, [0, 5])
    fac = factor(A)
    assert fac.route is Route.ZERO_BLOCK
    assert fac.N1 == Matrix(QQ, [[0, 0], [5, 0]])
    assert fac.N2 == Matrix(QQ, [[0, 1], [0, 0]])


def test_rejections():
    with pytest.raises(ExceptionalCase):
        factor(jordan_block(QQ, 2))
    with pytest.raises(NotSingular):
        factor(Matrix(QQ, [[1, 2], [3, 4]]))
    with pytest.raises(DimensionMismatch):
        factor(Matrix.zeros(QQ, 2, 3))
    assert not is_factorable(jordan_block(GF(3), 2))
    assert is_factorable(Matrix.zeros(GF(3), 2))
    assert not is_factorable(Matrix.identity(QQ, 3))


def test_zero_block_shifts():
    f = QQ
    c = factor_case_zero_block(1, Matrix(f, [[7]]))
    assert c.M1 == Matrix(f, [[0, 0], [7, 0]]) and c.M2 == Matrix(f, [[0, 1], [0, 0]])
    c = factor_case_zero_block(1, Matrix.diag(f, [2, 3]))
    assert c.M1.rank() == c.M2.rank() == 2
    c = factor_case_zero_block(2, Matrix.identity(f, 2))
    assert c.M1 @ c.M2 == block_diag(Matrix.zeros(f, 2), Matrix.identity(f, 2))
    assert c.M1.is_lower_triangular(strict=True) and c.M2.is_upper_triangular(strict=True)
    with pytest.raises(UnsupportedSize):
        factor_case_zero_block(0, Matrix(f, [[1]]))


def target(J, A1):
    return block_diag(J, A1)


def check_case(case, tgt):
    M1, M2, V, _ = case
    assert M1.is_nilpotent() and M2.is_nilpotent()
    assert M1 @ M2 == tgt.conjugate(V)


def test_j2_case():
    f = QQ
    A1 = Matrix(f, [[1]])
    case = factor_case_j2(A1)
    assert case.M1.nrows == 3
    check_case(case, target(jordan_block(f, 2), A1))
    case = factor_case_j2(Matrix.identity(f, 2))
    assert case.roth == Matrix(f, [[0, 0], [0, 1]])
    f = GF(7)
    A1 = random_invertible(f, 3, random.Random(1))
    check_case(factor_case_j2(A1), target(jordan_block(f, 2), A1))


def test_general_case_b_zero_and_nonzero():
    f = QQ
    A1 = Matrix(f, [[1]])
    case = factor_case_general(NilpotentPartition((3,)), A1)
    assert case.roth is None
    check_case(case, target(jordan_block(f, 3), A1))
    A1 = Matrix(f, [[2]])
    case = factor_case_general(NilpotentPartition((4,)), A1)
    assert case.roth is not None and case.roth[0, 0] == -1  # u11 = 1 in the unit-upper U
    check_case(case, target(jordan_block(f, 4), A1))
    f = GF(3)
    A1 = Matrix.identity(f, 2)
    check_case(factor_case_general(NilpotentPartition((1, 2)), A1), target(NilpotentPartition((2, 1)).jordan_matrix(f), A1))
    with pytest.raises(UnsupportedSize):
        factor_case_general(NilpotentPartition((2,)), A1)


@pytest.mark.parametrize(
    "A, route",
    [
        (jordan_block(QQ, 4), Route.NILPOTENT),
        (Matrix.diag(QQ, [0, 2, 3]), Route.ZERO_BLOCK),
        (Matrix.diag(QQ, [0, 0, 1, 1]), Route.ZERO_BLOCK),
        (Matrix.diag(QQ, [0, 0, 0, 4]), Route.ZERO_BLOCK),
        (block_diag(jordan_block(QQ, 2), Matrix(QQ, [[3]])), Route.J2),
        (block_diag(jordan_block(QQ, 3), Matrix(QQ, [[1]])), Route.GENERAL),
        (block_diag(jordan_block(QQ, 4), Matrix(QQ, [[2]])), Route.GENERAL),
        (block_diag(jordan_block(QQ, 2), jordan_block(QQ, 2), Matrix(QQ, [[2]])), Route.GENERAL),
    ],
)
def test_routes(A, route):
    fac = factor(A)
    assert fac.route is route
    assert_certified(A, fac)


def test_roth_flag_matches_last_row():
    no_b = factor(block_diag(jordan_block(QQ, 3), Matrix(QQ, [[1]])))
    with_b = factor(block_diag(jordan_block(QQ, 4), Matrix(QQ, [[2]])))
    assert not no_b.used_roth and with_b.used_roth


def test_rank_claim_single_zero_eigenvalue():
    A = Matrix.diag(QQ, [0, 2, 3])
    fac = factor(A)
    assert fac.certificate.rank_1 == fac.certificate.rank_2 == A.rank() == 2


def test_verify_off_skips_certificate():
    fac = factor(Matrix.diag(QQ, [0, 2]), verify=False)
    assert fac.certificate is None
    assert fac.N1 @ fac.N2 == Matrix.diag(QQ, [0, 2])


def expected_route(A):
    if (A**A.nrows).is_zero():
        return Route.NILPOTENT
    sp = fitting_split(A)
    if sp.A0.is_zero():
        return Route.ZERO_BLOCK
    return Route.J2 if sp.n0 == 2 else Route.GENERAL


def test_route_rule():
    rng = random.Random(11)
    for f in (GF(2), GF(5), QQ):
        for _ in range(30):
            A = random_structured_singular(f, 5, rng)
            assert factor(A).route is expected_route(A)


@settings(max_examples=120, deadline=None)
@given(st.sampled_from([QQ, GF(2), GF(3), GF(5), GF(7)]), st.integers(1, 6), st.booleans(), st.integers(0, 2**32))
def test_factor_certified(f, n, structured, seed):
    rng = random.Random(seed)
    A = random_structured_singular(f, n, rng) if structured else random_singular(f, n, rng)
    if n == 2 and A.is_nilpotent() and not A.is_zero():
        with pytest.raises(ExceptionalCase):
            factor(A)
        return
    assert_certified(A, factor(A, seed=seed))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([QQ, GF(5)]), st.integers(1, 5), st.integers(0, 2**32))
def test_invertible_rejected(f, n, seed):
    with pytest.raises(NotSingular):
        factor(random_invertible(f, n, random.Random(seed)))
