import pytest
from hypothesis import given

from nilfactor.errors import SingularMatrix
from nilfactor.field import GF, QQ
from nilfactor.lu import crout, has_nonzero_leading_minors, leading_principal_minors, lu_similarity
from nilfactor.matrix import Matrix, permutation_matrix

from conftest import matrices


def check(A, res):
    L, U = res.L, res.U
    assert L.is_lower_triangular() and U.is_upper_triangular()
    assert all(U[i, i] == 1 for i in range(U.nrows))
    assert L @ U == A.conjugate(res.S)
    assert all(m != 0 for m in leading_principal_minors(L @ U))
    f = A.field
    assert f.reduce(L.det() * U.det()) == A.det()


def test_identity_and_diagonal():
    res = lu_similarity(Matrix.identity(QQ, 3))
    assert res.S == res.L == res.U == Matrix.identity(QQ, 3)
    D = Matrix.diag(QQ, [2, 3])
    res = lu_similarity(D)
    assert res.S == Matrix.identity(QQ, 2) and res.L == D and res.U == Matrix.identity(QQ, 2)


def test_swap_needs_a_similarity():
    A = Matrix(QQ, [[0, 1], [1, 0]])
    assert not has_nonzero_leading_minors(A)
    res = lu_similarity(A)
    assert res.S != Matrix.identity(QQ, 2)
    check(A, res)


def test_all_permutations_gf2():
    import itertools

    f = GF(2)
    for order in itertools.permutations(range(4)):
        P = permutation_matrix(f, list(order))
        check(P, lu_similarity(P))


def test_singular_rejected():
    with pytest.raises(SingularMatrix):
        lu_similarity(Matrix.zeros(QQ, 2))


def test_crout_none_on_zero_minor():
    assert crout(Matrix(QQ, [[0, 1], [1, 1]])) is None


@given(matrices(max_n=5).filter(lambda M: M.rank() == M.nrows))
def test_lu_similarity_certified(A):
    check(A, lu_similarity(A))
