"""Factor a singular matrix into two nilpotent matrices.

A square matrix is a product of two nilpotent matrices iff it is singular,
except for the nonzero nilpotent 2x2 matrices.  :func:`factor` routes the
input by its Fitting split ``Dg[A0, A1]`` (A0 nilpotent, A1 invertible):

* ``Nilpotent``: A itself is nilpotent; use the normal-form factorization
  of its Jordan structure.
* ``CaseZeroBlock``: A0 is a zero block of size m; shift L down and U right
  by m positions, where A1 is similar to L U.
* ``CaseJ2``: A0 is a nonzero 2x2 nilpotent; a bordered pair whose
  product is block lower triangular, straightened by a Roth transform.
* ``CaseGeneral``: A0 of size >= 3; the normal-form pair for A0 is glued to
  the shifted L and U, and a Roth transform clears the one possible
  off-diagonal column.

Every similarity is composed into a single transform W and the factors are
reported on the caller's matrix: ``N_i = W M_i W^{-1}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .blocks import LastRow, factor_nilpotent_normal_form
from .canonical import NilpotentPartition, fitting_split, nilpotent_jcf
from .errors import CertificateError, DimensionMismatch, ExceptionalCase, NotSingular, UnsupportedSize
from .lu import lu_similarity
from .matrix import Matrix, block_diag
from .roth import roth_transform, solve_roth_e11case, solve_roth_j2case


class Route(enum.Enum):
    NILPOTENT = "Nilpotent"
    ZERO_BLOCK = "CaseZeroBlock"
    J2 = "CaseJ2"
    GENERAL = "CaseGeneral"


class CaseFactors(NamedTuple):
    """``M1 @ M2 == V^{-1} target V`` for the case's block-diagonal target."""

    M1: Matrix
    M2: Matrix
    V: Matrix
    roth: Optional[Matrix]  # the X used by a Roth transform, if any


@dataclass(frozen=True)
class Certificate:
    product_ok: bool
    nilpotency_index_1: Optional[int]
    nilpotency_index_2: Optional[int]
    rank_1: int
    rank_2: int
    rank_A: int

    @property
    def ok(self) -> bool:
        return self.product_ok and self.nilpotency_index_1 is not None and self.nilpotency_index_2 is not None

    def to_dict(self) -> dict:
        return {
            "product_ok": self.product_ok,
            "nilpotency_index_1": self.nilpotency_index_1,
            "nilpotency_index_2": self.nilpotency_index_2,
            "rank_1": self.rank_1,
            "rank_2": self.rank_2,
            "rank_A": self.rank_A,
        }


@dataclass(frozen=True)
class Factorization:
    N1: Matrix
    N2: Matrix
    route: Route
    certificate: Optional[Certificate]
    roth_X: Optional[Matrix] = None
    nilpotent_size: int = 0

    @property
    def used_roth(self) -> bool:
        return self.roth_X is not None and not self.roth_X.is_zero()


def certify(A: Matrix, N1: Matrix, N2: Matrix) -> Certificate:
    return Certificate(
        product_ok=N1 @ N2 == A,
        nilpotency_index_1=N1.nilpotency_index(),
        nilpotency_index_2=N2.nilpotency_index(),
        rank_1=N1.rank(),
        rank_2=N2.rank(),
        rank_A=A.rank(),
    )


def is_factorable(A: Matrix) -> bool:
    """True iff A is a product of two nilpotent matrices."""
    if not A.is_square:
        raise DimensionMismatch("only square matrices")
    if A.rank() == A.nrows:
        return False
    return not (A.nrows == 2 and A.is_nilpotent() and not A.is_zero())


# -- the three non-nilpotent cases ----------------------------------------


def factor_case_zero_block(m: int, A1: Matrix, seed: Optional[int] = None) -> CaseFactors:
    """Factors of a matrix similar to ``Dg[0_m, A1]``.

    L sits in rows m+1..n, columns 1..k of M1 and U in rows 1..k,
    columns m+1..n of M2, so both are strictly triangular.
    """
    if m < 1:
        raise UnsupportedSize("zero block must have size >= 1")
    f, k = A1.field, A1.nrows
    lu = lu_similarity(A1, seed)
    n = m + k
    M1 = _place(f, n, lu.L, m, 0)
    M2 = _place(f, n, lu.U, 0, m)
    V = block_diag(Matrix.identity(f, m), lu.S)
    return CaseFactors(M1, M2, V, None)


def _place(field, n: int, block: Matrix, r0: int, c0: int) -> Matrix:
    """n x n zero matrix with ``block`` written at offset (r0, c0)."""
    updates = {(r0 + i, c0 + j): x for i, row in enumerate(block.rows) for j, x in enumerate(row) if x != 0}
    return Matrix.zeros(field, n).with_entries(updates)


def factor_case_j2(A1: Matrix, seed: Optional[int] = None) -> CaseFactors:
    """Factors of a matrix similar to ``Dg[J_2(0), A1]``.

    The left factor carries L in rows 3..n, columns 2..n-1, plus 1 at
    (1,1), (1,n) and -1 at (n,1), (n,n); the right factor carries a 1 at
    (1,2) and U in rows 2..n-1, columns 3..n.  Their product is
    ``[[[[0,1],[0,0]], 0], [-E_(k,2), L U]]``.
    """
    f, k = A1.field, A1.nrows
    n = k + 2
    lu = lu_similarity(A1, seed)
    one, minus = f(1), f(-1)
    M1 = _place(f, n, lu.L, 2, 1).with_entries({(0, 0): one, (0, n - 1): one, (n - 1, 0): minus, (n - 1, n - 1): minus})
    M2 = _place(f, n, lu.U, 1, 2).with_entries({(0, 1): one})
    X = solve_roth_j2case(lu.L @ lu.U).X
    swap = Matrix(f, [[0, 1], [1, 0]])  # J_2 (subdiagonal) -> [[0,1],[0,0]]
    D = block_diag(swap, lu.S)
    V = D @ roth_transform(-X)
    return CaseFactors(M1, M2, V, X)


def factor_case_general(partition: NilpotentPartition, A1: Matrix, seed: Optional[int] = None) -> CaseFactors:
    """Factors of a matrix similar to ``Dg[J, A1]``, J the Jordan matrix of ``partition``.

    With ``N1 N2`` the normal-form pair for J (size n0) and ``A1 ~ L U``::

        M1 = [[N1, 0], [l e_{n0}^T, L']]     L' = L without its first column
        M2 = [[N2, e_{n0} u^T], [0, U']]     U' = U without its first row

    where l is the first column of L and u^T the first row of U.  The
    product is ``[[N1 N2, 0], [B, L U]]`` with ``B = l * (last row of N2)``;
    B is zero or ``l e_1^T``, and in the second case X = -E_(1,1)/u11 solves
    ``B = X (N1 N2) - (L U) X`` because the first row of N1 N2 is zero.
    """
    if not isinstance(partition, NilpotentPartition):
        partition = NilpotentPartition(tuple(partition))
    n0 = partition.n
    if n0 < 3:
        raise UnsupportedSize(f"general case needs a nilpotent part of size >= 3, got {n0}")
    f, k = A1.field, A1.nrows
    n = n0 + k
    nf = factor_nilpotent_normal_form(partition, f)
    lu = lu_similarity(A1, seed)
    M1 = _place(f, n, lu.L, n0, n0 - 1)
    M1 = M1.with_entries({(i, j): x for i, r in enumerate(nf.left.rows) for j, x in enumerate(r) if x != 0})
    M2 = _place(f, n, lu.U, n0 - 1, n0)
    M2 = M2.with_entries({(i, j): x for i, r in enumerate(nf.right.rows) for j, x in enumerate(r) if x != 0})
    D = block_diag(nf.similarity, lu.S)
    if nf.right_last_row is LastRow.E1T:
        X = solve_roth_e11case(f.scalar(lu.U[0, 0]), k, n0).X
        return CaseFactors(M1, M2, D @ roth_transform(-X), X)
    return CaseFactors(M1, M2, D, None)


# -- driver ----------------------------------------------------------------


def factor(A: Matrix, *, verify: bool = True, seed: Optional[int] = None) -> Factorization:
    """Nilpotent N1, N2 with ``N1 @ N2 == A``.

    Raises NotSingular for invertible A and ExceptionalCase for a nonzero
    nilpotent 2x2 A.  With ``verify`` (the default) the product and both
    nilpotency indices are recomputed and a CertificateError is raised if
    anything is off.
    """
    if not A.is_square:
        raise DimensionMismatch("only square matrices can be factored")
    n, f = A.nrows, A.field
    if A.rank() == n:
        raise NotSingular("matrix is invertible")

    roth_X = None
    if A.is_nilpotent():
        if n == 2 and not A.is_zero():
            raise ExceptionalCase("a nonzero nilpotent 2x2 matrix is not a product of two nilpotent matrices")
        S, partition = nilpotent_jcf(A)
        nf = factor_nilpotent_normal_form(partition, f)
        W = S @ nf.similarity
        M1, M2, route, n0 = nf.left, nf.right, Route.NILPOTENT, n
    else:
        split = fitting_split(A)
        n0 = split.n0
        if split.A0.is_zero():
            case = factor_case_zero_block(n0, split.A1, seed)
            D0 = Matrix.identity(f, n)
            route = Route.ZERO_BLOCK
        else:
            S0, partition = nilpotent_jcf(split.A0)
            D0 = block_diag(S0, Matrix.identity(f, n - n0))
            if n0 == 2:
                case, route = factor_case_j2(split.A1, seed), Route.J2
            else:
                case, route = factor_case_general(partition, split.A1, seed), Route.GENERAL
        M1, M2, V, roth_X = case
        W = split.S @ D0 @ V

    W_inv = W.inverse()
    N1, N2 = W @ M1 @ W_inv, W @ M2 @ W_inv
    cert = None
    if verify:
        cert = certify(A, N1, N2)
        if not cert.ok:
            raise CertificateError(f"route {route.value} produced an invalid factorization")
    return Factorization(N1=N1, N2=N2, route=route, certificate=cert, roth_X=roth_X, nilpotent_size=n0)
