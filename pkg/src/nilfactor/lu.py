"""Similarity of an invertible matrix to a product L U of invertible triangular factors.

An LU factorization without row exchanges exists iff every leading
principal minor is nonzero.  :func:`lu_similarity` finds a similarity that
achieves this.  The k-th pivot of elimination is the (1,1) entry of the
Schur complement of the leading (k-1)-block; conjugating by a matrix acting
only on trailing coordinates keeps earlier pivots and conjugates the Schur
complement.  When a pivot vanishes, the Schur complement C is invertible, so
its first column has a nonzero entry c_j below the top, and conjugating by
``I - E_(1,j)`` (on trailing coordinates) turns the pivot into c_j.  Every
output is verified exactly before it is returned.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Optional

from .errors import CertificateError, DimensionMismatch, SearchExhausted, SingularMatrix
from .field import Field, Rationals
from .matrix import Matrix

DEFAULT_SEED = 20240607


def default_seed() -> int:
    env = os.environ.get("NILFACTOR_SEED")
    return int(env) if env else DEFAULT_SEED


@dataclass(frozen=True)
class LUSimilarity:
    """``S^{-1} A S == L @ U`` with L lower and U unit upper triangular."""

    S: Matrix
    L: Matrix
    U: Matrix


def crout(M: Matrix) -> Optional[tuple]:
    """``(L, U)`` with ``M == L @ U``, L lower triangular carrying the pivots and
    U unit upper triangular; ``None`` if some leading principal minor is zero."""
    f = M.field
    red, inv = f.reduce, f.inv
    n = M.nrows
    rows = [list(r) for r in M.rows]
    lower = [[0] * n for _ in range(n)]
    for c in range(n):
        piv = rows[c][c]
        if piv == 0:
            return None
        s = inv(piv)
        lower[c][c] = 1
        for i in range(c + 1, n):
            t = rows[i][c]
            if t != 0:
                t = red(t * s)
                lower[i][c] = t
                rows[i] = [red(x - t * y) for x, y in zip(rows[i], rows[c])]
            else:
                lower[i][c] = 0
    # Doolittle M = L' U'; move the pivots from U' into L.
    pivots = [rows[i][i] for i in range(n)]
    L = Matrix._raw(
        f, tuple(tuple(red(lower[i][j] * pivots[j]) for j in range(n)) for i in range(n)), n, n
    )
    U = Matrix._raw(
        f,
        tuple(tuple(red(rows[i][j] * inv(pivots[i])) if j >= i else 0 for j in range(n)) for i in range(n)),
        n,
        n,
    )
    return L, U


def has_nonzero_leading_minors(M: Matrix) -> bool:
    return crout(M) is not None


def leading_principal_minors(M: Matrix) -> list:
    return [M.submatrix(0, k, 0, k).det() for k in range(1, M.nrows + 1)]


def _schur_column(M: Matrix, i: int) -> list:
    """First column of the Schur complement of the leading i x i block."""
    f = M.field
    red, inv = f.reduce, f.inv
    rows = [list(r) for r in M.rows]
    for c in range(i):
        s = inv(rows[c][c])
        for r in range(c + 1, M.nrows):
            t = rows[r][c]
            if t != 0:
                t = red(t * s)
                rows[r] = [red(x - t * y) for x, y in zip(rows[r], rows[c])]
    return [rows[r][i] for r in range(i, M.nrows)]


def _pivot_repair(A: Matrix) -> tuple:
    n = A.nrows
    f = A.field
    S, M = Matrix.identity(f, n), A
    for i in range(n):
        col = _schur_column(M, i)
        if col[0] != 0:
            continue
        j = next(j for j, x in enumerate(col) if x != 0)
        T = Matrix.identity(f, n).with_entries({(i, i + j): -1})
        T_inv = Matrix.identity(f, n).with_entries({(i, i + j): 1})
        M, S = T_inv @ M @ T, S @ T
    return S, M


def _random_element(field: Field, rng: random.Random):
    if isinstance(field, Rationals):
        return rng.randint(-3, 3)
    return rng.randrange(field.characteristic)


def _random_search(A: Matrix, seed: int, tries: int = 2000) -> Optional[tuple]:
    rng = random.Random(seed)
    n, f = A.nrows, A.field
    for _ in range(tries):
        S = Matrix(f, [[_random_element(f, rng) for _ in range(n)] for _ in range(n)])
        if S.rank() < n:
            continue
        M = A.conjugate(S)
        if has_nonzero_leading_minors(M):
            return S, M
    return None


def lu_similarity(A1: Matrix, seed: Optional[int] = None) -> LUSimilarity:
    """Find S, L, U with ``S^{-1} A1 S == L @ U``.

    Tries S = I first, then the deterministic pivot repair described in the
    module docstring, then seeded random conjugation.
    """
    if not A1.is_square:
        raise DimensionMismatch("LU similarity of a non-square matrix")
    n = A1.nrows
    if A1.rank() < n:
        raise SingularMatrix("LU similarity needs an invertible matrix")
    f = A1.field
    S, M = Matrix.identity(f, n), A1
    if not has_nonzero_leading_minors(M):
        S, M = _pivot_repair(A1)
        if not has_nonzero_leading_minors(M):
            found = _random_search(A1, default_seed() if seed is None else seed)
            if found is None:
                raise SearchExhausted("no LU similarity found")
            S, M = found
    L, U = crout(M)
    if L @ U != A1.conjugate(S):
        raise CertificateError("LU similarity failed its identity check")
    return LUSimilarity(S=S, L=L, U=U)
