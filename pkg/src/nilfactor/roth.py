"""Solutions X of ``X A0 - A1 X = B``.

Such an X makes ``[[A0, 0], [B, A1]]`` similar to ``Dg[A0, A1]`` through
``[[I, 0], [X, I]]``.  The factorizer only uses the two closed forms
:func:`solve_roth_j2case` and :func:`solve_roth_e11case`;
:func:`solve_sylvester_generic` is a brute-force oracle for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DimensionMismatch, DivisionByZero, SingularMatrix
from .field import FieldScalar
from .matrix import Matrix, basis_vector, block_assemble


@dataclass(frozen=True)
class RothSolution:
    X: Matrix

    def satisfies(self, A0: Matrix, A1: Matrix, B: Matrix) -> bool:
        return self.X @ A0 - A1 @ self.X == B


def solve_sylvester_generic(A0: Matrix, A1: Matrix, B: Matrix) -> Optional[RothSolution]:
    """Solve for the entries of X as one linear system; ``None`` if inconsistent."""
    m, k = A0.nrows, A1.nrows
    if not (A0.is_square and A1.is_square) or B.shape != (k, m):
        raise DimensionMismatch(f"A0 {A0.shape}, A1 {A1.shape}, B {B.shape}")
    f = A0.field
    red = f.reduce
    # unknown x_{ij} sits at index i*m + j
    coeffs = []
    for i in range(k):
        for j in range(m):
            row = [0] * (k * m)
            for t in range(m):
                row[i * m + t] += A0.rows[t][j]
            for t in range(k):
                row[t * m + j] -= A1.rows[i][t]
            coeffs.append(tuple(red(x) for x in row))
    system = Matrix._raw(f, tuple(coeffs), k * m, k * m)
    x = system.solve([B.rows[i][j] for i in range(k) for j in range(m)])
    if x is None:
        return None
    X = Matrix._raw(f, tuple(tuple(x[i * m: (i + 1) * m]) for i in range(k)), k, m)
    return RothSolution(X)


def solve_roth_j2case(A1: Matrix) -> RothSolution:
    """X = [0, x] with ``A1 x = e_k``; solves against ``A0 = [[0, 1], [0, 0]]``
    and ``B = -E_(k,2)``."""
    k = A1.nrows
    if not A1.is_square or k == 0:
        raise DimensionMismatch("A1 must be a non-empty square matrix")
    if A1.rank() < k:
        raise SingularMatrix("A1 must be invertible")
    x = A1.solve(basis_vector(A1.field, k, k - 1))
    return RothSolution(Matrix.from_columns(A1.field, [(0,) * k, x], nrows=k))


def solve_roth_e11case(u11: FieldScalar, k: int, n0: int) -> RothSolution:
    """The k x n0 matrix with ``-1/u11`` at (1,1) and zeros elsewhere."""
    if u11.is_zero():
        raise DivisionByZero("u11 must be nonzero")
    f = u11.field
    X = Matrix.zeros(f, k, n0).with_entries({(0, 0): (-u11.inv()).value})
    return RothSolution(X)


def roth_transform(X: Matrix) -> Matrix:
    """``[[I, 0], [X, I]]``."""
    k, m = X.shape
    f = X.field
    return block_assemble(
        [[Matrix.identity(f, m), Matrix.zeros(f, m, k)], [X, Matrix.identity(f, k)]]
    )


def block_diagonalizes(A0: Matrix, A1: Matrix, B: Matrix, X: Matrix) -> bool:
    """Check ``[[I,0],[-X,I]] [[A0,0],[B,A1]] [[I,0],[X,I]] == Dg[A0, A1]``."""
    m, k = A0.nrows, A1.nrows
    f = A0.field
    M = block_assemble([[A0, Matrix.zeros(f, m, k)], [B, A1]])
    R = roth_transform(X)
    D = block_assemble([[A0, Matrix.zeros(f, m, k)], [Matrix.zeros(f, k, m), A1]])
    return roth_transform(-X) @ M @ R == D
