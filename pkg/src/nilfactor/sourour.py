"""Bordered similarity form of a matrix that is not square-zero.

Any such A is similar to ``[[lam, c^T], [b, D]]`` with
``rank(D) = rank(A) - 1``, b in the column space of D and c in the column
space of ``D^T``.  The general construction picks x0, sets ``x1 = A x0``
and uses the basis ``x1, x1 - x0, ker A, completion``; the projection P
along ``span{x1}`` onto the span of the other basis vectors never has x0 in
its range.

x0 is chosen with ``A x0`` and ``A^2 x0`` linearly independent.  That
implies x0, A x0 independent and ``A^2 x0 != 0``, and also keeps
``span{x0, x1}`` clear of ``ker A`` so the basis above really is a basis.
No such x0 exists exactly when A is a nonzero multiple of an idempotent;
those matrices are handled through their eigenbasis.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Optional

from .errors import CertificateError, DependentSystem, DimensionMismatch, ScalarMatrix, ScalarOnRange, SquareZero
from .field import FieldScalar
from .matrix import Matrix, SpanBuilder, Vector, basis_vector


@dataclass(frozen=True)
class SourourForm:
    """``S^{-1} A S == [[lam, c^T], [b, D]]``."""

    S: Matrix
    lam: FieldScalar
    b: Vector
    c: Vector
    D: Matrix
    branch: str
    x0: Optional[Vector] = None
    P: Optional[Matrix] = dc_field(default=None, repr=False)

    def bordered(self) -> Matrix:
        f = self.S.field
        rows = [(self.lam.value,) + tuple(self.c)]
        rows += [(bi,) + r for bi, r in zip(self.b, self.D.rows)]
        return Matrix(f, rows, ncols=self.S.ncols)

    def violations(self, A: Matrix) -> list:
        bad = []
        if A.conjugate(self.S) != self.bordered():
            bad.append("similarity")
        if self.D.rank() != A.rank() - 1:
            bad.append("rank(D) = rank(A) - 1")
        if self.D.solve(self.b) is None:
            bad.append("b in R(D)")
        if self.D.T.solve(self.c) is None:
            bad.append("c in R(D^T)")
        return bad


def _independent(field, *vectors) -> bool:
    span = SpanBuilder(field, len(vectors[0]))
    return all(span.add(v) for v in vectors)


def _check_input(A: Matrix):
    if not A.is_square:
        raise DimensionMismatch("bordered form of a non-square matrix")
    if (A @ A).is_zero():
        raise SquareZero("matrix is square-zero")


def choose_x0(A: Matrix) -> Vector:
    """First of e_1, ..., e_n, then e_i + e_j (i < j), with ``A x, A^2 x`` independent."""
    _check_input(A)
    if A.is_scalar():
        raise ScalarMatrix("matrix is scalar")
    n, f = A.nrows, A.field
    A2 = A @ A
    units = [basis_vector(f, n, i) for i in range(n)]
    candidates = list(units)
    candidates += [tuple(f.reduce(a + b) for a, b in zip(units[i], units[j])) for i, j in combinations(range(n), 2)]
    for x in candidates:
        if _independent(f, A.apply(x), A2.apply(x)):
            return x
    raise ScalarOnRange("A is a nonzero multiple of an idempotent")


@dataclass(frozen=True)
class Alpha1Basis:
    S: Matrix
    x0: Vector
    x1: Vector
    kernel: list
    completion: list
    P: Matrix


def build_alpha1(A: Matrix, x0: Vector) -> Alpha1Basis:
    """Basis ``x1, x1 - x0, kernel basis of A, standard completion`` and the
    projection along ``span{x1}`` onto the span of the remaining vectors."""
    n, f = A.nrows, A.field
    x1 = A.apply(x0)
    head = [x1, tuple(f.reduce(a - b) for a, b in zip(x1, x0))]
    kernel = A.kernel_basis()
    span = SpanBuilder(f, n)
    for v in head + kernel:
        if not span.add(v):
            raise DependentSystem("x1, x1 - x0 and ker A are not independent")
    completion = [e for e in (basis_vector(f, n, i) for i in range(n)) if len(span) < n and span.add(e)]
    S = Matrix.from_columns(f, head + kernel + completion, nrows=n)
    coords = Matrix.diag(f, [0] + [1] * (n - 1))
    P = S @ coords @ S.inverse()
    return Alpha1Basis(S=S, x0=x0, x1=x1, kernel=kernel, completion=completion, P=P)


def projection_certificate(A: Matrix, basis: Alpha1Basis) -> dict:
    """Exact checks of the projection claims behind the construction."""
    P, x0, x1 = basis.P, basis.x0, basis.x1
    PA, AP = P @ A, A @ P
    PAP = P @ AP
    r = A.rank()
    ker_dim = len(basis.kernel)
    return {
        "rank_PA": PA.rank(),
        "rank_AP": AP.rank(),
        "rank_PAP": PAP.rank(),
        "rank_A_minus_1": r - 1,
        "ranks_equal": PA.rank() == AP.rank() == PAP.rank() == r - 1,
        "ker_PA_generated": not any(PA.apply(x0)) and all(not any(PA.apply(v)) for v in basis.kernel)
        and len(PA.kernel_basis()) == 1 + ker_dim,
        "ker_AP_generated": not any(AP.apply(x1)) and all(not any(AP.apply(v)) for v in basis.kernel)
        and len(AP.kernel_basis()) == 1 + ker_dim,
        "ker_PAP_equals_ker_AP": len(PAP.kernel_basis()) == 1 + ker_dim,
        "x0_not_in_range_P": P.solve(x0) is None,
        "x1_not_in_range_AP": AP.solve(x1) is None,
    }


def _split_form(A: Matrix, S: Matrix, branch: str, x0=None, P=None) -> SourourForm:
    f = A.field
    M = A.conjugate(S)
    n = A.nrows
    return SourourForm(
        S=S,
        lam=f.scalar(M[0, 0]),
        b=tuple(M[i, 0] for i in range(1, n)),
        c=tuple(M[0, j] for j in range(1, n)),
        D=M.submatrix(1, n, 1, n),
        branch=branch,
        x0=x0,
        P=P,
    )


def sourour_form(A: Matrix) -> SourourForm:
    """Bordered form of A with all invariants certified."""
    _check_input(A)
    n, f = A.nrows, A.field
    if A.is_scalar():
        form = _split_form(A, Matrix.identity(f, n), "scalar")
    else:
        try:
            x0 = choose_x0(A)
        except ScalarOnRange:
            # A = mu * E with E idempotent: F^n = R(A) + ker(A), A acts as mu on R(A)
            S = Matrix.from_columns(f, A.column_space_basis() + A.kernel_basis(), nrows=n)
            form = _split_form(A, S, "idempotent")
        else:
            basis = build_alpha1(A, x0)
            form = _split_form(A, basis.S, "alpha1", x0=x0, P=basis.P)
    bad = form.violations(A)
    if bad:
        raise CertificateError(f"bordered form failed: {', '.join(bad)}")
    return form


def is_multiple_of_idempotent(A: Matrix) -> bool:
    """True when ``A^2 = mu A`` for some nonzero mu."""
    A2 = A @ A
    if A.is_zero() or A2.is_zero():
        return False
    i, j = next((i, j) for i, r in enumerate(A.rows) for j, x in enumerate(r) if x != 0)
    mu = A.field.reduce(A2[i, j] * A.field.inv(A[i, j]))
    return A2 == A.scale(mu)


__all__ = [
    "SourourForm",
    "Alpha1Basis",
    "choose_x0",
    "build_alpha1",
    "projection_certificate",
    "sourour_form",
    "is_multiple_of_idempotent",
]
