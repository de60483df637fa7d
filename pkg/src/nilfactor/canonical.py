"""Nilpotent Jordan form and Fitting decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CertificateError, DimensionMismatch, NotNilpotent
from .field import Field
from .matrix import Matrix, SpanBuilder, block_diag, jordan_block


@dataclass(frozen=True)
class NilpotentPartition:
    """Jordan block sizes of a nilpotent matrix, largest first."""

    sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if any(s < 1 for s in sizes):
            raise ValueError(f"block sizes must be positive: {sizes}")
        object.__setattr__(self, "sizes", tuple(sorted(sizes, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def jordan_matrix(self, field: Field) -> Matrix:
        if not self.sizes:
            return Matrix.zeros(field, 0)
        return block_diag(*(jordan_block(field, k) for k in self.sizes))

    def __iter__(self):
        return iter(self.sizes)

    def __len__(self):
        return len(self.sizes)


def partitions(n: int, largest: int | None = None):
    """All partitions of n as descending tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def nilpotent_jcf(N: Matrix) -> tuple:
    """Return ``(S, partition)`` with ``S^{-1} N S`` the Jordan matrix of ``partition``.

    Chains are built top-down.  At level j a new chain head is any vector of
    ``ker N^j`` independent of ``ker N^{j-1}`` together with the level-j
    vectors of the chains already started; candidates are taken from the
    echelon kernel basis in order.
    """
    if not N.is_square:
        raise DimensionMismatch("Jordan form of a non-square matrix")
    if not N.is_nilpotent():
        raise NotNilpotent("matrix is not nilpotent")
    field, n = N.field, N.nrows
    if n == 0:
        return Matrix.identity(field, 0), NilpotentPartition(())

    powers = [Matrix.identity(field, n)]
    while not powers[-1].is_zero():
        powers.append(powers[-1] @ N)
    index = len(powers) - 1
    kernels = [P.kernel_basis() for P in powers]

    chains = []  # (head, length)
    for level in range(index, 0, -1):
        span = SpanBuilder(field, n)
        for v in kernels[level - 1]:
            span.add(v)
        for head, length in chains:
            span.add(powers[length - level].apply(head))
        for cand in kernels[level]:
            if span.add(cand):
                chains.append((cand, level))

    columns = []
    for head, length in chains:
        v = head
        for _ in range(length):
            columns.append(v)
            v = N.apply(v)
    S = Matrix.from_columns(field, columns, nrows=n)
    partition = NilpotentPartition(tuple(length for _, length in chains))
    if N @ S != S @ partition.jordan_matrix(field):
        raise CertificateError("Jordan transform failed its identity check")
    return S, partition


def kernel_dimension_partition(N: Matrix) -> NilpotentPartition:
    """Block sizes from the kernel dimensions of the powers of N.

    The number of blocks of size >= j is ``dim ker N^j - dim ker N^{j-1}``.
    Independent of :func:`nilpotent_jcf`; used to cross-check it.
    """
    if not N.is_nilpotent():
        raise NotNilpotent("matrix is not nilpotent")
    n = N.nrows
    dims = [0]
    P = Matrix.identity(N.field, n)
    while dims[-1] < n:
        P = P @ N
        dims.append(n - P.rank())
    at_least = [dims[j] - dims[j - 1] for j in range(1, len(dims))]
    sizes = []
    for j, count in enumerate(at_least, start=1):
        bigger = at_least[j] if j < len(at_least) else 0
        sizes.extend([j] * (count - bigger))
    return NilpotentPartition(tuple(sizes))


@dataclass(frozen=True)
class FittingSplit:
    """``S^{-1} A S = Dg[A0, A1]`` with A0 nilpotent and A1 invertible."""

    S: Matrix
    A0: Matrix
    A1: Matrix
    n0: int


def fitting_split(A: Matrix) -> FittingSplit:
    """Split A along ``ker A^n`` (nilpotent part) and ``range A^n`` (invertible part)."""
    if not A.is_square:
        raise DimensionMismatch("Fitting split of a non-square matrix")
    n = A.nrows
    M = A ** n
    ker = M.kernel_basis()
    # echelon rows of (A^n)^T span the range with normalized vectors, so a
    # matrix that is already split keeps its coordinates
    R, piv = M.T.rref()
    rng = list(R.rows[: len(piv)])
    n0 = len(ker)
    S = Matrix.from_columns(A.field, ker + rng, nrows=n)
    T = A.conjugate(S)
    A0 = T.submatrix(0, n0, 0, n0)
    A1 = T.submatrix(n0, n, n0, n)
    if not (T.submatrix(0, n0, n0, n).is_zero() and T.submatrix(n0, n, 0, n0).is_zero()):
        raise CertificateError("Fitting transform is not block diagonal")
    return FittingSplit(S=S, A0=A0, A1=A1, n0=n0)


def split_matrix(split: FittingSplit) -> Matrix:
    """``Dg[A0, A1]`` of a split, handling empty blocks."""
    parts = [b for b in (split.A0, split.A1) if b.nrows]
    if not parts:
        return Matrix.zeros(split.S.field, 0)
    return block_diag(*parts)


def jordan_from_sizes(field: Field, sizes: Sequence[int]) -> Matrix:
    """Block diagonal of Jordan blocks in the given order (not re-sorted)."""
    return block_diag(*(jordan_block(field, k) for k in sizes))
