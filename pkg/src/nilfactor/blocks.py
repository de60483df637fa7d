"""Explicit nilpotent factorizations of nilpotent Jordan structures.

Two families live here:

* products ``Dg[J_k(0), J_2(0)] = N1 N2`` with both factors nilpotent
  (:func:`factor_jk_j2`), together with the permutation matrices
  :func:`q1_matrix` / :func:`q2_matrix` that bring the odd-k factors to
  Jordan form;
* normal-form factorizations (:func:`factor_nilpotent_normal_form`), where
  the left factor has zero first row and zero last column and the right
  factor's last row is zero or ``e_1^T``.  The large-matrix assembly in
  :mod:`nilfactor.factorizer` relies on exactly this shape.

Index lists in this module are 1-based, matching the usual ``e_i`` naming;
``0`` stands for a zero column.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .canonical import NilpotentPartition, jordan_from_sizes
from .errors import CertificateError, ExceptionalCase, InvalidK, UnsupportedSize
from .field import Field
from .matrix import (
    Matrix,
    basis_vector,
    block_assemble,
    block_diag,
    jordan_block,
    matrix_unit,
    permutation_matrix,
)


class LastRow(enum.Enum):
    ZERO = "zero"
    E1T = "e1T"


@dataclass(frozen=True)
class NormalFormFactorization:
    """``left @ right == target`` where ``target = Q^{-1} J Q``.

    ``jordan`` is the Jordan matrix (blocks in descending order) and
    ``similarity`` is Q.
    """

    left: Matrix
    right: Matrix
    right_last_row: LastRow
    similarity: Matrix
    jordan: Matrix

    @property
    def target(self) -> Matrix:
        return self.jordan.conjugate(self.similarity)

    @property
    def n(self) -> int:
        return self.left.nrows

    def violations(self) -> list:
        """Names of the normal-form properties that fail (empty when valid)."""
        bad = []
        n = self.n
        if self.left @ self.right != self.target:
            bad.append("product")
        if not self.left.is_nilpotent():
            bad.append("left nilpotent")
        if not self.right.is_nilpotent():
            bad.append("right nilpotent")
        if n == 0:
            return bad
        if any(self.left.row(0)):
            bad.append("left first row zero")
        if any(self.left.column(n - 1)):
            bad.append("left last column zero")
        expected = (0,) * n if self.right_last_row is LastRow.ZERO else basis_vector(self.left.field, n, 0)
        if self.right.row(n - 1) != expected:
            bad.append("right last row")
        return bad


# -- small builders -------------------------------------------------------


def _cols(field: Field, n: int, indices: Sequence[int]) -> Matrix:
    zero = (0,) * n
    return Matrix.from_columns(field, [basis_vector(field, n, i - 1) if i else zero for i in indices], nrows=n)


def _perm(field: Field, indices: Sequence[int]) -> Matrix:
    return permutation_matrix(field, [i - 1 for i in indices])


def _z(field: Field, r: int, c: int | None = None) -> Matrix:
    return Matrix.zeros(field, r, c)


def _unit(field: Field, n: int, i: int, j: int) -> Matrix:
    """``E_(i,j)`` of size n, 1-based."""
    return matrix_unit(field, n, i - 1, j - 1)


def _check_odd(k: int, least: int = 3):
    if k < least or k % 2 == 0:
        raise InvalidK(f"k must be odd and >= {least}, got {k}")


# -- Dg[J_k, J_2] ---------------------------------------------------------


def _paired_swaps(k: int) -> list:
    # e_4, e_3, e_6, e_5, ..., e_{k-1}, e_{k-2}
    return [i for m in range(3, k - 1, 2) for i in (m + 1, m)]


def wu_a1_indices(k: int) -> list:
    """Columns of the upper-right block of the left factor: e2, 0, e4, e3, ..., e_k."""
    _check_odd(k)
    return [2, 0] + _paired_swaps(k) + [k]


def wu_a2_indices(k: int) -> list:
    """Columns of the lower-left block of the right factor: e1, e4, e3, ..., e_k, 0."""
    _check_odd(k)
    return [1] + _paired_swaps(k) + [k, 0]


def factor_jk_j2(k: int, field: Field) -> tuple:
    """Nilpotent ``(N1, N2)`` with ``N1 @ N2 == Dg[J_k(0), J_2(0)]``.

    k = 1 uses ``E_(3,1) E_(1,2)``; odd k >= 3 uses the block
    anti-diagonal pair whose factors both have rank k; even k uses the pair
    with ``J_k`` in the left factor's upper-right corner.
    """
    if k < 1:
        raise InvalidK(f"k must be positive, got {k}")
    J2 = jordan_block(field, 2)
    if k == 1:
        return _unit(field, 3, 3, 1), _unit(field, 3, 1, 2)
    if k % 2:
        E11 = matrix_unit(field, 2, 0, 0)
        N1 = block_assemble([[_z(field, k, 2), _cols(field, k, wu_a1_indices(k))], [J2, _z(field, 2, k)]])
        N2 = block_assemble([[_z(field, 2, k), E11], [_cols(field, k, wu_a2_indices(k)), _z(field, k, 2)]])
        return N1, N2
    lower = Matrix(field, [[0, 0], [0, 1]])
    N1 = block_assemble([[_z(field, k, 2), jordan_block(field, k)], [lower, _z(field, 2, k)]])
    N2 = block_assemble(
        [
            [_z(field, 2, k - 1), _z(field, 2, 1), J2],
            [Matrix.identity(field, k - 1), _z(field, k - 1, 1), _z(field, k - 1, 2)],
            [_z(field, 1, k - 1), _z(field, 1, 1), _z(field, 1, 2)],
        ]
    )
    return N1, N2


def q1_block_sizes(k: int) -> tuple:
    _check_odd(k)
    q, sign = (k - 3) // 4, (-1) ** ((k - 3) // 2)
    return k - 2 * q + sign, k - 2 * (1 + q)


def q2_block_sizes(k: int) -> tuple:
    _check_odd(k)
    q = (k - 3) // 4
    return k - q, 2 + q


def q1_indices(k: int) -> list:
    """Column indices of Q1: the two Jordan chains of the left odd-k factor.

    First chain e1, e_{k+2}, e_k, e_{k-1}, e_{k-4}, e_{k-5}, ... ending at
    e2 or e4; second chain e_{k+1}, e_{k-2}, e_{k-3}, e_{k-6}, ... ending at
    e4 or e2 (depending on the parity of (k-3)/2).
    """
    _check_odd(k)
    first = [1, k + 2]
    top = k
    while top - 1 >= 2:
        first += [top, top - 1]
        top -= 4
    second = [k + 1]
    top = k - 2
    while top - 1 >= 2:
        second += [top, top - 1]
        top -= 4
    even = ((k - 3) // 2) % 2 == 0
    if first[-1] != (2 if even else 4) or (k > 3 and second[-1] != (4 if even else 2)):
        raise CertificateError(f"Q1 pattern for k={k} ended at an unexpected index")
    return first + second


def q2_indices(k: int) -> list:
    """Column indices of Q2; the pattern depends on the parity of (k-3)/2."""
    _check_odd(k)
    odds = list(range(1, k + 1, 2))
    if ((k - 3) // 2) % 2 == 0:
        head, tail = list(range(4, k + 2, 4)), list(range(2, k, 4))
        ends = (k + 1, k - 1)
    else:
        head, tail = list(range(2, k + 2, 4)), list(range(4, k, 4))
        ends = (k + 1, k - 1)
    if head[-1] != ends[0] or (tail and tail[-1] != ends[1]):
        raise CertificateError(f"Q2 pattern for k={k} ended at an unexpected index")
    return head + odds + tail + [k + 2]


def q1_matrix(k: int, field: Field) -> Matrix:
    return _perm(field, q1_indices(k))


def q2_matrix(k: int, field: Field) -> Matrix:
    return _perm(field, q2_indices(k))


# -- single blocks, pairs and the J2 triple in normal form ----------------


def _left_single_odd(field: Field, k: int) -> Matrix:
    return block_assemble(
        [
            [_z(field, 2, k - 2), _z(field, 2, 1), Matrix(field, [[0], [1]])],
            [Matrix.identity(field, k - 2), _z(field, k - 2, 1), _z(field, k - 2, 1)],
        ]
    )


def _right_single(field: Field, k: int) -> Matrix:
    return block_assemble(
        [
            [_z(field, k - 2, 1), Matrix.identity(field, k - 2), _z(field, k - 2, 1)],
            [_z(field, 1, 1), _z(field, 1, k - 2), _z(field, 1, 1)],
            [Matrix(field, [[1]]), _z(field, 1, k - 2), _z(field, 1, 1)],
        ]
    )


def _left_single_even(field: Field, k: int) -> Matrix:
    top = [_z(field, 2, 2), _z(field, 2, k - 4), Matrix(field, [[0, 0], [1, 1]])]
    mid = [Matrix(field, [[1, -1], [0, 1]]), _z(field, 2, k - 4), _z(field, 2, 2)]
    rows = [top, mid]
    if k > 4:
        rows.append([_z(field, k - 4, 2), Matrix.identity(field, k - 4), _z(field, k - 4, 2)])
    else:
        rows = [[r[0], r[2]] for r in rows]
    return block_assemble(rows)


def single_block_factors(k: int, field: Field) -> tuple:
    """Unconjugated pair with product ``J_k(0)``, k >= 3."""
    if k < 3:
        raise UnsupportedSize(f"single-block pair needs k >= 3, got {k}")
    right = _right_single(field, k)
    if k % 2:
        return _left_single_odd(field, k), right
    return _left_single_even(field, k), right + _unit(field, k, 1, 3)


def q3_indices(k: int) -> list:
    _check_odd(k)
    return list(range(1, k + 1, 2)) + list(range(2, k, 2))


def q4_matrix(k: int, field: Field) -> Matrix:
    """Columns e1, e3, ..., e_{k-1}, e2, e4 - e3, e6 - e5, ..., e_k - e_{k-1}."""
    if k < 4 or k % 2:
        raise InvalidK(f"k must be even and >= 4, got {k}")
    cols = [basis_vector(field, k, i - 1) for i in range(1, k, 2)] + [basis_vector(field, k, 1)]
    for m in range(2, k // 2 + 1):
        v = [0] * k
        v[2 * m - 1], v[2 * m - 2] = 1, field(-1)
        cols.append(tuple(v))
    return Matrix.from_columns(field, cols, nrows=k)


def q5_indices() -> list:
    return [1, 4, 3, 6, 2, 5]


def factor_single_block(k: int, field: Field) -> NormalFormFactorization:
    """Normal form for ``J_k(0)`` alone (k != 2)."""
    if k == 2:
        raise UnsupportedSize("a lone J_2(0) has no nilpotent factorization")
    if k < 1:
        raise InvalidK(f"k must be positive, got {k}")
    J = jordan_block(field, k)
    if k == 1:
        z = _z(field, 1)
        return NormalFormFactorization(z, z, LastRow.ZERO, Matrix.identity(field, 1), J)
    left, right = single_block_factors(k, field)
    if k % 2:
        Q, flag = _perm(field, q3_indices(k)), LastRow.ZERO
    else:
        Q, flag = q4_matrix(k, field), LastRow.E1T
    return NormalFormFactorization(left.conjugate(Q), right.conjugate(Q), flag, Q, J)


def factor_pair(k: int, field: Field) -> NormalFormFactorization:
    """Normal form for ``Dg[J_k(0), J_2(0)]``; odd k >= 3 is conjugated by Q1."""
    N1, N2 = factor_jk_j2(k, field)
    J = block_diag(jordan_block(field, k), jordan_block(field, 2))
    if k >= 3 and k % 2:
        Q = q1_matrix(k, field)
        return NormalFormFactorization(N1.conjugate(Q), N2.conjugate(Q), LastRow.ZERO, Q, J)
    return NormalFormFactorization(N1, N2, LastRow.ZERO, Matrix.identity(field, k + 2), J)


def triple_j2_factors(field: Field) -> tuple:
    """Unconjugated pair with product ``Dg[J_2, J_2, J_2]``."""
    J2, E11, z = jordan_block(field, 2), matrix_unit(field, 2, 0, 0), _z(field, 2)
    corner = Matrix(field, [[0, 0], [0, 1]])
    left = block_assemble([[z, z, corner], [J2, z, z], [z, J2, z]])
    right = block_assemble([[z, E11, z], [z, z, E11], [J2, z, z]])
    return left, right


def factor_triple_j2(field: Field) -> NormalFormFactorization:
    left, right = triple_j2_factors(field)
    J = jordan_from_sizes(field, (2, 2, 2))
    Q = _perm(field, q5_indices())
    return NormalFormFactorization(left.conjugate(Q), right.conjugate(Q), LastRow.ZERO, Q, J)


# -- whole partitions -----------------------------------------------------


def group_blocks(partition: NilpotentPartition) -> list:
    """Split the block sizes into factorable groups.

    J_2 blocks are paired two at a time.  An odd J_2 left over is attached
    to the largest block of another size; when every block is a J_2 and
    their count is odd, three of them form a triple.  Other blocks stand
    alone.
    """
    sizes = list(partition.sizes)
    if sizes == [2]:
        raise ExceptionalCase("a single J_2(0) is not a product of two nilpotent matrices")
    twos = sizes.count(2)
    others = [s for s in sizes if s != 2]
    groups = []
    if twos % 2:
        if others:
            groups.append((others.pop(0), 2))
        else:
            groups.append((2, 2, 2))
            twos -= 2
        twos -= 1
    groups.extend((s,) for s in others)
    groups.extend((2, 2) for _ in range(twos // 2))
    return groups


def _factor_group(group: tuple, field: Field) -> NormalFormFactorization:
    if len(group) == 1:
        return factor_single_block(group[0], field)
    if group == (2, 2, 2):
        return factor_triple_j2(field)
    return factor_pair(group[0], field)


def _reorder_similarity(field: Field, sizes: Sequence[int], groups: Sequence[tuple]) -> Matrix:
    """Permutation R with ``R^{-1} J R`` = blocks laid out in group order."""
    offsets = {}
    pos = 0
    for s in sizes:
        offsets.setdefault(s, []).append(pos)
        pos += s
    order = []
    for g in groups:
        for s in g:
            start = offsets[s].pop(0)
            order.extend(range(start, start + s))
    return permutation_matrix(field, order)


def factor_nilpotent_normal_form(partition: NilpotentPartition, field: Field) -> NormalFormFactorization:
    """Normal-form factorization of a matrix similar to the partition's Jordan matrix.

    Group factorizations are placed block-diagonally.  Each group's left
    factor has zero first row and last column, so the assembled left factor
    does too.  When the last group ends with ``e_1^T`` in a position other
    than the first column, a transposition moves that entry to column 1;
    the moved row of the left factor is a group's first row, hence zero.
    """
    if not isinstance(partition, NilpotentPartition):
        partition = NilpotentPartition(tuple(partition))
    n = partition.n
    J = partition.jordan_matrix(field)
    if n == 0:
        z = _z(field, 0)
        return NormalFormFactorization(z, z, LastRow.ZERO, Matrix.identity(field, 0), J)
    groups = group_blocks(partition)
    parts = [_factor_group(g, field) for g in groups]
    left = block_diag(*(p.left for p in parts))
    right = block_diag(*(p.right for p in parts))
    Q = _reorder_similarity(field, partition.sizes, groups) @ block_diag(*(p.similarity for p in parts))
    flag = parts[-1].right_last_row
    if flag is LastRow.E1T:
        s = n - parts[-1].n
        if s:
            order = list(range(n))
            order[0], order[s] = s, 0
            P = permutation_matrix(field, order)
            left, right, Q = P @ left @ P, P @ right @ P, Q @ P
    nf = NormalFormFactorization(left, right, flag, Q, J)
    if left @ right != nf.target:
        raise CertificateError(f"normal form for {partition.sizes} does not reproduce its target")
    return nf
