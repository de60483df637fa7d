"""Dense exact matrices over a :class:`~nilfactor.field.Field`.

Entries are raw field values (see :mod:`nilfactor.field`).  Vectors are
plain tuples of raw values.  All indices are 0-based.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from operator import mul
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, FieldMismatch, SingularMatrix
from .field import Field, Raw

Vector = tuple


class Matrix:
    """Immutable dense matrix with exact entrywise equality."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable], ncols: Optional[int] = None):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def _raw(cls, field: Field, rows, nrows: int, ncols: int) -> "Matrix":
        # trusted constructor: rows must already be tuples of reduced values
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.nrows = nrows
        m.ncols = ncols
        return m

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: Optional[int] = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls._raw(field, tuple((0,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return cls._raw(field, rows, n, n)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: Optional[int] = None) -> "Matrix":
        if nrows is None:
            if not columns:
                raise DimensionMismatch("cannot infer row count of an empty column list")
            nrows = len(columns[0])
        if any(len(c) != nrows for c in columns):
            raise DimensionMismatch("columns of unequal length")
        cols = [tuple(field(x) for x in c) for c in columns]
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls._raw(field, rows, nrows, len(cols))

    @classmethod
    def diag(cls, field: Field, values: Sequence) -> "Matrix":
        n = len(values)
        vals = [field(v) for v in values]
        rows = tuple(tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n))
        return cls._raw(field, rows, n, n)

    # -- basic access -----------------------------------------------------

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list:
        return [tuple(c) for c in zip(*self.rows)] if self.nrows else [()] * self.ncols

    def to_lists(self) -> list:
        return [list(r) for r in self.rows]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        """Rows ``r0:r1`` and columns ``c0:c1``."""
        rows = tuple(r[c0:c1] for r in self.rows[r0:r1])
        return Matrix._raw(self.field, rows, max(0, r1 - r0), max(0, c1 - c0))

    def with_entries(self, updates: dict) -> "Matrix":
        """Copy with ``{(i, j): value}`` overwritten."""
        rows = [list(r) for r in self.rows]
        for (i, j), v in updates.items():
            rows[i][j] = self.field(v)
        return Matrix._raw(self.field, tuple(map(tuple, rows)), self.nrows, self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, [{body}])"

    def __str__(self):
        if not self.nrows or not self.ncols:
            return f"[{self.nrows}x{self.ncols} empty]"
        cells = [[self.field.format(x) for x in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        red = self.field.reduce
        rows = tuple(tuple(red(a + b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return Matrix._raw(self.field, rows, self.nrows, self.ncols)

    def __neg__(self) -> "Matrix":
        red = self.field.reduce
        rows = tuple(tuple(red(-a) for a in r) for r in self.rows)
        return Matrix._raw(self.field, rows, self.nrows, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        red = self.field.reduce
        rows = tuple(tuple(red(c * a) for a in r) for r in self.rows)
        return Matrix._raw(self.field, rows, self.nrows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        red = self.field.reduce
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        if self.field.characteristic == 0:
            rows = _rational_product(self.rows, cols)
        else:
            rows = tuple(tuple(red(sum(map(mul, r, c))) for c in cols) for r in self.rows)
        return Matrix._raw(self.field, rows, self.nrows, other.ncols)

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product ``A v``."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"{self.shape} applied to length {len(v)}")
        red = self.field.reduce
        return tuple(red(sum(map(mul, r, v))) for r in self.rows)

    def __pow__(self, e: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    @property
    def T(self) -> "Matrix":
        rows = tuple(zip(*self.rows)) if self.nrows else tuple(() for _ in range(self.ncols))
        return Matrix._raw(self.field, rows, self.ncols, self.nrows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_scalar(self) -> bool:
        if not self.is_square:
            return False
        if self.nrows == 0:
            return True
        c = self.rows[0][0]
        return all(x == (c if i == j else 0) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def is_lower_triangular(self, strict: bool = False) -> bool:
        off = 0 if strict else 1
        return all(self.rows[i][j] == 0 for i in range(self.nrows) for j in range(i + off, self.ncols))

    def is_upper_triangular(self, strict: bool = False) -> bool:
        return self.T.is_lower_triangular(strict)

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple:
        """Reduced row echelon form and the list of pivot columns.

        Pivots are the first nonzero entry in column order; no magnitude
        heuristics.
        """
        f = self.field
        if f.characteristic == 0:
            rows, pivots = _rational_rref(self.rows, self.nrows, self.ncols)
            return Matrix._raw(f, rows, self.nrows, self.ncols), pivots
        red, inv = f.reduce, f.inv
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            p = next((i for i in range(r, self.nrows) if rows[i][c] != 0), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            piv = rows[r]
            s = inv(piv[c])
            if s != 1:
                piv[:] = [red(x * s) for x in piv]
            for i in range(self.nrows):
                if i != r:
                    t = rows[i][c]
                    if t != 0:
                        rows[i] = [red(x - t * y) for x, y in zip(rows[i], piv)]
            pivots.append(c)
            r += 1
        return Matrix._raw(f, tuple(map(tuple, rows)), self.nrows, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list:
        """Basis of the null space from the reduced echelon parameterization.

        One vector per free column, with a 1 in that column.  Empty when the
        columns are independent.
        """
        R, pivots = self.rref()
        red = self.field.reduce
        pivset = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivset:
                continue
            v = [0] * self.ncols
            v[free] = 1
            for i, pc in enumerate(pivots):
                v[pc] = red(-R.rows[i][free])
            basis.append(tuple(v))
        return basis

    def column_space_basis(self) -> list:
        """The pivot columns of ``self`` (a basis of its range)."""
        _, pivots = self.rref()
        return [self.column(c) for c in pivots]

    def solve(self, b: Sequence) -> Optional[Vector]:
        """Some x with ``A x = b``, or ``None`` when the system is inconsistent."""
        if len(b) != self.nrows:
            raise DimensionMismatch(f"{self.shape} system with rhs of length {len(b)}")
        f = self.field
        aug = Matrix._raw(
            f, tuple(r + (f(x),) for r, x in zip(self.rows, b)), self.nrows, self.ncols + 1
        )
        R, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [0] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = R.rows[i][self.ncols]
        return tuple(x)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        f = self.field
        aug = Matrix._raw(
            f,
            tuple(r + tuple(1 if i == j else 0 for j in range(n)) for i, r in enumerate(self.rows)),
            n,
            2 * n,
        )
        R, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise SingularMatrix("matrix is not invertible")
        return Matrix._raw(f, tuple(r[n:] for r in R.rows), n, n)

    def det(self) -> Raw:
        if not self.is_square:
            raise DimensionMismatch("determinant of a non-square matrix")
        f = self.field
        red, inv = f.reduce, f.inv
        rows = [list(r) for r in self.rows]
        n = self.nrows
        d = 1
        for c in range(n):
            p = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if p is None:
                return 0
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                d = -d
            piv = rows[c][c]
            d = red(d * piv)
            s = inv(piv)
            for i in range(c + 1, n):
                t = rows[i][c]
                if t != 0:
                    t = red(t * s)
                    rows[i] = [red(x - t * y) for x, y in zip(rows[i], rows[c])]
        return red(d)

    def conjugate(self, Q: "Matrix") -> "Matrix":
        """``Q^{-1} A Q``."""
        return Q.inverse() @ self @ Q

    def is_nilpotent(self) -> bool:
        """True iff ``A^m = 0`` for some ``m >= n``, by repeated squaring."""
        if not self.is_square:
            raise DimensionMismatch("nilpotency of a non-square matrix")
        P, e = self, 1
        while e < self.nrows:
            P = P @ P
            e *= 2
        return P.is_zero()

    def nilpotency_index(self) -> Optional[int]:
        """Least m with ``A^m = 0``, or ``None`` if A is not nilpotent."""
        n = self.nrows
        P = Matrix.identity(self.field, n)
        for m in range(n + 1):
            if P.is_zero():
                return m
            P = P @ self
        return None


def _integer_scaled(vec) -> tuple:
    """``(d, ints)`` with ``vec == ints / d`` and d a positive integer."""
    d = 1
    for x in vec:
        if type(x) is not int:
            d = lcm(d, x.denominator)
    if d == 1:
        return 1, vec
    return d, tuple(int(x * d) for x in vec)


def _rational_product(rows, cols) -> tuple:
    # integer dot products, one division per entry
    rs = [_integer_scaled(r) for r in rows]
    cs = [_integer_scaled(c) for c in cols]
    out = []
    for dr, r in rs:
        row = []
        for dc, c in cs:
            s = sum(map(mul, r, c))
            d = dr * dc
            if d != 1:
                g = gcd(s, d)
                s = s // g if g == d else Fraction(s // g, d // g)
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def _primitive(row: list) -> list:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return row if g in (0, 1) else [x // g for x in row]


def _rational_rref(rows, nrows: int, ncols: int) -> tuple:
    """Fraction-free Gauss-Jordan over QQ; the same output as the generic path."""
    work = [list(_integer_scaled(r)[1]) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        piv = work[r]
        a = piv[c]
        for i in range(nrows):
            if i != r:
                t = work[i][c]
                if t:
                    work[i] = _primitive([a * x - t * y for x, y in zip(work[i], piv)])
        pivots.append(c)
        r += 1
    out = []
    for i, row in enumerate(work):
        if i < len(pivots):
            a = row[pivots[i]]
            row = [x // a if x % a == 0 else Fraction(x, a) for x in row]
        out.append(tuple(row))
    return tuple(out), pivots


class SpanBuilder:
    """Incremental linear-independence tracker over a field.

    ``add(v)`` keeps v when it is independent of everything kept so far.
    """

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self._echelon = []  # (pivot index, normalized reduced row)
        self.kept = []

    def reduce(self, v: Sequence) -> list:
        red = self.field.reduce
        w = list(v)
        for p, row in self._echelon:
            t = w[p]
            if t != 0:
                w = [red(a - t * b) for a, b in zip(w, row)]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x != 0), None)
        if p is None:
            return False
        s = self.field.inv(w[p])
        red = self.field.reduce
        self._echelon.append((p, [red(x * s) for x in w]))
        self.kept.append(tuple(v))
        return True

    def __len__(self):
        return len(self.kept)


# -- free-standing builders ---------------------------------------------


def basis_vector(field: Field, n: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(n))


def matrix_unit(field: Field, n: int, i: int, j: int, ncols: Optional[int] = None) -> Matrix:
    """The matrix with a single 1 at ``(i, j)``."""
    return Matrix.zeros(field, n, ncols).with_entries({(i, j): 1})


def jordan_block(field: Field, k: int) -> Matrix:
    """Nilpotent Jordan block with ones on the subdiagonal."""
    rows = tuple(tuple(1 if i == j + 1 else 0 for j in range(k)) for i in range(k))
    return Matrix._raw(field, rows, k, k)


def block_diag(*blocks: Matrix) -> Matrix:
    if not blocks:
        raise DimensionMismatch("block_diag needs at least one block")
    field = blocks[0].field
    for b in blocks:
        if b.field != field:
            raise FieldMismatch(f"{field} vs {b.field}")
    ncols = sum(b.ncols for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        left, right = (0,) * offset, (0,) * (ncols - offset - b.ncols)
        rows.extend(left + r + right for r in b.rows)
        offset += b.ncols
    return Matrix._raw(field, tuple(rows), len(rows), ncols)


def block_assemble(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a 2-D grid of blocks; block rows/columns must line up."""
    if not grid or not grid[0]:
        raise DimensionMismatch("empty block grid")
    field = grid[0][0].field
    heights = [row[0].nrows for row in grid]
    widths = [b.ncols for b in grid[0]]
    rows = []
    for bi, brow in enumerate(grid):
        if len(brow) != len(widths):
            raise DimensionMismatch("block grid rows differ in length")
        for bj, b in enumerate(brow):
            if b.field != field:
                raise FieldMismatch(f"{field} vs {b.field}")
            if b.shape != (heights[bi], widths[bj]):
                raise DimensionMismatch(f"block ({bi},{bj}) has shape {b.shape}")
        for i in range(heights[bi]):
            rows.append(sum((b.rows[i] for b in brow), ()))
    return Matrix._raw(field, tuple(rows), sum(heights), sum(widths))


def permutation_matrix(field: Field, order: Sequence[int]) -> Matrix:
    """Matrix whose column j is the standard vector ``e_{order[j]}``."""
    n = len(order)
    if sorted(order) != list(range(n)):
        raise ValueError(f"{order} is not a permutation of 0..{n - 1}")
    return Matrix.from_columns(field, [basis_vector(field, n, i) for i in order], nrows=n)


def conjugate(A: Matrix, Q: Matrix) -> Matrix:
    return A.conjugate(Q)


def rank(A: Matrix) -> int:
    return A.rank()


def is_nilpotent(A: Matrix) -> bool:
    return A.is_nilpotent()
