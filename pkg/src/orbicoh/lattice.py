"""Exact integer and rational linear algebra.

Matrix entries are Python ints (arbitrary precision) and all rational work
uses :class:`fractions.Fraction`.  Nothing in this module, or anywhere else
in the package, touches floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularMatrixError


class IntMatrix:
    """Immutable dense integer matrix, stored as a tuple of row tuples.

    ``ncols`` must be passed explicitly when constructing a matrix with no
    rows; otherwise it is inferred from the first row.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("rows of unequal length")
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row length")
            ncols = width
        elif ncols is None:
            raise ValueError("ncols required for a matrix with no rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), ncols=n)

    @classmethod
    def from_columns(cls, columns, nrows=None):
        columns = [tuple(c) for c in columns]
        if columns:
            nrows = len(columns[0])
        elif nrows is None:
            raise ValueError("nrows required for a matrix with no columns")
        return cls(tuple(zip(*columns)) if columns else ((),) * nrows, ncols=len(columns))

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def transpose(self):
        return IntMatrix.from_columns(self.rows, nrows=self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, other.column(j))) for j in range(other.ncols))
                for row in self.rows
            ),
            ncols=other.ncols,
        )

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        return "IntMatrix(%r)" % (list(map(list, self.rows)),)

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def det(self):
        """Determinant by the Bareiss fraction-free elimination."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        m = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SNFDecomposition:
    """Smith normal form data: ``D = U @ A @ V`` with U, V unimodular and D
    diagonal with nonnegative entries, each dividing the next."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self):
        return self.D.diagonal()

    def elementary_divisors(self):
        return tuple(d for d in self.diagonal() if d != 0)


def snf(a: IntMatrix) -> SNFDecomposition:
    """Smith normal form by row/column reduction.

    Pivots on a minimal-absolute-value nonzero entry of the working
    submatrix, breaking ties by smallest row index then smallest column
    index, so the output is deterministic for a fixed input.
    """
    n, m = a.nrows, a.ncols
    d = [list(row) for row in a.rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row_dst += q * row_src, on d and u alike
        drow, srow = d[dst], d[src]
        for k in range(m):
            drow[k] += q * srow[k]
        urow, usrc = u[dst], u[src]
        for k in range(n):
            urow[k] += q * usrc[k]

    def add_col(src, dst, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(n, m)):
        while True:
            pivot = None
            best = None
            for i in range(t, n):
                for j in range(t, m):
                    val = abs(d[i][j])
                    if val and (best is None or val < best):
                        best, pivot = val, (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            if d[t][t] < 0:
                negate_row(t)
            p = d[t][t]

            dirty = False
            for r in range(t + 1, n):
                if d[r][t]:
                    add_row(t, r, -(d[r][t] // p))
                    if d[r][t]:
                        dirty = True
            if dirty:
                continue
            for c in range(t + 1, m):
                if d[t][c]:
                    add_col(t, c, -(d[t][c] // p))
                    if d[t][c]:
                        dirty = True
            if dirty:
                continue

            # The pivot must divide every remaining entry; if not, fold the
            # offending row into row t and reduce again.
            offender = None
            for i in range(t + 1, n):
                if any(d[i][j] % p for j in range(t + 1, m)):
                    offender = i
                    break
            if offender is None:
                break
            add_row(offender, t, 1)

    return SNFDecomposition(IntMatrix(u, ncols=n), IntMatrix(d, ncols=m), IntMatrix(v, ncols=m))


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """An integral basis of ker(a), saturated in the ambient lattice.

    The basis is read off the right change-of-basis matrix of the Smith
    form: the columns of V whose diagonal entry of D vanishes.  Columns of a
    unimodular matrix are automatically a direct summand, so no separate
    saturation pass is needed.
    """
    dec = snf(a)
    zero_cols = [
        j for j in range(a.ncols) if j >= a.nrows or dec.D.rows[j][j] == 0
    ]
    return IntMatrix.from_columns([dec.V.column(j) for j in zero_cols], nrows=a.ncols)


def is_free_cokernel(a: IntMatrix) -> bool:
    """True iff every nonzero elementary divisor of ``a`` equals 1."""
    return all(d == 1 for d in snf(a).elementary_divisors())


def solve_congruence_group(bv: IntMatrix) -> list[tuple[Fraction, ...]]:
    """All vectors a in [0,1)^n with ``bv @ a`` integral, sorted
    lexicographically.

    With D = U @ bv @ V, the condition is equivalent to D @ c integral for
    c = V^-1 a, so the solutions are exactly a = V @ c mod 1 with
    c_i in {0, 1/d_i, ..., (d_i - 1)/d_i}.  They form a group of order
    |det bv| under componentwise addition mod 1.
    """
    if bv.nrows != bv.ncols:
        raise ValueError("expected a square matrix")
    n = bv.nrows
    dec = snf(bv)
    diag = dec.diagonal()
    if any(d == 0 for d in diag):
        raise SingularMatrixError("matrix has determinant 0")
    out = set()
    for ks in itertools.product(*[range(d) for d in diag]):
        c = [Fraction(k, d) for k, d in zip(ks, diag)]
        a = tuple(
            sum((Fraction(dec.V.rows[i][j]) * c[j] for j in range(n)), Fraction(0)) % 1
            for i in range(n)
        )
        out.add(a)
    return sorted(out)


def rational_solve(rows, rhs):
    """Solve the square system rows @ x = rhs over the rationals.

    Returns a list of Fractions, or None when the matrix is singular.
    Pivoting takes the first nonzero entry in each column, so the
    elimination is deterministic.
    """
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def rational_rank(rows) -> int:
    """Rank of a rational matrix given as nested lists."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        work[rank] = [x / pv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
        rank += 1
    return rank


def rational_kernel(rows, ncols=None):
    """Basis of the right kernel of a rational matrix, as Fraction lists."""
    if not rows and ncols is None:
        raise ValueError("ncols required for a matrix with no rows")
    ncols = len(rows[0]) if rows else ncols
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        work[rank] = [x / pv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][f]
        basis.append(vec)
    return basis
