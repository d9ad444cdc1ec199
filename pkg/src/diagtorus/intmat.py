"""Exact integer matrix arithmetic.

Smith normal form with unimodular witnesses, row-style Hermite reduction,
rank, determinants, and maximal minors.  Everything runs on Python's
arbitrary-precision integers; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import NotUnimodular, RankDeficient

Row = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """An immutable m x n integer matrix (m >= 0, n >= 1)."""

    rows: int
    cols: int
    entries: tuple[Row, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 1:
            raise ValueError("need rows >= 0 and cols >= 1")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged row")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("cols required for an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        if n == 0:
            # degenerate witness for a 0-row operand; cols >= 1 is enforced
            # elsewhere, so model the empty identity as 0 x 1 with no rows
            return cls(0, 1, ())
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n))
                               for i in range(n)))

    @classmethod
    def zero(cls, m: int, n: int) -> "IntMatrix":
        return cls(m, n, tuple(tuple(0 for _ in range(n)) for _ in range(m)))

    def row(self, i: int) -> Row:
        return self.entries[i]

    def column(self, j: int) -> Row:
        return tuple(r[j] for r in self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            if self.rows == 0:
                return IntMatrix(0, other.cols, ())
            raise ValueError("shape mismatch in matrix product")
        out = []
        for r in self.entries:
            out.append(tuple(sum(r[k] * other.entries[k][j] for k in range(self.cols))
                             for j in range(other.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not a.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unimodular(a: IntMatrix) -> bool:
    return a.is_square() and abs(determinant(a)) == 1


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix; exact, with integer entries."""
    if not is_unimodular(a):
        raise NotUnimodular("matrix is not square with determinant +-1")
    n = a.rows
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a.entries)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if work[i][col] != 0)
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    inv = tuple(tuple(int(work[i][n + j]) for j in range(n)) for i in range(n))
    return IntMatrix(n, n, inv)


@dataclass(frozen=True)
class SmithDecomposition:
    """S = U @ A @ V with U, V unimodular and S in Smith normal form."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    factors: tuple[int, ...]


class _Worksheet:
    """Mutable elimination state; row ops mirror on u, column ops on v."""

    def __init__(self, a: IntMatrix, witnesses: bool):
        self.a = a.to_lists()
        self.m = a.rows
        self.n = a.cols
        self.u = [[int(i == j) for j in range(self.m)] for i in range(self.m)] if witnesses else None
        self.v = [[int(i == j) for j in range(self.n)] for i in range(self.n)] if witnesses else None

    def swap_rows(self, i, j):
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        if self.u is not None:
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        if self.v is not None:
            for row in self.v:
                row[i], row[j] = row[j], row[i]

    def row_submul(self, i, j, q):
        self.a[i] = [x - q * y for x, y in zip(self.a[i], self.a[j])]
        if self.u is not None:
            self.u[i] = [x - q * y for x, y in zip(self.u[i], self.u[j])]

    def col_submul(self, i, j, q):
        for row in self.a:
            row[i] -= q * row[j]
        if self.v is not None:
            for row in self.v:
                row[i] -= q * row[j]

    def row_add(self, i, j):
        self.a[i] = [x + y for x, y in zip(self.a[i], self.a[j])]
        if self.u is not None:
            self.u[i] = [x + y for x, y in zip(self.u[i], self.u[j])]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        if self.u is not None:
            self.u[i] = [-x for x in self.u[i]]

    def min_pivot(self, t):
        piv = None
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                x = self.a[i][j]
                if x and (best is None or abs(x) < best):
                    piv, best = (i, j), abs(x)
        return piv


def _smith_diagonalize(w: _Worksheet) -> int:
    """Bring the worksheet to Smith form; returns the rank."""
    t = 0
    while t < min(w.m, w.n):
        piv = w.min_pivot(t)
        if piv is None:
            break
        w.swap_rows(t, piv[0])
        w.swap_cols(t, piv[1])
        while True:
            p = w.a[t][t]
            dirty = False
            for i in range(t + 1, w.m):
                if w.a[i][t]:
                    w.row_submul(i, t, w.a[i][t] // p)
                    if w.a[i][t]:
                        dirty = True
            for j in range(t + 1, w.n):
                if w.a[t][j]:
                    w.col_submul(j, t, w.a[t][j] // p)
                    if w.a[t][j]:
                        dirty = True
            if dirty:
                piv = w.min_pivot(t)
                w.swap_rows(t, piv[0])
                w.swap_cols(t, piv[1])
                continue
            p = w.a[t][t]
            bad = None
            for i in range(t + 1, w.m):
                if any(x % p for x in w.a[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            # pull a non-multiple into the working row and keep reducing;
            # this is what enforces the divisibility chain
            w.row_add(t, bad)
        t += 1
    rank = t
    for i in range(rank):
        if w.a[i][i] < 0:
            w.negate_row(i)
    return rank


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular witnesses: S = U @ A @ V."""
    w = _Worksheet(a, witnesses=True)
    r = _smith_diagonalize(w)
    S = IntMatrix(a.rows, a.cols, tuple(tuple(row) for row in w.a))
    U = IntMatrix.from_rows(w.u, a.rows) if a.rows else IntMatrix.identity(0)
    V = IntMatrix.from_rows(w.v, a.cols)
    factors = tuple(w.a[i][i] for i in range(r))
    return SmithDecomposition(U, S, V, factors)


def invariant_factors(a: IntMatrix) -> tuple[int, ...]:
    """Invariant factors only; skips the U/V bookkeeping for speed."""
    w = _Worksheet(a, witnesses=False)
    r = _smith_diagonalize(w)
    return tuple(w.a[i][i] for i in range(r))


def hermite_normal_form(a: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form of the row lattice of a.

    Zero rows are removed, pivots are positive and strictly right-shifting
    downward, and entries above each pivot are reduced into [0, pivot).
    """
    m, n = a.rows, a.cols
    work = a.to_lists()
    r = 0
    for col in range(n):
        while True:
            nz = [i for i in range(r, m) if work[i][col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(work[i][col]))
            base = nz[0]
            for i in nz[1:]:
                q = work[i][col] // work[base][col]
                work[i] = [x - q * y for x, y in zip(work[i], work[base])]
        nz = [i for i in range(r, m) if work[i][col]]
        if not nz:
            continue
        work[r], work[nz[0]] = work[nz[0]], work[r]
        if work[r][col] < 0:
            work[r] = [-x for x in work[r]]
        p = work[r][col]
        for k in range(r):
            q = work[k][col] // p
            if q:
                work[k] = [x - q * y for x, y in zip(work[k], work[r])]
        r += 1
    return IntMatrix(r, n, tuple(tuple(row) for row in work[:r]))


def rank(a: IntMatrix) -> int:
    return hermite_normal_form(a).rows


def pluecker_coordinates(a: IntMatrix) -> dict[tuple[int, ...], int]:
    """Maximal minors of a full-row-rank matrix, keyed by 1-based column tuples."""
    m = a.rows
    if m == 0:
        return {(): 1}
    if rank(a) < m:
        raise RankDeficient("matrix does not have full row rank")
    coords: dict[tuple[int, ...], int] = {}
    for cols in combinations(range(a.cols), m):
        sub = IntMatrix(m, m, tuple(tuple(row[j] for j in cols) for row in a.entries))
        coords[tuple(j + 1 for j in cols)] = determinant(sub)
    return coords
