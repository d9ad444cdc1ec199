"""Integer row lattices: membership, equality, and column-permutation matching.

Equality is implemented twice on purpose.  Hermite-basis comparison is the
production path; the Pluecker-coordinate criterion is an independently coded
cross-check, and the two must always agree on full-row-rank inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch, NotUnimodular
from .intmat import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    invariant_factors,
    pluecker_coordinates,
)


@dataclass(frozen=True)
class RowLattice:
    """The subgroup of Z^n generated by the rows of a matrix.

    The stored basis is the Hermite normal form with zero rows removed, so
    two lattices are equal exactly when their bases compare equal.
    """

    ambient_dim: int
    basis: IntMatrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient_dim:
            raise DimensionMismatch("basis width differs from ambient dimension")

    @property
    def rank(self) -> int:
        return self.basis.rows


def lattice_of(a: IntMatrix) -> RowLattice:
    return RowLattice(a.cols, hermite_normal_form(a))


def contains(lat: RowLattice, v) -> bool:
    """True iff v is an integer combination of the basis rows."""
    v = [int(x) for x in v]
    if len(v) != lat.ambient_dim:
        raise DimensionMismatch("vector length differs from ambient dimension")
    for row in lat.basis.entries:
        j = next(k for k, x in enumerate(row) if x)
        if v[j] % row[j]:
            return False
        c = v[j] // row[j]
        if c:
            v = [x - c * y for x, y in zip(v, row)]
    return not any(v)


def equal(lat1: RowLattice, lat2: RowLattice) -> bool:
    if lat1.ambient_dim != lat2.ambient_dim:
        raise DimensionMismatch("lattices live in different ambient dimensions")
    return lat1.basis == lat2.basis


def pluecker_equal(a: IntMatrix, b: IntMatrix) -> bool:
    """Lattice equality decided from maximal minors.

    The two matrices must have full row rank and the same shape.  The test is:
    all Pluecker coordinates agree (possibly after a global sign flip), and for
    one column tuple with nonzero minor the matrix B_I (A_I)^-1 is integral.
    """
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatch("operands must both be m x n")
    pa = pluecker_coordinates(a)
    pb = pluecker_coordinates(b)
    if pa != pb and pa != {k: -x for k, x in pb.items()}:
        return False
    key = next((k for k, x in pa.items() if x), None)
    if key is None:
        return a.rows == 0
    cols = [j - 1 for j in key]
    m = a.rows
    asub = [[Fraction(row[j]) for j in cols] for row in a.entries]
    bsub = [[row[j] for j in cols] for row in b.entries]
    # solve X * asub = bsub and check integrality of X
    aug = [list(r) + [Fraction(int(i == j)) for j in range(m)]
           for i, r in enumerate(asub)]
    for col in range(m):
        pivot = next(i for i in range(col, m) if aug[i][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(m):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    ainv = [[aug[i][m + j] for j in range(m)] for i in range(m)]
    for i in range(m):
        for j in range(m):
            x = sum(bsub[i][k] * ainv[k][j] for k in range(m))
            if x.denominator != 1:
                return False
    return True


def transform(lat: RowLattice, mat: IntMatrix) -> RowLattice:
    """Right-multiply the basis by a unimodular matrix."""
    n = lat.ambient_dim
    if mat.rows != n or mat.cols != n:
        raise DimensionMismatch("transform matrix must be n x n")
    if abs(determinant(mat)) != 1:
        raise NotUnimodular("transform matrix must have determinant +-1")
    if lat.rank == 0:
        return lat
    return lattice_of(lat.basis @ mat)


def _column_gcds(h: IntMatrix, n: int) -> tuple[int, ...]:
    out = []
    for j in range(n):
        g = 0
        for row in h.entries:
            g = gcd(g, row[j])
        out.append(g)
    return tuple(out)


def permuted_equal(a: IntMatrix, b: IntMatrix):
    """Search for a column permutation carrying the lattice of b onto that of a.

    Returns the lexicographically least 0-based permutation p such that the
    matrix with columns (b[:, p[0]], ..., b[:, p[n-1]]) spans the same row
    lattice as a, or None.  Backtracking over column assignments, pruned by
    per-column gcd invariants; worst case is factorial in n.
    """
    if a.cols != b.cols:
        raise DimensionMismatch("operands must have the same column count")
    n = a.cols
    ha = hermite_normal_form(a)
    hb = hermite_normal_form(b)
    if ha.rows != hb.rows:
        return None
    if sorted(invariant_factors(ha)) != sorted(invariant_factors(hb)):
        return None
    ga = _column_gcds(ha, n)
    gb = _column_gcds(hb, n)
    if sorted(ga) != sorted(gb):
        return None
    target = lattice_of(ha)

    def candidates(j, used):
        for k in range(n):
            if k not in used and gb[k] == ga[j]:
                yield k

    perm: list[int] = []
    used: set[int] = set()

    def search() -> bool:
        if len(perm) == n:
            permuted = IntMatrix(hb.rows, n, tuple(tuple(row[k] for k in perm)
                                                   for row in hb.entries))
            return equal(lattice_of(permuted), target)
        j = len(perm)
        for k in candidates(j, used):
            perm.append(k)
            used.add(k)
            if search():
                return True
            used.discard(k)
            perm.pop()
        return False

    if search():
        return tuple(perm)
    return None
