"""Diagonalizable subgroups of the diagonal torus.

A subgroup is identified by its ambient dimension and the row lattice of a
defining exponent matrix.  This module answers equality, isomorphism type,
and conjugacy questions under GL_n / the monomial group, the polynomial
automorphism group (codimension one), and the full birational group, with
explicit witnesses and canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatch, NotPrimitive, ZeroVector
from .intmat import IntMatrix, inverse_unimodular, smith_normal_form
from .lattice import RowLattice, equal, lattice_of, permuted_equal


@dataclass(frozen=True)
class DiagSubgroup:
    """The joint kernel of the characters given by the rows of a matrix."""

    ambient_dim: int
    lattice: RowLattice

    def __post_init__(self) -> None:
        if self.lattice.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("lattice ambient dimension mismatch")

    @classmethod
    def from_matrix(cls, a: IntMatrix) -> "DiagSubgroup":
        return cls(a.cols, lattice_of(a))

    @classmethod
    def from_weights(cls, weights) -> "DiagSubgroup":
        weights = tuple(int(x) for x in weights)
        return cls.from_matrix(IntMatrix.from_rows([weights], len(weights)))


@dataclass(frozen=True)
class IsoType:
    """Torus rank plus nontrivial invariant factors; a complete isomorphism
    invariant of a diagonalizable group."""

    torus_rank: int
    factors: tuple[int, ...]

    @property
    def is_finite(self) -> bool:
        return self.torus_rank == 0

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        out = 1
        for d in self.factors:
            out *= d
        return out


@dataclass(frozen=True)
class CanonicalCrn:
    """The canonical birational-conjugacy representative inside the torus:
    rows d_1 e_{r+1}, ..., d_s e_{r+s}, e_{r+s+1}, ..., e_n."""

    r: int
    factors: tuple[int, ...]
    canonical_matrix: IntMatrix

    def subgroup(self) -> DiagSubgroup:
        return DiagSubgroup.from_matrix(self.canonical_matrix)


def dimension(g: DiagSubgroup) -> int:
    return g.ambient_dim - g.lattice.rank


def iso_type(g: DiagSubgroup) -> IsoType:
    from .intmat import invariant_factors

    facs = invariant_factors(g.lattice.basis)
    return IsoType(g.ambient_dim - g.lattice.rank,
                   tuple(d for d in facs if d > 1))


def subgroups_equal(g1: DiagSubgroup, g2: DiagSubgroup) -> bool:
    if g1.ambient_dim != g2.ambient_dim:
        raise DimensionMismatch("subgroups live in different ambient tori")
    return equal(g1.lattice, g2.lattice)


def conjugate_in_gl(g1: DiagSubgroup, g2: DiagSubgroup):
    """Witness permutation for GL_n-conjugacy (equivalently monomial), or None.

    Conjugation by a monomial map permutes the coordinate characters, so the
    subgroups are conjugate exactly when a column permutation matches the
    defining row lattices.
    """
    if g1.ambient_dim != g2.ambient_dim:
        raise DimensionMismatch("subgroups live in different ambient tori")
    return permuted_equal(g1.lattice.basis, g2.lattice.basis)


def conjugate_in_crn(g1: DiagSubgroup, g2: DiagSubgroup) -> bool:
    """Birational conjugacy holds exactly for equal isomorphism types."""
    if g1.ambient_dim != g2.ambient_dim:
        raise DimensionMismatch("subgroups live in different ambient tori")
    return iso_type(g1) == iso_type(g2)


def _padded_basis(g: DiagSubgroup, m: int) -> IntMatrix:
    rows = list(g.lattice.basis.entries)
    while len(rows) < m:
        rows.append(tuple(0 for _ in range(g.ambient_dim)))
    return IntMatrix(m, g.ambient_dim, tuple(rows))


def crn_conjugator(g1: DiagSubgroup, g2: DiagSubgroup):
    """Unimodular exponent matrix of a monomial birational conjugator, or None.

    With S = U_A A V_A = U_B B V_B (same Smith form once the bases are padded
    to a common row count), M = V_A V_B^-1 satisfies
    transform(g1.lattice, M) = g2.lattice.
    """
    if not conjugate_in_crn(g1, g2):
        return None
    n = g1.ambient_dim
    m = max(g1.lattice.rank, g2.lattice.rank)
    if m == 0:
        return IntMatrix.identity(n)
    a = _padded_basis(g1, m)
    b = _padded_basis(g2, m)
    da = smith_normal_form(a)
    db = smith_normal_form(b)
    return da.V @ inverse_unimodular(db.V)


def crn_canonical(g: DiagSubgroup) -> CanonicalCrn:
    """Canonical representative of the birational conjugacy class."""
    n = g.ambient_dim
    t = iso_type(g)
    r = t.torus_rank
    s = len(t.factors)
    rows = []
    for i, d in enumerate(t.factors):
        rows.append(tuple(d if j == r + i else 0 for j in range(n)))
    for j in range(r + s, n):
        rows.append(tuple(1 if k == j else 0 for k in range(n)))
    return CanonicalCrn(r, t.factors, IntMatrix(len(rows), n, tuple(rows)))


def codim1_canonical(weights):
    """Canonical weight vector for codimension-one subgroups under polynomial
    automorphisms: the lexicographically smaller of the ascending sorts of the
    vector and its negation.  The result is weakly increasing and lex-at-most
    its negated reversal."""
    weights = tuple(int(x) for x in weights)
    if not any(weights):
        raise ZeroVector("weight vector must be nonzero")
    up = tuple(sorted(weights))
    down = tuple(sorted(-x for x in weights))
    return min(up, down)


def crn_codim1_canonical(weights):
    """Canonical birational representative of a codimension-one subgroup:
    the kernel of the d-th power of the last coordinate character, d = gcd."""
    weights = tuple(int(x) for x in weights)
    if not any(weights):
        raise ZeroVector("weight vector must be nonzero")
    d = 0
    for x in weights:
        d = gcd(d, x)
    return tuple(0 for _ in weights[:-1]) + (d,)


def torus_equal_1dim(weights, other) -> bool:
    """Equality of one-dimensional subtori given by primitive weight vectors."""
    weights = tuple(int(x) for x in weights)
    other = tuple(int(x) for x in other)
    for v in (weights, other):
        g = 0
        for x in v:
            g = gcd(g, x)
        if g != 1:
            raise NotPrimitive("entries must have gcd 1")
    return weights == other or weights == tuple(-x for x in other)


def aut3_torus_canonical(weights):
    """Canonical representative of a one-dimensional torus in dimension three,
    unique under coordinate permutation and global sign."""
    weights = tuple(int(x) for x in weights)
    if len(weights) != 3:
        raise DimensionMismatch("expected a 3-vector")
    if not any(weights):
        raise ZeroVector("weight vector must be nonzero")
    g = 0
    for x in weights:
        g = gcd(g, x)
    if g != 1:
        raise NotPrimitive("entries must have gcd 1")
    return codim1_canonical(weights)
