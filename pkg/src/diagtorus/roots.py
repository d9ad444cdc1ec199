"""Roots and root vectors of affine n-space with respect to the diagonal
torus and its determinant-one subtorus.

A root vector is the monomial derivation x^l d/dx_i with l >= 0 and l_i = 0;
its root is the character with exponent vector l - e_i.  Relative to the
determinant-one subtorus, roots are classes modulo Z*(1, ..., 1) and are
stored via the representative whose minimum entry is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

DN = "Dn"
DN_STAR = "Dn_star"


@dataclass(frozen=True)
class RootVector:
    """The derivation x_1^{l_1} ... x_n^{l_n} d/dx_i (coefficient 1)."""

    i: int
    l: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.i <= len(self.l):
            raise ValueError("index out of range")
        if any(x < 0 for x in self.l):
            raise ValueError("exponents must be nonnegative")
        if self.l[self.i - 1] != 0:
            raise ValueError("the differentiated coordinate must have exponent 0")


@dataclass(frozen=True)
class Root:
    exponents: tuple[int, ...]
    relative_to: str


def enumerate_root_vectors(n: int, max_degree: int) -> list[RootVector]:
    """All root vectors of total degree at most max_degree, in lexicographic
    order of (i, l)."""
    if n < 1 or max_degree < 0:
        raise ValueError("need n >= 1 and max_degree >= 0")
    out = []
    for i in range(1, n + 1):
        for l in product(range(max_degree + 1), repeat=n):
            if l[i - 1] == 0 and sum(l) <= max_degree:
                out.append(RootVector(i, l))
    return out


def root_of(rv: RootVector, relative_to: str = DN) -> Root:
    """The character by which the torus scales the derivation."""
    if relative_to not in (DN, DN_STAR):
        raise ValueError(f"unknown group tag: {relative_to!r}")
    exps = list(rv.l)
    exps[rv.i - 1] -= 1
    if relative_to == DN_STAR:
        low = min(exps)
        exps = [x - low for x in exps]
    return Root(tuple(exps), relative_to)


def apply_derivation(rv: RootVector, monomial):
    """Apply the root vector to the monomial x^m.

    Returns (coefficient, exponent vector) or None when the derivation kills
    the monomial.
    """
    m = tuple(int(x) for x in monomial)
    if len(m) != len(rv.l):
        raise ValueError("monomial length mismatch")
    if any(x < 0 for x in m):
        raise ValueError("monomial exponents must be nonnegative")
    k = m[rv.i - 1]
    if k == 0:
        return None
    out = [a + b for a, b in zip(m, rv.l)]
    out[rv.i - 1] -= 1
    return k, tuple(out)


def weyl_action(sigma, rv: RootVector) -> RootVector:
    """Transport a root vector along a coordinate permutation.

    sigma is a 0-based image tuple; the new derivation differentiates the
    sigma-image of the old coordinate and carries the exponents along.
    """
    n = len(rv.l)
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(n)):
        raise ValueError("not a permutation")
    new_l = [0] * n
    for j in range(n):
        new_l[sigma[j]] = rv.l[j]
    return RootVector(sigma[rv.i - 1] + 1, tuple(new_l))


def root_vector_count(n: int, max_degree: int) -> int:
    """Closed-form count: n * C(max_degree + n - 1, n - 1)."""
    return n * comb(max_degree + n - 1, n - 1)
