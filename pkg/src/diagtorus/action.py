"""Orbit and stabilizer analysis for a weight-vector subgroup of the torus
acting on affine n-space.

Points are abstracted to zero patterns (the set of vanishing coordinates):
that is the only datum the orbit structure depends on, and it avoids
representing elements of the ground field.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diag import IsoType
from .errors import DimensionMismatch, NotInGroup

ZeroPattern = frozenset


def _check(weights, zeros) -> tuple[tuple[int, ...], frozenset[int]]:
    weights = tuple(int(x) for x in weights)
    zeros = frozenset(int(i) for i in zeros)
    if any(i < 1 or i > len(weights) for i in zeros):
        raise DimensionMismatch("zero pattern indices out of range")
    return weights, zeros


def group_dim(weights) -> int:
    weights = tuple(int(x) for x in weights)
    return len(weights) - (1 if any(weights) else 0)


@dataclass(frozen=True)
class OrbitReport:
    stabilizer: IsoType
    stabilizer_dim: int
    stabilizer_order: int | None
    orbit_dim: int
    closed: bool
    origin_in_closure: bool


@dataclass(frozen=True)
class ActionReport:
    group_dim: int
    stable: bool
    has_nonconstant_invariants: bool
    invariant_monomial: tuple[int, ...] | None
    nonclosed_codim1_orbit_axes: tuple[int, ...]


def stabilizer(weights, zeros) -> IsoType:
    """Isomorphism type of the stabilizer of a point with the given zeros.

    The stabilizer is cut out inside the coordinates of the zero set by one
    character with the restricted weights, so it looks like the weight-vector
    subgroup in dimension |zeros|.
    """
    weights, zeros = _check(weights, zeros)
    restricted = [weights[i - 1] for i in sorted(zeros)]
    if not any(restricted):
        return IsoType(len(restricted), ())
    g = 0
    for x in restricted:
        g = gcd(g, x)
    return IsoType(len(restricted) - 1, (g,) if g > 1 else ())


def is_orbit_closed(weights, zeros) -> bool:
    """Closedness of the orbit through a point with the given zero pattern.

    The orbit fails to be closed exactly when some one-parameter subgroup
    (exponents d with <d, l> = 0, d_j >= 0 off the pattern, some d_j > 0 off
    the pattern) produces a boundary limit.  That reduces to: the orbit is
    closed iff the complement is empty, or the weights vanish on the pattern
    and are nonzero of one sign off it.
    """
    weights, zeros = _check(weights, zeros)
    outside = [weights[j - 1] for j in range(1, len(weights) + 1) if j not in zeros]
    if not outside:
        return True
    if any(weights[i - 1] for i in zeros):
        return False
    if any(x == 0 for x in outside):
        return False
    return all(x > 0 for x in outside) or all(x < 0 for x in outside)


def is_stable(weights) -> bool:
    """The action is stable iff all weights are nonzero of one sign."""
    weights = tuple(int(x) for x in weights)
    if any(x == 0 for x in weights):
        return False
    return all(x > 0 for x in weights) or all(x < 0 for x in weights)


def invariant_monomial(weights):
    """Exponent of a nonconstant invariant monomial, or None.

    A monomial is invariant iff its exponent lies in the weight lattice, so a
    componentwise-nonnegative candidate exists only when the weights do not
    mix signs; the minimal one is +-the weight vector itself.
    """
    weights = tuple(int(x) for x in weights)
    if not any(weights):
        return None
    if all(x >= 0 for x in weights):
        return weights
    if all(x <= 0 for x in weights):
        return tuple(-x for x in weights)
    return None


def limit_pattern(weights, zeros, d):
    """Zero pattern of the limit along the one-parameter subgroup t^d, or None
    when the limit does not exist."""
    weights, zeros = _check(weights, zeros)
    d = tuple(int(x) for x in d)
    if len(d) != len(weights):
        raise DimensionMismatch("exponent vector length mismatch")
    if sum(x * y for x, y in zip(d, weights)):
        raise NotInGroup("<d, l> != 0: not a one-parameter subgroup of the group")
    outside = [j for j in range(1, len(weights) + 1) if j not in zeros]
    if any(d[j - 1] < 0 for j in outside):
        return None
    return zeros | frozenset(j for j in outside if d[j - 1] > 0)


def _one_step_zeroing(weights, zeros):
    """A one-parameter subgroup exponent vector that zeroes every coordinate
    which any single limit from this pattern can zero, or None."""
    n = len(weights)
    outside = [j for j in range(1, n + 1) if j not in zeros]
    if not outside:
        return None
    anchor = next((k for k in sorted(zeros) if weights[k - 1]), None)
    pos = any(weights[j - 1] > 0 for j in outside)
    neg = any(weights[j - 1] < 0 for j in outside)
    d = [0] * n
    if anchor is not None or (pos and neg):
        if anchor is not None:
            # balance everything outside against the anchored coordinate
            la = weights[anchor - 1]
            for j in outside:
                d[j - 1] = abs(la)
            total = sum(abs(la) * weights[j - 1] for j in outside)
            d[anchor - 1] = -total // la
            return tuple(d)
        # mixed signs outside: pair positives against negatives
        p = sum(weights[j - 1] for j in outside if weights[j - 1] > 0)
        q = -sum(weights[j - 1] for j in outside if weights[j - 1] < 0)
        for j in outside:
            d[j - 1] = q if weights[j - 1] > 0 else p if weights[j - 1] < 0 else max(p, q, 1)
        if sum(d[j - 1] * weights[j - 1] for j in outside):
            raise AssertionError("mixed-sign balancing failed")
        return tuple(d)
    freeable = [j for j in outside if weights[j - 1] == 0]
    if not freeable:
        return None
    for j in freeable:
        d[j - 1] = 1
    return tuple(d)


def origin_in_closure(weights, zeros) -> bool:
    """Whether the orbit closure through the pattern contains the origin,
    found by greedily iterating one-parameter-subgroup limits."""
    weights, zeros = _check(weights, zeros)
    n = len(weights)
    full = frozenset(range(1, n + 1))
    current = zeros
    while current != full:
        d = _one_step_zeroing(weights, current)
        if d is None:
            return False
        nxt = limit_pattern(weights, current, d)
        if nxt is None or nxt == current:
            return False
        current = nxt
    return True


def orbit_report(weights, zeros) -> OrbitReport:
    weights, zeros = _check(weights, zeros)
    stab = stabilizer(weights, zeros)
    return OrbitReport(
        stabilizer=stab,
        stabilizer_dim=stab.torus_rank,
        stabilizer_order=stab.order,
        orbit_dim=group_dim(weights) - stab.torus_rank,
        closed=is_orbit_closed(weights, zeros),
        origin_in_closure=origin_in_closure(weights, zeros),
    )


def action_report(weights) -> ActionReport:
    weights = tuple(int(x) for x in weights)
    mono = invariant_monomial(weights)
    axes = tuple(i for i, x in enumerate(weights, start=1) if x) if any(weights) else ()
    return ActionReport(
        group_dim=group_dim(weights),
        stable=is_stable(weights),
        has_nonconstant_invariants=mono is not None,
        invariant_monomial=mono,
        nonclosed_codim1_orbit_axes=axes,
    )
