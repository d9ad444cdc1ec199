"""Normalizer and centralizer structure of a weight-vector subgroup inside
the polynomial automorphism group.

The case classification decides when the normalizer is contained in the
monomial group; the computable monomial part (permutations with a sign flag)
is returned in every case, and in the mixed-sign residual case it is only a
certified subgroup of the true normalizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .diag import DiagSubgroup, subgroups_equal
from .lattice import contains, lattice_of
from .intmat import IntMatrix

FULL_TORUS = "full_torus"
AXIS = "axis"
SAME_SIGN_ALL_NONZERO = "same_sign_all_nonzero"
NO_UNIT_WEIGHTS = "no_unit_weights"
ZERO_AND_UNIT_SAME_SIGN = "zero_and_unit_same_sign"
MIXED_SIGNS = "mixed_signs"


@dataclass(frozen=True)
class NormalizerCase:
    tag: str
    axis: int | None = None


@dataclass(frozen=True)
class NormalizerReport:
    case: NormalizerCase
    contained_in_monomial: bool
    perm_part: tuple[tuple[tuple[int, ...], int], ...]
    perm_order: int
    centralizer_perm_part: tuple[tuple[int, ...], ...]
    explicit_structure: str | None
    note: str | None


def classify_case(weights) -> NormalizerCase:
    """First matching tag in precedence order.

    The axis case (a single +-1 weight, rest zero) is split out before the
    broader same-sign conditions because its normalizer picks up an affine
    translation and is not monomial.
    """
    weights = tuple(int(x) for x in weights)
    if not any(weights):
        return NormalizerCase(FULL_TORUS)
    nonzero = [(i, x) for i, x in enumerate(weights, start=1) if x]
    if len(nonzero) == 1 and abs(nonzero[0][1]) == 1:
        return NormalizerCase(AXIS, axis=nonzero[0][0])
    if all(x != 0 for x in weights) and (all(x > 0 for x in weights)
                                         or all(x < 0 for x in weights)):
        return NormalizerCase(SAME_SIGN_ALL_NONZERO)
    if all(abs(x) != 1 for x in weights):
        return NormalizerCase(NO_UNIT_WEIGHTS)
    signs = {1 if x > 0 else -1 for _, x in nonzero}
    if 0 in weights and len(nonzero) >= 2 and len(signs) == 1:
        return NormalizerCase(ZERO_AND_UNIT_SAME_SIGN)
    return NormalizerCase(MIXED_SIGNS)


def monomial_normalizer(weights):
    """All (sigma, eps) in S_n x {+-1} with (l_sigma(1), ..., l_sigma(n)) = eps * l.

    These are exactly the permutation parts of monomial transformations that
    normalize the subgroup.  Permutations are 0-based image tuples.  The
    returned element list generates (indeed equals) the group.
    """
    weights = tuple(int(x) for x in weights)
    n = len(weights)
    neg = tuple(-x for x in weights)
    out = []
    for sigma in permutations(range(n)):
        image = tuple(weights[sigma[j]] for j in range(n))
        if image == weights:
            out.append((sigma, 1))
        if image == neg:
            out.append((sigma, -1))
    return tuple(out)


def monomial_centralizer(weights):
    """Permutations acting trivially on the subgroup: sigma such that
    e_i - e_sigma(i) lies in the weight lattice for every i."""
    weights = tuple(int(x) for x in weights)
    n = len(weights)
    lat = lattice_of(IntMatrix.from_rows([weights], n))
    out = []
    for sigma in permutations(range(n)):
        ok = True
        for i in range(n):
            diff = [0] * n
            diff[i] += 1
            diff[sigma[i]] -= 1
            if any(diff) and not contains(lat, diff):
                ok = False
                break
        if ok:
            out.append(sigma)
    return tuple(out)


def normalizer_report(weights) -> NormalizerReport:
    weights = tuple(int(x) for x in weights)
    case = classify_case(weights)
    perm_part = monomial_normalizer(weights)
    central = monomial_centralizer(weights)
    explicit = None
    note = None
    contained = True
    if case.tag == AXIS:
        contained = False
        explicit = "N_{GL_{n-1}}(D_{n-1}) x Aff_1"
        note = ("all coordinates except the axis are monomially permuted; "
                "the axis coordinate maps to t*x_i + s")
    elif case.tag == MIXED_SIGNS:
        contained = False
        note = ("normalizer is algebraic but its explicit form is unknown; "
                "the monomial part reported here is only a subgroup")
    return NormalizerReport(
        case=case,
        contained_in_monomial=contained,
        perm_part=perm_part,
        perm_order=len(perm_part),
        centralizer_perm_part=central,
        explicit_structure=explicit,
        note=note,
    )


def perm_part_is_consistent(weights) -> bool:
    """Sanity check: conjugating by any reported (sigma, eps) leaves the
    subgroup unchanged."""
    weights = tuple(int(x) for x in weights)
    g = DiagSubgroup.from_weights(weights)
    for sigma, eps in monomial_normalizer(weights):
        image = tuple(eps * weights[sigma[j]] for j in range(len(weights)))
        if not subgroups_equal(DiagSubgroup.from_weights(image), g):
            return False
    return True
