"""Independent brute-force references used to certify the production paths.

These deliberately avoid the modules they arbitrate: membership and counting
go through Smith-form divisibility or plain enumeration, never through the
Hermite-basis code in the lattice module.  They are correctness oracles, not
performance-tuned algorithms.
"""

from __future__ import annotations

from itertools import permutations, product

from .errors import TooLarge
from .intmat import IntMatrix, smith_normal_form

_ENUM_BUDGET = 10**7


def _snf_membership_data(a: IntMatrix):
    dec = smith_normal_form(a)
    r = len(dec.factors)
    return dec.V, dec.factors, r


def _member(v, vmat: IntMatrix, factors, r) -> bool:
    # v in the row lattice iff (v @ V) is divisible by the Smith diagonal
    # and vanishes beyond the rank
    n = vmat.rows
    w = [sum(v[k] * vmat.entries[k][j] for k in range(n)) for j in range(n)]
    for j in range(r):
        if w[j] % factors[j]:
            return False
    return not any(w[r:])


def torsion_count(group, modulus: int) -> int:
    """Number of m-torsion tuples annihilated by every defining character.

    group is a DiagSubgroup; tuples run over n-th roots of unity represented
    by exponents mod m.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    n = group.ambient_dim
    if modulus**n > _ENUM_BUDGET:
        raise TooLarge("m^n exceeds the enumeration budget")
    rows = group.lattice.basis.entries
    count = 0
    for t in product(range(modulus), repeat=n):
        if all(sum(r[j] * t[j] for j in range(n)) % modulus == 0 for r in rows):
            count += 1
    return count


def lattice_equal_bounded(a: IntMatrix, b: IntMatrix, bound: int) -> bool:
    """Compare the two row lattices inside the box ||v||_inf <= bound."""
    if a.cols != b.cols:
        return False
    n = a.cols
    if (2 * bound + 1)**n > _ENUM_BUDGET:
        raise TooLarge("box exceeds the enumeration budget")
    va, fa, ra = _snf_membership_data(a)
    vb, fb, rb = _snf_membership_data(b)
    for v in product(range(-bound, bound + 1), repeat=n):
        if _member(v, va, fa, ra) != _member(v, vb, fb, rb):
            return False
    return True


def default_lattice_bound(a: IntMatrix, b: IntMatrix) -> int:
    """Default box: twice the largest absolute entry of either matrix."""
    entries = [abs(x) for m in (a, b) for row in m.entries for x in row]
    return 2 * max(entries, default=1)


def closedness_search(weights, zeros, bound: int):
    """Exhaustive search for a one-parameter subgroup driving the point to a
    boundary limit: d with <d, l> = 0, d_j >= 0 off the pattern, and some
    d_j > 0 off the pattern.  Returns a witness d or None.

    Coordinates inside the pattern range over [-bound, bound]; their partial
    sums are tabulated once, so the loop only runs over the complement.
    """
    weights = tuple(int(x) for x in weights)
    zeros = frozenset(int(i) for i in zeros)
    n = len(weights)
    inside = sorted(zeros)
    outside = [j for j in range(1, n + 1) if j not in zeros]
    if not outside:
        return None
    # achievable sums over the pattern coordinates, with one witness each
    sums = {0: {}}
    for j in inside:
        lj = weights[j - 1]
        nxt = {}
        for s, assign in sums.items():
            for dj in range(-bound, bound + 1):
                key = s + dj * lj
                if key not in nxt:
                    witness = dict(assign)
                    witness[j] = dj
                    nxt[key] = witness
        sums = nxt
    for d_out in product(range(bound + 1), repeat=len(outside)):
        if not any(d_out):
            continue
        need = -sum(dj * weights[j - 1] for dj, j in zip(d_out, outside))
        if need in sums:
            d = [0] * n
            for dj, j in zip(d_out, outside):
                d[j - 1] = dj
            for j, dj in sums[need].items():
                d[j - 1] = dj
            return tuple(d)
    return None


def default_closedness_bound(weights) -> int:
    return 3 * max((abs(x) for x in weights), default=1)


def perm_sign_exhaust(weights, other):
    """Exhaustive search over S_n x {+-1} for l = eps * (l' o sigma).

    Returns (sigma, eps) with weights[j] == eps * other[sigma[j]] for all j,
    or None.  Ground truth for canonical forms on rank-one inputs.
    """
    weights = tuple(int(x) for x in weights)
    other = tuple(int(x) for x in other)
    if len(weights) != len(other):
        return None
    n = len(weights)
    if n > 8:
        raise TooLarge("factorial search limited to n <= 8")
    for sigma in permutations(range(n)):
        for eps in (1, -1):
            if all(weights[j] == eps * other[sigma[j]] for j in range(n)):
                return sigma, eps
    return None
