from itertools import product

import pytest

from diagtorus import (
    IsoType,
    action_report,
    group_dim,
    invariant_monomial,
    is_orbit_closed,
    is_stable,
    limit_pattern,
    orbit_report,
    origin_in_closure,
    stabilizer,
)
from diagtorus.errors import DimensionMismatch, NotInGroup
from diagtorus.oracle import closedness_search


def all_patterns(n):
    for bits in product((0, 1), repeat=n):
        yield frozenset(i + 1 for i, b in enumerate(bits) if b)


def test_group_dim():
    assert group_dim((0, 0, 0)) == 3
    assert group_dim((1, 2, 0)) == 2


class TestStabilizer:
    def test_examples(self):
        assert stabilizer((1, 2, 0), frozenset()) == IsoType(0, ())
        assert stabilizer((1, 2, 0), {3}) == IsoType(1, ())
        assert stabilizer((1, 2, 0), {2}) == IsoType(0, (2,))
        assert stabilizer((1, 2, 0), {1, 2, 3}) == IsoType(2, ())

    def test_pattern_validation(self):
        with pytest.raises(DimensionMismatch):
            stabilizer((1, 2), {3})

    def test_trivial_off_the_axes(self):
        # free point: empty zero pattern gives a trivial stabilizer
        for l in [(1, 2, 3), (0, 0), (5, -7)]:
            s = stabilizer(l, frozenset())
            assert s.torus_rank == 0 and s.factors == ()


class TestClosedness:
    def test_examples(self):
        assert is_orbit_closed((1, 2, 3), frozenset())
        assert not is_orbit_closed((1, 1), {1})
        assert is_orbit_closed((1, -1), {1, 2})
        assert not is_orbit_closed((1, -1), frozenset())

    def test_agrees_with_exhaustive_search_small(self):
        for n in (1, 2, 3):
            for l in product(range(-2, 3), repeat=n):
                for s in all_patterns(n):
                    fast = is_orbit_closed(l, s)
                    witness = closedness_search(l, s, 6)
                    assert fast == (witness is None), (l, s, witness)

    def test_full_pattern_is_always_closed(self):
        for l in [(1, -1), (0, 0, 0), (2, 3, 4)]:
            assert is_orbit_closed(l, frozenset(range(1, len(l) + 1)))


class TestStability:
    def test_examples(self):
        assert is_stable((1, 2, 3))
        assert is_stable((-1, -4))
        assert not is_stable((1, -1, 2))
        assert not is_stable((1, 1, 0))

    def test_matches_generic_orbit_closedness(self):
        for n in (1, 2, 3):
            for l in product(range(-2, 3), repeat=n):
                assert is_stable(l) == is_orbit_closed(l, frozenset())


class TestInvariantMonomial:
    def test_examples(self):
        assert invariant_monomial((1, 2, 0)) == (1, 2, 0)
        assert invariant_monomial((-1, -2)) == (1, 2)
        assert invariant_monomial((1, -1)) is None
        assert invariant_monomial((0, 0)) is None

    def test_stability_implies_invariants(self):
        for n in (1, 2, 3):
            for l in product(range(-2, 3), repeat=n):
                if is_stable(l):
                    assert invariant_monomial(l) is not None


class TestLimits:
    def test_examples(self):
        assert limit_pattern((1, -1), frozenset(), (1, 1)) == {1, 2}
        assert limit_pattern((1, 1), {1}, (-1, 1)) == {1, 2}
        assert limit_pattern((1, 2), frozenset(), (-2, 1)) is None

    def test_rejects_exponents_outside_the_group(self):
        with pytest.raises(NotInGroup):
            limit_pattern((1, 1), frozenset(), (1, 0))

    def test_pattern_only_grows(self):
        cases = [
            ((1, -1, 0), frozenset(), (1, 1, 0)),
            ((2, -2), {1}, (1, 1)),
            ((0, 0), frozenset(), (1, 1)),
        ]
        for l, s, d in cases:
            out = limit_pattern(l, s, d)
            if out is not None:
                assert s <= out


class TestOriginInClosure:
    def test_mixed_signs_always(self):
        for s in all_patterns(2):
            assert origin_in_closure((1, -1), s)
        for s in all_patterns(3):
            assert origin_in_closure((2, -3, 5), s)

    def test_same_sign_weights(self):
        assert origin_in_closure((1, 2), {1, 2})
        # the invariant monomial x1*x2^2 is nonzero off the axes, so the
        # origin is unreachable from a free point
        assert not origin_in_closure((1, 2), frozenset())
        # but on an axis the remaining coordinate can be scaled away
        assert origin_in_closure((1, 2), {1})
        assert origin_in_closure((1, 2), {2})

    def test_zero_weights(self):
        # l = 0 gives the full torus, so every orbit closure meets the origin
        for s in all_patterns(2):
            assert origin_in_closure((0, 0), s)

    def test_agrees_with_reachability_search(self):
        # oracle: BFS over patterns using exhaustive one-parameter limits
        def reachable(l, start, bound=6):
            n = len(l)
            full = frozenset(range(1, n + 1))
            seen = {start}
            stack = [start]
            while stack:
                s = stack.pop()
                if s == full:
                    return True
                for d in product(range(-bound, bound + 1), repeat=n):
                    if sum(a * b for a, b in zip(d, l)):
                        continue
                    out = limit_pattern(l, s, d)
                    if out is not None and out not in seen:
                        seen.add(out)
                        stack.append(out)
            return full in seen

        for n in (1, 2, 3):
            for l in product(range(-2, 3), repeat=n):
                for s in all_patterns(n):
                    assert origin_in_closure(l, s) == reachable(l, s), (l, s)


class TestReports:
    def test_orbit_report_free_point(self):
        rep = orbit_report((0, 0), frozenset())
        assert rep.orbit_dim == 2
        assert rep.stabilizer_dim == 0 and rep.stabilizer_order == 1
        # the open orbit of the full torus is dense, not closed
        assert not rep.closed

    def test_orbit_report_bookkeeping(self):
        for n in (1, 2, 3):
            for l in product(range(-2, 3), repeat=n):
                for s in all_patterns(n):
                    rep = orbit_report(l, s)
                    assert rep.orbit_dim + rep.stabilizer_dim == group_dim(l)
                    assert (rep.stabilizer_order is None) == (
                        rep.stabilizer.torus_rank > 0)

    def test_action_report_stable_case(self):
        rep = action_report((1, 2, 3))
        assert rep.stable
        assert rep.has_nonconstant_invariants
        assert rep.invariant_monomial == (1, 2, 3)
        assert rep.nonclosed_codim1_orbit_axes == (1, 2, 3)

    def test_action_report_torus(self):
        rep = action_report((0, 0))
        assert rep.group_dim == 2
        assert not rep.stable
        assert rep.invariant_monomial is None
        assert rep.nonclosed_codim1_orbit_axes == ()

    def test_stable_implies_invariants_or_trivial(self):
        for n in (1, 2, 3):
            for l in product(range(-2, 3), repeat=n):
                rep = action_report(l)
                if rep.stable:
                    assert rep.has_nonconstant_invariants or not any(l)
