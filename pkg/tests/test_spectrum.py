"""Tests for filters, relative ultrafilters, the boundary and the action of P."""

import unittest

from semilab.ambient.elements import integer, multiply
from semilab.catalog import resolve_family
from semilab.errors import UndefinedOutsideRangeError, UsageError
from semilab.ideals import closure_to_depth
from semilab.ideals.closure import EMPTY_INDEX, FULL_INDEX
from semilab.spectrum import (
    act_backward,
    act_forward,
    boundary_approx,
    enumerate_filters,
    format_filter,
    holds,
    invariant_subset_check,
    is_filter,
    is_relative_ultrafilter,
    principal_filter_of,
    reach_from,
    smallest_basic_open,
    up_filter,
)


class TestFilters(unittest.TestCase):
    def setUp(self):
        self.amb = resolve_family("free_product_naturals:2")
        self.family = closure_to_depth(self.amb, 3)

    def test_free_product_counts(self):
        filters = enumerate_filters(self.family)
        ultrafilters = [f for f in filters if is_relative_ultrafilter(self.family, f)]
        self.assertEqual(len(filters), 15)
        self.assertEqual(len(ultrafilters), 8)
        self.assertEqual(len(boundary_approx(self.family, filters)), 8)

    def test_naturals_counts(self):
        family = closure_to_depth(resolve_family("naturals"), 3)
        filters = enumerate_filters(family)
        self.assertEqual(len(filters), 4)
        self.assertEqual(sum(is_relative_ultrafilter(family, f) for f in filters), 1)

    def test_filter_axioms(self):
        p1 = self.family.index_of(self.amb.model.principal(self.amb.parse("p1")))
        p2 = self.family.index_of(self.amb.model.principal(self.amb.parse("p2")))
        self.assertTrue(is_filter(self.family, [FULL_INDEX, p1]))
        self.assertFalse(is_filter(self.family, [p1]))
        self.assertFalse(is_filter(self.family, [FULL_INDEX, p1, p2]))
        self.assertFalse(is_filter(self.family, [FULL_INDEX, EMPTY_INDEX]))
        self.assertFalse(is_filter(self.family, []))

    def test_point_filters(self):
        f = principal_filter_of(self.family, self.amb.parse("p1*p2"))
        self.assertEqual(format_filter(self.family, f), ["P", "p1·P", "p1*p2·P"])
        self.assertFalse(is_relative_ultrafilter(self.family, f))
        deep = principal_filter_of(self.family, self.amb.parse("p1*p2*p1"))
        self.assertTrue(is_relative_ultrafilter(self.family, deep))

    def test_holds_reaches_past_the_family(self):
        f = principal_filter_of(self.family, self.amb.parse("p1*p2*p1"))
        deeper = self.amb.model.principal(self.amb.parse("p1*p2*p1*p1"))
        self.assertNotIn(deeper, self.family)
        self.assertFalse(holds(self.family, f, deeper))
        self.assertTrue(holds(self.family, f, self.amb.model.principal(self.amb.parse("p1*p2"))))

    def test_smallest_basic_open(self):
        f = principal_filter_of(self.family, self.amb.parse("p2"))
        neighbourhood = smallest_basic_open(self.family, f)
        self.assertEqual(self.family.format(neighbourhood.required), "p2·P")
        self.assertTrue(neighbourhood.contains(f))
        self.assertEqual(len(neighbourhood.excluded), self.family.nonempty_count - len(f.members))

    def test_empty_ideal_has_no_filter(self):
        with self.assertRaises(UsageError):
            up_filter(self.family, self.family.ideals[EMPTY_INDEX])

    def test_one_point_boundary(self):
        family = closure_to_depth(resolve_family("cone_zk:2"), 3)
        self.assertEqual(len(boundary_approx(family)), 1)


class TestAction(unittest.TestCase):
    def setUp(self):
        self.amb = resolve_family("free_product_naturals:2")
        self.family = closure_to_depth(self.amb, 3)
        self.p1 = self.amb.parse("p1")

    def test_forward_and_backward_are_inverse(self):
        f = principal_filter_of(self.family, self.amb.parse("p2"))
        moved = act_forward(self.family, self.p1, f)
        self.assertEqual(format_filter(self.family, moved), ["P", "p1·P", "p1*p2·P"])
        self.assertEqual(act_backward(self.family, self.p1, moved), f)

    def test_backward_needs_the_range(self):
        f = principal_filter_of(self.family, self.amb.parse("p2"))
        with self.assertRaises(UndefinedOutsideRangeError):
            act_backward(self.family, self.p1, f)

    def test_forward_past_the_depth(self):
        f = principal_filter_of(self.family, self.amb.parse("p2*p2*p2"))
        moved = act_forward(self.family, self.p1, f)
        self.assertEqual(format_filter(self.family, moved), ["P", "p1·P", "p1*p2·P", "p1*p2^2·P"])
        self.assertEqual(self.amb.model.format_ideal(moved.base), "p1*p2^3·P")
        self.assertTrue(is_relative_ultrafilter(self.family, moved))

    def test_forward_composes(self):
        words = ["p1", "p2", "p1*p2", "p2*p2"]
        for f in enumerate_filters(self.family):
            for left in words:
                for right in words:
                    p, q = self.amb.parse(left), self.amb.parse(right)
                    with self.subTest(filter=format_filter(self.family, f), p=left, q=right):
                        once = act_forward(self.family, multiply(p, q), f)
                        twice = act_forward(self.family, p, act_forward(self.family, q, f))
                        self.assertEqual(once, twice)

    def test_actions_keep_ultrafilters(self):
        shallow = closure_to_depth(self.amb, self.family.depth - 1)
        ultrafilters = [f for f in enumerate_filters(self.family) if is_relative_ultrafilter(self.family, f)]
        for f in ultrafilters:
            for p in self.amb.generators:
                with self.subTest(filter=format_filter(self.family, f), p=self.amb.format(p)):
                    self.assertTrue(is_relative_ultrafilter(self.family, act_forward(self.family, p, f)))
                    if holds(self.family, f, self.amb.model.principal(p)):
                        back = act_backward(self.family, p, f)
                        self.assertTrue(is_relative_ultrafilter(shallow, up_filter(shallow, back.base)))

    def test_boundary_invariance(self):
        boundary = boundary_approx(self.family)
        self.assertEqual(invariant_subset_check(self.family, boundary, margin=1).verdict, "Holds")
        self.assertEqual(invariant_subset_check(self.family, boundary, margin=3).verdict, "UnknownTruncated")

    def test_non_invariant_subset(self):
        family = closure_to_depth(resolve_family("naturals"), 3)
        full = up_filter(family, family.ideals[FULL_INDEX])
        result = invariant_subset_check(family, [full], margin=1)
        self.assertEqual(result.verdict, "Fails")
        self.assertEqual(result.direction, "forward")
        self.assertEqual(result.generator, integer(1))

    def test_reach_any_filter(self):
        ultrafilter = principal_filter_of(self.family, self.amb.parse("p2*p1*p1"))
        start = up_filter(self.family, self.family.ideals[FULL_INDEX])
        x, reached = reach_from(self.family, start, ultrafilter)
        self.assertEqual(x, self.amb.parse("p2*p1*p1"))
        self.assertEqual(reached, ultrafilter)
        with self.assertRaises(UsageError):
            reach_from(self.family, ultrafilter, start)

    def test_every_filter_reaches_every_ultrafilter(self):
        for family_id in ("free_product_naturals:2", "naturals", "numerical:2,3", "cone_zk:2"):
            amb = resolve_family(family_id)
            for depth in range(1, 4):
                family = closure_to_depth(amb, depth)
                filters = enumerate_filters(family)
                targets = [f for f in filters if is_relative_ultrafilter(family, f)]
                for target in targets:
                    for start in filters:
                        with self.subTest(family=family_id, depth=depth, target=format_filter(family, target)):
                            self.assertEqual(reach_from(family, start, target)[1], target)


if __name__ == "__main__":
    unittest.main()
