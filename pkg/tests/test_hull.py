"""Tests for the partial isometries of the left inverse hull."""

import unittest

from semilab.ambient.elements import integer, multiply
from semilab.catalog import resolve_family
from semilab.errors import NotInSemigroupError, UndefinedGradeError
from semilab.hull import (
    ZERO,
    adjoint,
    apply,
    co_isometry,
    compose,
    format_isometry,
    format_word,
    from_word,
    g_map,
    hull_enumerate,
    identity,
    is_idempotent,
    isometry,
    parse_word,
    range_projection,
)


class TestIsometries(unittest.TestCase):
    def setUp(self):
        self.amb = resolve_family("naturals")
        self.one = integer(1)

    def test_co_isometry_after_isometry_is_identity(self):
        v = isometry(self.amb, self.one)
        self.assertEqual(compose(self.amb, co_isometry(self.amb, self.one), v), identity(self.amb))

    def test_isometry_after_co_isometry_is_a_projection(self):
        e = compose(self.amb, isometry(self.amb, self.one), co_isometry(self.amb, self.one))
        self.assertTrue(is_idempotent(e))
        self.assertEqual(format_isometry(self.amb, e), "(P≥1, 0)")
        self.assertEqual(range_projection(self.amb, isometry(self.amb, self.one)), e)

    def test_apply_and_adjoint(self):
        v_star = co_isometry(self.amb, self.one)
        self.assertIsNone(apply(self.amb, v_star, integer(0)))
        self.assertEqual(apply(self.amb, v_star, integer(3)), integer(2))
        self.assertEqual(adjoint(self.amb, v_star), isometry(self.amb, self.one))

    def test_zero(self):
        self.assertEqual(compose(self.amb, ZERO, identity(self.amb)), ZERO)
        self.assertEqual(format_isometry(self.amb, ZERO), "0")
        with self.assertRaises(UndefinedGradeError):
            g_map(ZERO)

    def test_free_product_orthogonality(self):
        amb = resolve_family("free_product_naturals:2")
        product = compose(amb, co_isometry(amb, amb.parse("p1")), isometry(amb, amb.parse("p2")))
        self.assertTrue(product.is_zero)

    def test_words_round_trip(self):
        amb = resolve_family("free_product_naturals:2")
        letters = parse_word(amb, "v[p1] v[p2]*")
        self.assertEqual(format_word(letters), "v[p1] v[p2]*")
        s = from_word(amb, letters)
        self.assertEqual(g_map(s), amb.parse("p1*p2^-1"))
        self.assertEqual(format_word(()), "1")

    def test_words_need_members(self):
        amb = resolve_family("free_product_naturals:2")
        with self.assertRaises(NotInSemigroupError):
            parse_word(amb, "v[p1^-1]")
        with self.assertRaises(NotInSemigroupError):
            isometry(amb, amb.parse("p2^-1"))


class TestEnumeration(unittest.TestCase):
    def test_naturals_at_depth_two(self):
        hull = hull_enumerate(resolve_family("naturals"), 2)
        self.assertEqual(len(hull.nonzero), 6)
        self.assertTrue(hull.elements[-1].is_zero)
        self.assertEqual(hull.elements[0], identity(resolve_family("naturals")))
        self.assertFalse(hull.truncated)

    def test_depth_is_clamped(self):
        hull = hull_enumerate(resolve_family("naturals"), 5, max_depth=2)
        self.assertEqual(hull.depth, 2)
        self.assertTrue(hull.truncated)

    def test_element_cap(self):
        hull = hull_enumerate(resolve_family("free_product_naturals:2"), 4, max_elements=10)
        self.assertTrue(hull.truncated)
        self.assertEqual(len(hull.nonzero), 10)


class TestInverseSemigroupAxioms(unittest.TestCase):
    def hulls(self):
        for family_id in ("naturals", "free_product_naturals:2"):
            amb = resolve_family(family_id)
            yield family_id, amb, hull_enumerate(amb, 3).nonzero

    def test_generalized_inverse(self):
        for family_id, amb, elements in self.hulls():
            for s in elements:
                with self.subTest(family=family_id, s=format_isometry(amb, s)):
                    s_star = adjoint(amb, s)
                    self.assertEqual(compose(amb, s, compose(amb, s_star, s)), s)
                    self.assertEqual(compose(amb, s_star, compose(amb, s, s_star)), s_star)
                    self.assertEqual(adjoint(amb, s_star), s)

    def test_idempotents_commute(self):
        for family_id, amb, elements in self.hulls():
            idempotents = [s for s in elements if is_idempotent(s)]
            self.assertTrue(idempotents)
            for e in idempotents:
                for f in idempotents:
                    with self.subTest(family=family_id, e=format_isometry(amb, e), f=format_isometry(amb, f)):
                        self.assertEqual(compose(amb, e, f), compose(amb, f, e))

    def test_grade_is_multiplicative(self):
        for family_id, amb, elements in self.hulls():
            points = amb.semigroup_ball(4)
            for s in elements:
                for t in elements:
                    product = compose(amb, s, t)
                    with self.subTest(family=family_id, s=format_isometry(amb, s), t=format_isometry(amb, t)):
                        if not product.is_zero:
                            self.assertEqual(g_map(product), multiply(g_map(s), g_map(t)))
                        for x in points:
                            inner = apply(amb, t, x)
                            expected = None if inner is None else apply(amb, s, inner)
                            self.assertEqual(apply(amb, product, x), expected)


if __name__ == "__main__":
    unittest.main()
