"""Tests for the Toeplitz decomposition search and the quasi-lattice, Ore and reversibility probes."""

import unittest

from semilab.ambient.elements import integer, invert, multiply
from semilab.catalog import build_pair, resolve_family
from semilab.conditions import (
    compression_descriptor,
    find_disjoint_pair,
    is_disjoint_pair,
    is_ore_witness,
    letter_shape,
    ore_probe,
    quasi_lattice_probe,
    replays_compression,
    reversibility_probe,
    toeplitz_decompose,
    toeplitz_probe,
)
from semilab.conditions.toeplitz import DECOMPOSITION, ZERO_CASE
from semilab.errors import ConfigError
from semilab.hull import parse_word
from semilab.schemas import SemigroupConfig


class TestToeplitz(unittest.TestCase):
    def test_free_product_zero_case(self):
        amb = resolve_family("free_product_naturals:2")
        g = amb.parse("p1^-1*p2")
        self.assertTrue(compression_descriptor(amb, g).is_zero)
        self.assertEqual(toeplitz_decompose(amb, g).kind, ZERO_CASE)

    def test_free_product_decomposition_replays(self):
        amb = resolve_family("free_product_naturals:2")
        g = amb.parse("p1*p2^-1")
        result = toeplitz_decompose(amb, g)
        self.assertEqual(result.kind, DECOMPOSITION)
        self.assertTrue(replays_compression(amb, g, result.letters))

    def test_naturals_backward_shift(self):
        amb = resolve_family("naturals")
        result = toeplitz_decompose(amb, integer(-1))
        self.assertEqual(result.kind, DECOMPOSITION)
        self.assertEqual(result.shape, "V_p*")
        self.assertTrue(replays_compression(amb, integer(-1), parse_word(amb, "v[1]*")))

    def test_numerical_semigroup_needs_two_letters(self):
        amb = resolve_family("numerical:2,3")
        result = toeplitz_decompose(amb, integer(1))
        self.assertEqual(result.kind, DECOMPOSITION)
        self.assertEqual(len(result.letters), 2)
        self.assertTrue(replays_compression(amb, integer(1), result.letters))

    def test_free_product_sweep(self):
        amb = resolve_family("free_product_naturals:2")
        for g in amb.group_ball(6):
            with self.subTest(g=amb.format(g)):
                result = toeplitz_decompose(amb, g)
                self.assertIn(result.kind, (ZERO_CASE, DECOMPOSITION))
                self.assertEqual(result.kind == ZERO_CASE, compression_descriptor(amb, g).is_zero)
                if result.kind == DECOMPOSITION:
                    self.assertIn(result.shape, ("", "V_p", "V_p*", "V_p V_q*"))
                    self.assertTrue(replays_compression(amb, g, result.letters))

    def test_ore_family_sweep(self):
        for family_id, radius in (("naturals", 6), ("cone_zk:2", 3)):
            amb = resolve_family(family_id)
            for g in amb.group_ball(radius):
                with self.subTest(family=family_id, g=amb.format(g)):
                    result = toeplitz_decompose(amb, g)
                    self.assertEqual(result.kind, DECOMPOSITION)
                    self.assertIn(result.shape, ("", "V_p", "V_p*", "V_p* V_q"))
                    self.assertTrue(replays_compression(amb, g, result.letters))

    def test_wrong_word_does_not_replay(self):
        amb = resolve_family("naturals")
        self.assertFalse(replays_compression(amb, integer(-1), parse_word(amb, "v[1]")))

    def test_shapes(self):
        amb = resolve_family("naturals")
        self.assertEqual(letter_shape(parse_word(amb, "v[1] v[2]*")), "V_p V_q*")
        self.assertEqual(letter_shape(parse_word(amb, "v[1]* v[2] v[1]*")), "V_p1* V_q1 V_p2*")

    def test_budget_must_be_positive(self):
        with self.assertRaises(ConfigError):
            toeplitz_decompose(resolve_family("naturals"), integer(1), budget=0)

    def test_probe_uses_catalog_argument(self):
        report = toeplitz_probe(resolve_family("free_product_naturals:2"), bound=2)
        self.assertEqual(report.status, "HoldsProven")
        self.assertEqual(report.argument, "lattice-order")
        self.assertEqual(report.checked, len(report.certificates))
        self.assertIn("ZeroCase", {certificate.result for certificate in report.certificates})

    def test_probe_on_config_semigroup_stays_to_budget(self):
        amb = build_pair(SemigroupConfig(ambient="integers", generators=["2", "3"], name="n23"))
        report = toeplitz_probe(amb, bound=2)
        self.assertEqual(report.status, "HoldsToBudget")
        self.assertIsNone(report.argument)


class TestQuasiLattice(unittest.TestCase):
    def test_numerical_semigroup_fails_ql2(self):
        report = quasi_lattice_probe(resolve_family("numerical:2,3"))
        self.assertEqual(report.status, "Fails")
        self.assertEqual(report.sub_condition, "QL2")
        self.assertEqual(report.witness, {"p": "2", "q": "3", "intersection": "P≥5"})

    def test_lattice_orders_hold(self):
        for family_id in ("free_product_naturals:2", "cone_zk:2", "naturals"):
            with self.subTest(family=family_id):
                report = quasi_lattice_probe(resolve_family(family_id), bound=3)
                self.assertEqual(report.status, "HoldsProven")

    def test_axb_has_units(self):
        report = quasi_lattice_probe(resolve_family("axb_integers"), bound=1)
        self.assertEqual(report.status, "Fails")
        self.assertEqual(report.sub_condition, "QL0")


class TestOreAndReversibility(unittest.TestCase):
    def test_free_product_is_not_reversible(self):
        amb = resolve_family("free_product_naturals:2")
        report = reversibility_probe(amb)
        self.assertEqual(report.status, "Fails")
        self.assertEqual(report.witness, {"p": "p1", "q": "p2"})
        self.assertTrue(is_disjoint_pair(amb, amb.parse("p1"), amb.parse("p2")))
        self.assertFalse(is_disjoint_pair(amb, amb.parse("p1"), amb.parse("p1*p2")))

    def test_free_product_is_not_left_ore(self):
        amb = resolve_family("free_product_naturals:2")
        report = ore_probe(amb, bound=2)
        self.assertEqual(report.status, "Fails")
        g, p, q = (amb.parse(report.witness[key]) for key in ("g", "p", "q"))
        self.assertEqual(multiply(p, invert(q)), g)
        self.assertTrue(is_ore_witness(amb, g, 2))
        self.assertTrue(is_ore_witness(amb, amb.parse("p1*p2^-1"), 4))
        self.assertFalse(is_ore_witness(amb, amb.parse("p2^-1*p1"), 1))

    def test_unresolved_ore_search_is_not_a_failure(self):
        amb = build_pair(SemigroupConfig(name="free_inline", ambient="free_group", rank=2, generators=["p1", "p2"]))
        report = ore_probe(amb, bound=2)
        self.assertEqual(report.status, "HoldsToBudget")
        self.assertIsNotNone(report.sub_condition)

    def test_commutative_families(self):
        for family_id in ("naturals", "numerical:2,3", "cone_zk:2"):
            with self.subTest(family=family_id):
                amb = resolve_family(family_id)
                self.assertIsNone(find_disjoint_pair(amb, 3))
                self.assertEqual(reversibility_probe(amb, 3).status, "HoldsProven")
                self.assertEqual(ore_probe(amb, 3).status, "HoldsProven")


if __name__ == "__main__":
    unittest.main()
