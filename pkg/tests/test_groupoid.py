"""Tests for germs, transformation arrows, the G_0 probes and the checklist."""

import random
import unittest

from semilab.ambient.elements import integer, invert, is_identity, vector
from semilab.catalog import resolve_family
from semilab.errors import ComposabilityError, EmptyOpenSetError, UsageError
from semilab.groupoid import (
    CharacterTable,
    ExtendedCharacter,
    GroupoidArrow,
    arrow_equiv,
    arrow_range,
    check_identification,
    compose_arrows,
    enumerate_arrows,
    g0_probe,
    g0_sample,
    invert_arrow,
    kirchberg_checklist,
    local_boundary_witness,
    phi_map,
    replays_local_boundary,
    s_dot_chi,
    top_free_probe,
    unit_arrow,
)
from semilab.groupoid.dynamics import FIXED, IN_G0, MOVED, NOT_APPLICABLE, NOT_IN_G0, WITNESS
from semilab.hull import co_isometry, hull_enumerate, isometry
from semilab.ideals import closure_to_depth
from semilab.ideals.closure import FULL_INDEX
from semilab.spectrum import (
    act_forward,
    boundary_approx,
    enumerate_filters,
    format_filter,
    principal_filter_of,
    smallest_basic_open,
    up_filter,
)


class TestGerms(unittest.TestCase):
    def setUp(self):
        self.amb = resolve_family("naturals")
        self.family = closure_to_depth(self.amb, 3)
        self.top = up_filter(self.family, self.family.ideals[FULL_INDEX])
        self.v = isometry(self.amb, integer(1))

    def test_s_dot_chi(self):
        moved = s_dot_chi(self.family, self.v, self.top)
        self.assertEqual(format_filter(self.family, moved), ["P", "P≥1"])
        with self.assertRaises(ComposabilityError):
            s_dot_chi(self.family, co_isometry(self.amb, integer(1)), self.top)

    def test_inverse_arrow_composes_to_a_unit(self):
        arrow = GroupoidArrow(self.v, self.top)
        back = invert_arrow(self.family, arrow)
        self.assertEqual(back.source, arrow_range(self.family, arrow))
        self.assertTrue(arrow_equiv(self.family, compose_arrows(self.family, back, arrow), unit_arrow(self.family, self.top)))

    def test_composition_needs_matching_ends(self):
        arrow = GroupoidArrow(self.v, self.top)
        with self.assertRaises(ComposabilityError):
            compose_arrows(self.family, arrow, arrow)

    def test_phi_map(self):
        image = phi_map(GroupoidArrow(self.v, self.top))
        self.assertEqual(image.g, integer(1))
        self.assertEqual(image.character, ExtendedCharacter(self.top, integer(-1)))
        self.assertEqual(image.source.shift, integer(0))

    def test_identification_on_naturals(self):
        hull = hull_enumerate(self.amb, 2)
        arrows = enumerate_arrows(self.family, hull.nonzero, enumerate_filters(self.family))
        self.assertTrue(arrows)
        check = check_identification(self.family, arrows, CharacterTable(self.family, 2))
        self.assertTrue(check.well_defined)
        self.assertTrue(check.injective)
        self.assertTrue(check.composable)
        self.assertTrue(check.character_identity)

    def test_isometries_act_like_p(self):
        amb = resolve_family("free_product_naturals:2")
        family = closure_to_depth(amb, 3)
        for p in [*amb.generators, amb.parse("p1*p2")]:
            for f in enumerate_filters(family):
                with self.subTest(p=amb.format(p), filter=format_filter(family, f)):
                    self.assertEqual(s_dot_chi(family, isometry(amb, p), f), act_forward(family, p, f))

    def test_identification_on_free_product(self):
        amb = resolve_family("free_product_naturals:2")
        family = closure_to_depth(amb, 2)
        hull = hull_enumerate(amb, 2)
        arrows = enumerate_arrows(family, hull.nonzero, enumerate_filters(family))
        self.assertTrue(arrows)
        check = check_identification(family, arrows, CharacterTable(family, 2))
        self.assertTrue(check.well_defined)
        self.assertTrue(check.injective)
        self.assertTrue(check.composable)
        self.assertTrue(check.character_identity)

    def test_character_table_separates_filters(self):
        table = CharacterTable(self.family, 1)
        deeper = principal_filter_of(self.family, integer(1))
        left, right = ExtendedCharacter(self.top, integer(0)), ExtendedCharacter(deeper, integer(0))
        self.assertFalse(table.equal(left, right))
        self.assertIsNotNone(table.separating_ideal(left, right))
        self.assertTrue(table.equal(left, ExtendedCharacter(self.top, integer(0))))


class TestDynamics(unittest.TestCase):
    def test_free_product_has_trivial_g0(self):
        amb = resolve_family("free_product_naturals:2")
        family = closure_to_depth(amb, 2)
        result = g0_probe(family, amb.parse("p1"))
        self.assertEqual(result.verdict, NOT_IN_G0)
        self.assertEqual(result.translate, amb.parse("p1"))
        self.assertTrue(amb.model.intersect(amb.model.principal(amb.parse("p1")), family.ideals[result.witness]).is_empty)
        self.assertEqual(g0_sample(family, 2), [])

    def test_naturals_g0_is_everything(self):
        family = closure_to_depth(resolve_family("naturals"), 3)
        self.assertEqual(g0_probe(family, integer(-2)).verdict, IN_G0)
        self.assertEqual(g0_sample(family, 2), [integer(1), integer(-1), integer(2), integer(-2)])

    def test_one_point_boundary_is_fixed(self):
        family = closure_to_depth(resolve_family("naturals"), 3)
        result = top_free_probe(family, integer(1), boundary_approx(family), radius=2)
        self.assertEqual(result.verdict, FIXED)
        with self.assertRaises(UsageError):
            top_free_probe(family, integer(0), boundary_approx(family))

    def test_shortest_free_elements_leave_g0(self):
        amb = resolve_family("free_product_naturals:2")
        family = closure_to_depth(amb, 3)
        shortest = [g for g in amb.group_ball(4) if not is_identity(g)][:100]
        self.assertEqual(len(shortest), 100)
        model = amb.model
        for g in shortest:
            with self.subTest(g=amb.format(g)):
                result = g0_probe(family, g)
                self.assertEqual(result.verdict, NOT_IN_G0)
                self.assertIn(result.translate, (g, invert(g)))
                shifted = model.cap_translate(result.translate, model.full())
                self.assertTrue(model.intersect(shifted, family.ideals[result.witness]).is_empty)

    def test_lattice_elements_stay_in_g0(self):
        amb = resolve_family("cone_zk:2")
        family = closure_to_depth(amb, 3)
        rng = random.Random(11)
        for _ in range(100):
            g = vector(rng.randint(-20, 20), rng.randint(-20, 20))
            with self.subTest(g=amb.format(g)):
                self.assertEqual(g0_probe(family, g).verdict, IN_G0)

    def test_free_elements_move_a_boundary_character(self):
        amb = resolve_family("free_product_naturals:2")
        family = closure_to_depth(amb, 3)
        boundary = boundary_approx(family)
        candidates = [g for g in amb.group_ball(3) if not is_identity(g)]
        for g in random.Random(5).sample(candidates, 20):
            with self.subTest(g=amb.format(g)):
                result = top_free_probe(family, g, boundary, radius=3)
                self.assertEqual(result.verdict, MOVED)
                self.assertIn(result.filter, boundary)

    def test_cone_boundary_is_fixed(self):
        family = closure_to_depth(resolve_family("cone_zk:2"), 3)
        boundary = boundary_approx(family)
        for g in g0_sample(family, 2):
            with self.subTest(g=family.amb.format(g)):
                self.assertEqual(top_free_probe(family, g, boundary, radius=2).verdict, FIXED)

    def test_cone_has_no_local_boundary_witness(self):
        family = closure_to_depth(resolve_family("cone_zk:2"), 3)
        boundary = boundary_approx(family)
        result = local_boundary_witness(family, smallest_basic_open(family, boundary[0]), boundary)
        self.assertEqual(result.verdict, NOT_APPLICABLE)

    def test_local_boundary_on_free_product(self):
        amb = resolve_family("free_product_naturals:2")
        family = closure_to_depth(amb, 3)
        boundary = boundary_approx(family)
        target = principal_filter_of(family, amb.parse("p1*p1*p1"))
        result = local_boundary_witness(family, smallest_basic_open(family, target), boundary)
        self.assertEqual(result.verdict, WITNESS)
        self.assertEqual(result.x, amb.parse("p1*p1*p1"))
        self.assertEqual(result.g_prime, amb.parse("p1^-1"))
        self.assertTrue(replays_local_boundary(family, result.x, result.p, result.q, result.g_prime))
        self.assertFalse(replays_local_boundary(family, result.x, result.p, result.q, amb.parse("p1")))

    def test_local_boundary_needs_a_disjoint_pair(self):
        family = closure_to_depth(resolve_family("naturals"), 3)
        boundary = boundary_approx(family)
        result = local_boundary_witness(family, smallest_basic_open(family, boundary[0]), boundary)
        self.assertEqual(result.verdict, NOT_APPLICABLE)

    def test_open_set_must_meet_the_boundary(self):
        family = closure_to_depth(resolve_family("naturals"), 3)
        top = up_filter(family, family.ideals[FULL_INDEX])
        with self.assertRaises(EmptyOpenSetError):
            local_boundary_witness(family, smallest_basic_open(family, top), [])


class TestChecklist(unittest.TestCase):
    def test_free_product_passes(self):
        report = kirchberg_checklist(closure_to_depth(resolve_family("free_product_naturals:2"), 3), bound=2)
        self.assertEqual(report.verdict, "ChecklistPasses")
        self.assertEqual(report.reasons, [])
        self.assertIn("O_2", report.boundary_quotient)
        statuses = {item.name: item.status for item in report.items}
        self.assertEqual(statuses["amenability"], "ASSUMED")

    def test_free_product_of_three_passes(self):
        report = kirchberg_checklist(closure_to_depth(resolve_family("free_product_naturals:3"), 2), bound=2)
        self.assertEqual(report.verdict, "ChecklistPasses")
        self.assertIn("O_3", report.boundary_quotient)
        statuses = {item.name: item.status for item in report.items}
        self.assertEqual(statuses["not left reversible"], "Passes")
        self.assertEqual(statuses["G_0 acts topologically freely"], "Passes")

    def test_axb_passes(self):
        family = closure_to_depth(resolve_family("axb_integers"), 1)
        report = kirchberg_checklist(family, bound=2, evidence=[])
        self.assertEqual(report.verdict, "ChecklistPasses")

    def test_reversible_semigroups_fail(self):
        report = kirchberg_checklist(closure_to_depth(resolve_family("cone_zk:2"), 3), bound=2)
        self.assertEqual(report.verdict, "ChecklistFails")
        self.assertTrue(any(reason.startswith("not left reversible") for reason in report.reasons))

    def test_cones_fail_on_freeness_first(self):
        for family_id, depth in (("cone_zk:2", 3), ("cone_zk:3", 2), ("naturals", 3)):
            with self.subTest(family=family_id):
                report = kirchberg_checklist(closure_to_depth(resolve_family(family_id), depth), bound=2)
                self.assertEqual(report.verdict, "ChecklistFails")
                self.assertTrue(report.reasons[0].startswith("G_0 acts topologically freely: "))
                self.assertEqual(len(report.reasons), 2)

    def test_trivial_semigroup_fails(self):
        report = kirchberg_checklist(closure_to_depth(resolve_family("trivial"), 1), bound=1, evidence=[])
        self.assertEqual(report.verdict, "ChecklistFails")
        self.assertTrue(any(reason.startswith("nontrivial") for reason in report.reasons))


if __name__ == "__main__":
    unittest.main()
