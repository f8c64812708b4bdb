"""Tests for the catalog, config ingestion, Dossier production and witness replay."""

import shutil
import tempfile
import unittest
from pathlib import Path

from semilab.catalog import Analyze, Verify, build_pair, list_catalog, load_config, load_dossier, resolve_family
from semilab.config import INFINITE_RANK_TRUNCATION, SEMIGROUPS_CONFIG_DIR
from semilab.errors import ConfigError
from semilab.models import BoundedModel, NumericalModel
from semilab.schemas import AnalysisConfig, SemigroupConfig

SMALL = AnalysisConfig(depth=2, bound=2, hull_depth=2, samples=5)


class TestCatalog(unittest.TestCase):
    def test_unknown_and_malformed_ids(self):
        for family_id in ("nope", "numerical:2,x", "numerical:", "cone_zk:-1", "free_product_naturals:0", "naturals:3"):
            with self.subTest(family=family_id):
                with self.assertRaises(ConfigError) as caught:
                    resolve_family(family_id)
                self.assertEqual(caught.exception.path, "family")

    def test_infinite_rank_is_truncated(self):
        amb = resolve_family("free_product_naturals:inf")
        self.assertEqual(len(amb.generators), INFINITE_RANK_TRUNCATION)
        self.assertIn(str(INFINITE_RANK_TRUNCATION), amb.metadata.truncation_note)

    def test_cone_of_dimension_zero_is_trivial(self):
        self.assertTrue(resolve_family("cone_zk:0").is_trivial)

    def test_axb_primes(self):
        amb = resolve_family("axb_integers:2,5")
        self.assertEqual([amb.format(g) for g in amb.generators], ["(1,1)", "(0,-1)", "(0,2)", "(0,5)"])
        self.assertIn("semidirect product", amb.metadata.description)

    def test_list_catalog(self):
        catalog = list_catalog()
        self.assertIn("numerical:a1,...,ak", set(catalog["family_id"]))
        self.assertIn("free_product_naturals:inf", set(catalog["family_id"]))
        self.assertTrue(catalog["amenability_citation"].notna().all())
        row = catalog.set_index("family_id").loc["cone_zk:k"]
        self.assertFalse(row["topologically_free"])


class TestConfig(unittest.TestCase):
    def setUp(self):
        self.temp_dir = Path(tempfile.mkdtemp())

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def write(self, text: str) -> Path:
        path = self.temp_dir / "semigroup.yaml"
        path.write_text(text, encoding="utf-8")
        return path

    def test_shipped_configs_build(self):
        for path in sorted(SEMIGROUPS_CONFIG_DIR.glob("*.yaml")):
            with self.subTest(config=path.name):
                amb = build_pair(load_config(path))
                self.assertTrue(amb.generators)

    def test_inline_integers_are_exact(self):
        amb = build_pair(load_config(SEMIGROUPS_CONFIG_DIR / "numerical_2_3.yaml"))
        self.assertIsInstance(amb.model, NumericalModel)
        self.assertEqual(amb.family_id, "numerical_2_3")
        self.assertTrue(amb.exact)

    def test_inline_free_group_is_bounded(self):
        amb = build_pair(load_config(SEMIGROUPS_CONFIG_DIR / "free_monoid_2.yaml"))
        self.assertIsInstance(amb.model, BoundedModel)
        self.assertFalse(amb.exact)
        self.assertIsNotNone(amb.metadata.truncation_note)
        self.assertTrue(amb.metadata.amenable)

    def test_metadata_override(self):
        amb = build_pair(load_config(SEMIGROUPS_CONFIG_DIR / "axb_override.yaml"))
        self.assertEqual(amb.family_id, "axb_unproven_toeplitz")
        self.assertEqual(amb.metadata.proven, {"ore": "left-ore"})
        self.assertTrue(amb.metadata.topologically_free)

    def test_errors_carry_the_key_path(self):
        cases = {
            "ambient: free_group\ngenerators: [p1]\n": "<root>",
            "family: naturals\ncolour: blue\n": "colour",
            "ambient: lattice\ndimension: 2\ngenerators: ['(1,0,0)']\n": "generators[0]",
            "ambient: integers\ngenerators: ['1']\nmetadata:\n  amenable: maybe\n": "metadata.amenable",
            "- naturals\n": "<root>",
        }
        for text, key in cases.items():
            with self.subTest(key=key, text=text):
                with self.assertRaises(ConfigError) as caught:
                    build_pair(load_config(self.write(text)))
                self.assertEqual(caught.exception.path, key)

    def test_missing_file(self):
        with self.assertRaises(ConfigError):
            load_config(self.temp_dir / "missing.yaml")


class TestAnalyzeAndVerify(unittest.TestCase):
    def setUp(self):
        self.temp_dir = Path(tempfile.mkdtemp())

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def analyze(self, family_id: str, settings: AnalysisConfig = SMALL):
        source = SemigroupConfig(family=family_id)
        return Analyze(build_pair(source), source, settings).run()

    def test_numerical_dossier(self):
        dossier = self.analyze("numerical:2,3")
        self.assertEqual(dossier.independence.verdict, "Dependent")
        self.assertEqual(dossier.independence.ideal, "P≥2")
        statuses = {report.condition: report.status for report in dossier.conditions}
        self.assertEqual(statuses["ql"], "Fails")
        self.assertEqual(statuses["reversible"], "HoldsProven")
        self.assertEqual(dossier.checklist.verdict, "ChecklistFails")
        self.assertIsNone(dossier.wall_clock)
        self.assertTrue(Verify(dossier).run().passed)

    def test_free_product_dossier(self):
        dossier = self.analyze("free_product_naturals:2", AnalysisConfig(depth=3, bound=2, hull_depth=2, samples=5))
        self.assertEqual(dossier.family.nonempty_count, 15)
        self.assertEqual(dossier.spectrum.filter_count, 15)
        self.assertEqual(dossier.spectrum.ultrafilter_count, 8)
        self.assertEqual(dossier.spectrum.boundary_size, 8)
        self.assertEqual(dossier.local_boundary.verdict, "Witness")
        self.assertEqual(dossier.checklist.verdict, "ChecklistPasses")
        self.assertTrue(all(sample.verdict == "NotInG0" for sample in dossier.g0_samples))
        report = Verify(dossier).run()
        self.assertTrue(report.passed, [check.detail for check in report.failures])

    def test_hull_summary(self):
        dossier = self.analyze("naturals")
        self.assertEqual(dossier.hull.size, 6)
        self.assertEqual(dossier.hull.elements[-1], "0")
        self.assertEqual(dossier.hull.words[0], "1")

    def test_same_seed_same_dossier(self):
        settings = AnalysisConfig(depth=2, bound=3, hull_depth=1, samples=3, seed=7)
        first = self.analyze("cone_zk:2", settings)
        second = self.analyze("cone_zk:2", settings)
        self.assertEqual(first.model_dump(), second.model_dump())
        self.assertEqual(len(first.g0_samples), 3)

    def test_timing_is_opt_in(self):
        dossier = self.analyze("naturals", AnalysisConfig(depth=1, bound=1, hull_depth=1, timing=True))
        self.assertIsNotNone(dossier.wall_clock)

    def test_tampered_witness_is_rejected(self):
        dossier = self.analyze("free_product_naturals:2")
        position = next(i for i, report in enumerate(dossier.conditions) if report.condition == "reversible")
        dossier.conditions[position].witness["q"] = "p1*p2"
        report = Verify(dossier).run()
        self.assertFalse(report.passed)
        self.assertEqual([check.path for check in report.failures], [f"conditions[{position}].witness"])

    def test_tampered_ideal_is_rejected(self):
        dossier = self.analyze("numerical:2,3")
        dossier.family.ideals[2] = "{3} ∪ P≥5"
        report = Verify(dossier).run()
        self.assertIn("family.ideals[2]", [check.path for check in report.failures])

    def test_verify_at_a_deeper_depth(self):
        dossier = self.analyze("numerical:2,3")
        report = Verify(dossier, depth=3).run()
        self.assertTrue(report.passed)
        self.assertEqual(report.depth, 3)
        self.assertNotIn("spectrum.counts", [check.path for check in report.checks])

    def test_saved_dossier_loads(self):
        source = SemigroupConfig(family="naturals")
        analyze = Analyze(build_pair(source), source, SMALL)
        dossier = analyze.run()
        path = analyze.save(dossier, self.temp_dir / "naturals.json")
        self.assertEqual(load_dossier(path), dossier)

    def test_broken_dossier_file(self):
        path = self.temp_dir / "broken.json"
        path.write_text('{"schema_version": 1}', encoding="utf-8")
        with self.assertRaises(ConfigError):
            load_dossier(path)


if __name__ == "__main__":
    unittest.main()
