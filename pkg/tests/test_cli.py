"""Tests for the semilab command line."""

import json
import shutil
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from typer.testing import CliRunner

from semilab.cli.semilab_cli import app
from semilab.config import EXIT_BUDGET, EXIT_USAGE, EXIT_VERDICT_FAILURE, SEMIGROUPS_CONFIG_DIR
from semilab.errors import BudgetExceededError

SMALL = ["--depth", "2", "--bound", "2", "--hull-depth", "1", "--samples", "3"]


class TestCli(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()
        self.temp_dir = Path(tempfile.mkdtemp())

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def test_analyze_then_verify(self):
        out = self.temp_dir / "free.json"
        result = self.runner.invoke(app, ["analyze", "--family", "free_product_naturals:2", *SMALL, "--out", str(out)])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("checklist: ChecklistPasses", result.output)
        self.assertTrue(out.exists())

        result = self.runner.invoke(app, ["verify", str(out)])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("checks passed for free_product_naturals:2 at depth 2", result.output)

    def test_tampered_dossier_fails(self):
        out = self.temp_dir / "numerical.json"
        result = self.runner.invoke(app, ["analyze", "--family", "numerical:2,3", *SMALL, "--out", str(out)])
        self.assertEqual(result.exit_code, 0, result.output)
        data = json.loads(out.read_text(encoding="utf-8"))
        data["independence"]["union"] = ["{2} ∪ P≥4"]
        out.write_text(json.dumps(data, ensure_ascii=False), encoding="utf-8")

        result = self.runner.invoke(app, ["verify", str(out)])
        self.assertEqual(result.exit_code, EXIT_VERDICT_FAILURE)
        self.assertIn("FAIL independence", result.output)

    def test_analyze_prints_json_without_out(self):
        result = self.runner.invoke(app, ["analyze", "--family", "naturals", *SMALL])
        self.assertEqual(result.exit_code, 0, result.output)
        dossier = json.loads(result.stdout)
        self.assertEqual(dossier["family_id"], "naturals")
        self.assertEqual(dossier["spectrum"]["boundary_size"], 1)

    def test_analyze_from_config(self):
        out = self.temp_dir / "config.json"
        config = SEMIGROUPS_CONFIG_DIR / "numerical_2_3.yaml"
        result = self.runner.invoke(app, ["analyze", "--config", str(config), *SMALL, "--out", str(out)])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("numerical_2_3", result.output)

    def test_exactly_one_source(self):
        config = str(SEMIGROUPS_CONFIG_DIR / "numerical_2_3.yaml")
        for args in (["analyze"], ["analyze", "--family", "naturals", "--config", config]):
            with self.subTest(args=args):
                self.assertEqual(self.runner.invoke(app, args).exit_code, EXIT_USAGE)

    def test_unknown_family_is_a_usage_error(self):
        result = self.runner.invoke(app, ["analyze", "--family", "nope"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        self.assertIn("Unknown family", result.output)

    def test_invalid_settings_are_usage_errors(self):
        result = self.runner.invoke(app, ["analyze", "--family", "naturals", "--depth", "0"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        self.assertIn("depth", result.output)

    def test_strict_fails_for_reversible_semigroups(self):
        result = self.runner.invoke(
            app, ["analyze", "--family", "cone_zk:2", *SMALL, "--strict", "--out", str(self.temp_dir / "cone.json")]
        )
        self.assertEqual(result.exit_code, EXIT_VERDICT_FAILURE)
        self.assertIn("ChecklistFails", result.output)

    def test_budget_exit_code(self):
        with patch("semilab.catalog.analyze.enumerate_filters", side_effect=BudgetExceededError("too many filters")):
            result = self.runner.invoke(app, ["analyze", "--family", "naturals", *SMALL])
        self.assertEqual(result.exit_code, EXIT_BUDGET)
        self.assertIn("too many filters", result.output)

    def test_list(self):
        result = self.runner.invoke(app, ["list"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("free_product_naturals:n", result.output)
        self.assertIn("numerical:a1,...,ak", result.output)

        result = self.runner.invoke(app, ["list", "--json"])
        records = json.loads(result.stdout)
        self.assertIn("axb_integers", {record["family_id"] for record in records})

    def test_probe(self):
        result = self.runner.invoke(app, ["probe", "--condition", "ql", "--family", "numerical:2,3"])
        self.assertEqual(result.exit_code, 0, result.output)
        report = json.loads(result.stdout)
        self.assertEqual(report["status"], "Fails")
        self.assertEqual(report["witness"]["intersection"], "P≥5")

    def test_probe_rejects_unknown_conditions(self):
        result = self.runner.invoke(app, ["probe", "--condition", "amenable", "--family", "naturals"])
        self.assertEqual(result.exit_code, 2)

    def test_schema(self):
        out = self.temp_dir / "dossier_schema.json"
        result = self.runner.invoke(app, ["schema", "--out", str(out)])
        self.assertEqual(result.exit_code, 0, result.output)
        schema = json.loads(out.read_text(encoding="utf-8"))
        self.assertEqual(schema["title"], "Dossier")
        self.assertIn("ChecklistReport", schema["$defs"])


if __name__ == "__main__":
    unittest.main()
