import io
import os
import tempfile
import unittest

from mock import patch

from src.cli.cli import main
from src.cli.test.parser_test import CANONICAL
from src.cones.example import ContradictionError
from src.core.decision import Decision
from src.core.equations import SearchSpaceExceeded
from src.core.report import EXIT_FAILED, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, Report
from src.utils.config import getSettings, useSettings
from src.utils.logger import Logger, getLogger, setLogger


class CliTestCase(unittest.TestCase):
    def setUp(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.directory = directory.name
        self.monoids = self.write("monoids.mon", CANONICAL)
        self.addCleanup(useSettings, getSettings())
        self.addCleanup(setLogger, getLogger())
        setLogger(Logger(level="silent"))

    def write(self, name: str, text: str) -> str:
        path = os.path.join(self.directory, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def run_cli(self, *argv):
        out = io.StringIO()
        code = main(["--log-level", "silent", *argv], stdout=out)
        return code, out.getvalue()


class TestCheck(CliTestCase):
    def test_conical(self):
        code, out = self.run_cli("check", self.monoids, "threechain", "conical")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("report check threechain\n"))
        self.assertIn(" conical threechain True\n", out)
        self.assertTrue(out.endswith("1 records, 0 failed, 0 unknown\n"))

    def test_threechain_is_not_refinement(self):
        code, out = self.run_cli("check", self.monoids, "threechain", "refinement")
        self.assertEqual(code, EXIT_FAILED)
        self.assertIn("FAILED", out)
        self.assertIn("  witness (", out)

    def test_unperforation_with_witness(self):
        code, out = self.run_cli(
            "check", self.monoids, "twosevens", "p-unperforated", "--pset", "2", "--bound", "3"
        )
        self.assertEqual(code, EXIT_FAILED)
        self.assertIn("  witness p=2 (", out)

    def test_pset_required(self):
        code, out = self.run_cli("check", self.monoids, "twosevens", "p-torsion-free")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")

    def test_input_errors(self):
        bad = self.write("bad.mon", "monoid A qcone 1\ngenerator x\nend\n")
        self.assertEqual(self.run_cli("check", bad, "A", "conical")[0], EXIT_USAGE)
        missing = os.path.join(self.directory, "missing.mon")
        self.assertEqual(self.run_cli("check", missing, "A", "conical")[0], EXIT_USAGE)
        self.assertEqual(
            self.run_cli("check", self.monoids, "nothing", "conical")[0], EXIT_USAGE
        )

    def test_unknown_predicate(self):
        with self.assertRaises(SystemExit) as context:
            self.run_cli("check", self.monoids, "threechain", "finite")
        self.assertEqual(context.exception.code, EXIT_USAGE)

    def test_byte_stable(self):
        argv = ("check", self.monoids, "idempotent2", "separative", "--bound", "3")
        self.assertEqual(self.run_cli(*argv), self.run_cli(*argv))

    def test_timings(self):
        _, out = self.run_cli("--timings", "check", self.monoids, "threechain", "conical")
        self.assertIn("  elapsed ", out)
        _, out = self.run_cli("check", self.monoids, "threechain", "conical")
        self.assertNotIn("elapsed", out)

    def test_config(self):
        config = self.write("config.yml", "CHECK_BOUND: 2\nLOGGING:\n  LEVEL: silent\n")
        code, _ = self.run_cli("--config", config, "check", self.monoids, "twosevens", "conical")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(getSettings().check_bound, 2)


class TestCommands(CliTestCase):
    def test_refine(self):
        code, out = self.run_cli("refine", self.monoids, "threechain", "1", "1", "inf", "0")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("refinement-matrix threechain:1+1=inf+0 True", out)
        code, _ = self.run_cli("refine", self.monoids, "threechain", "1", "inf", "1", "1")
        self.assertEqual(code, EXIT_FAILED)
        code, _ = self.run_cli("refine", self.monoids, "threechain", "1", "0", "0", "0")
        self.assertEqual(code, EXIT_USAGE)

    def test_solve(self):
        system = self.write("system.eq", "unknowns x\nequation x + 1 = inf\n")
        code, out = self.run_cli("solve", self.monoids, "threechain", system)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("  witness x = ", out)
        impossible = self.write("none.eq", "unknowns x\nequation x + inf = 1\n")
        code, _ = self.run_cli("solve", self.monoids, "threechain", impossible)
        self.assertEqual(code, EXIT_FAILED)

    def test_solve_ceiling(self):
        system = self.write("system.eq", "unknowns x\nequation x + 1 = inf\n")
        with patch("src.cli.cli.solve_system_decision", side_effect=SearchSpaceExceeded(10, 1)):
            code, _ = self.run_cli("solve", self.monoids, "threechain", system)
        self.assertEqual(code, EXIT_UNKNOWN)

    def test_quotient(self):
        code, out = self.run_cli("quotient", self.monoids, "threechain", "separative")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("  witness {0} {1,inf}", out)
        self.assertIn("separative threechain/~ True", out)
        code, _ = self.run_cli("quotient", self.monoids, "twosevens", "cancellative")
        self.assertEqual(code, EXIT_USAGE)
        code, _ = self.run_cli("quotient", self.monoids, "threechain", "torsion")
        self.assertEqual(code, EXIT_USAGE)

    def test_division_step(self):
        code, out = self.run_cli("step", self.monoids, "threechain", "division", "1", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("  extension threechain[1/2]", out)
        self.assertIn("  assert divides True", out)

    def test_wsd_step(self):
        code, out = self.run_cli(
            "step", self.monoids, "threechain", "wsd", "1", "1", "1", "inf", "--bound", "3"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("  witnesses ([0, 1*e0], [0, 1*e1])", out)

    def test_refinement_step(self):
        code, out = self.run_cli(
            "step", self.monoids, "threechain", "refinement", "1", "inf", "inf", "1", "--bound", "4"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("  assert matrix True", out)
        code, _ = self.run_cli(
            "step", self.monoids, "twosevens", "refinement", "2", "7", "7", "2"
        )
        self.assertEqual(code, EXIT_USAGE)

    def test_step_arity(self):
        with self.assertRaises(SystemExit) as context:
            self.run_cli("step", self.monoids, "threechain", "division", "1")
        self.assertEqual(context.exception.code, EXIT_USAGE)

    def test_example314(self):
        code, out = self.run_cli(
            "example314", "--max-n", "1", "--max-k", "2", "--claim2-n", "1", "--max-m", "2"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("report example314\n"))

    def test_example314_ceiling(self):
        config = self.write("config.yml", "SEARCH_CEILING: 1\n")
        code, out = self.run_cli(
            "--config", config, "example314",
            "--max-n", "0", "--max-k", "1", "--claim2-n", "0", "--max-m", "0",
        )
        self.assertEqual(code, EXIT_UNKNOWN)
        self.assertIn(" claim1 d0 Unknown(1)\n", out)
        self.assertTrue(out.endswith("5 records, 0 failed, 2 unknown\n"))

    def test_example314_contradiction(self):
        with patch("src.cli.cli.run_example314", side_effect=ContradictionError("d0")):
            code, out = self.run_cli("example314")
        self.assertEqual(code, EXIT_FAILED)
        self.assertEqual(out, "")

    def test_lambda_wsd(self):
        code, out = self.run_cli("lambda-wsd")
        self.assertEqual(code, EXIT_OK)
        self.assertIn(" wsd Lambda(Q+) False expected False\n", out)
        self.assertIn("  no choice of flags fits: the instance has no solution\n", out)

    def test_corpus(self):
        report = Report("corpus")
        report.add("simple", "boolean", Decision.unknown(6))
        with patch("src.cli.cli.run_sweeps", return_value=report) as sweeps:
            code, out = self.run_cli("corpus")
        sweeps.assert_called_once_with()
        self.assertEqual(code, EXIT_UNKNOWN)
        self.assertIn("simple boolean Unknown(6)", out)


if __name__ == "__main__":
    unittest.main()
