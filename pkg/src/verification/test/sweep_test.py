import unittest

from mock import patch

from src.core.report import EXIT_OK
from src.verification.sweep import (
    run_sweeps,
    sweep_decompositions,
    sweep_division,
    sweep_implications,
    sweep_lambda_wsd,
    sweep_membership_oracle,
    sweep_quotients,
    sweep_refinement_step,
    sweep_wsd_confluence,
)


class TestSweeps(unittest.TestCase):
    def assertPasses(self, report):
        self.assertTrue(report.records, report.title)
        self.assertEqual(report.exitCode, EXIT_OK, report.serialize())

    def test_membership_oracle(self):
        report = sweep_membership_oracle()
        self.assertPasses(report)
        self.assertIn("of 2401 vectors", report.records[0].details[0])

    def test_refinement_step(self):
        report = sweep_refinement_step()
        self.assertPasses(report)
        self.assertEqual(
            [r.check for r in report.records][:2],
            ["refinement-step.matrix", "refinement-step.homomorphism"],
        )

    def test_division(self):
        report = sweep_division(tops=(2, 3))
        self.assertPasses(report)
        self.assertEqual(len(report.records), 2 * 2 + 3 * 2)
        self.assertEqual(report.records[0].subject, "threechain[1/2]")

    def test_wsd_confluence(self):
        report = sweep_wsd_confluence(peaks=100, seed=3)
        self.assertPasses(report)
        self.assertEqual(len(report.records), 11)
        self.assertTrue(report.records[0].details[0].startswith("20 peaks in "))
        total = report.records[-1]
        self.assertEqual(total.check, "confluence-peaks")
        self.assertGreaterEqual(total.decision.witness, 100)
        self.assertEqual(total.details, ("100 of 100 peaks",))

    def test_quotients(self):
        report = sweep_quotients(max_size=4)
        self.assertPasses(report)
        checks = {r.check for r in report.records}
        self.assertIn("least-cancellative", checks)
        self.assertIn("conical-separative-quotient", checks)

    def test_decompositions(self):
        report = sweep_decompositions(max_size=4, max_n=2)
        self.assertPasses(report)
        self.assertIn("chain3", {r.subject for r in report.records})
        refining = {r.subject for r in report.records if r.check == "refinement-subcones"}
        self.assertIn("chain3", refining)
        self.assertIn("boolean_x_boolean", refining)

    def test_lambda_wsd(self):
        report = sweep_lambda_wsd()
        self.assertPasses(report)
        equality, wsd = report.records
        self.assertTrue(equality.decision.isTrue)
        self.assertTrue(wsd.decision.isFalse)
        self.assertFalse(wsd.expected)

    def test_implications(self):
        report = sweep_implications()
        self.assertPasses(report)
        self.assertIn("torsion-free-separative", {r.check for r in report.records})

    def test_run_sweeps(self):
        with patch("src.verification.sweep.SWEEPS", (sweep_lambda_wsd, sweep_membership_oracle)):
            report = run_sweeps()
        self.assertEqual(report.title, "corpus")
        self.assertEqual(len(report.records), 3)
        self.assertEqual(report.exitCode, EXIT_OK)


if __name__ == "__main__":
    unittest.main()
