from django.test import SimpleTestCase, tag

from core.exceptions import InfeasibleError, ParameterError
from explore.sweep import CLAIMS, default_claims, sweep_cube


class SweepTests(SimpleTestCase):
    def test_three_cube_passes_every_claim(self):
        report = sweep_cube(3)
        self.assertEqual(report.enumerated, 255)
        self.assertEqual(report.checked, 255)
        self.assertEqual(set(report.tallies), set(CLAIMS))
        self.assertTrue(report.passed, {k: v.counterexamples for k, v in report.tallies.items()})

    def test_rtd35_is_attained(self):
        tally = sweep_cube(3, claims=["rtd35"]).tallies["rtd35"]
        self.assertGreater(tally.attained, 0)
        self.assertEqual(tally.violations, 0)

    def test_every_class_is_considered_for_unconditional_claims(self):
        report = sweep_cube(2, claims=["sauer", "quadratic_bound"])
        self.assertEqual(report.tallies["sauer"].considered, 15)
        self.assertEqual(report.tallies["quadratic_bound"].considered, 15)

    def test_dedup_checks_fewer_classes(self):
        report = sweep_cube(3, claims=["f23", "maximal"], dedup=True)
        self.assertEqual(report.enumerated, 255)
        self.assertLess(report.checked, 255)
        self.assertTrue(report.passed)

    def test_default_claims(self):
        self.assertEqual(default_claims(3), list(CLAIMS))
        self.assertEqual(default_claims(4), ["f36", "rtd35", "rtd34", "vcd2"])

    def test_bad_requests(self):
        with self.assertRaises(ParameterError):
            sweep_cube(2, claims=["nonsense"])
        with self.assertRaises(InfeasibleError):
            sweep_cube(5)
        with self.assertRaisesMessage(InfeasibleError, "subclass_monotone (n <= 3)"):
            sweep_cube(4, claims=["subclass_monotone"])

    @tag("slow")
    def test_four_cube(self):
        report = sweep_cube(4)
        self.assertEqual(report.enumerated, 65535)
        self.assertTrue(report.passed)
        self.assertGreater(report.tallies["rtd35"].attained, 0)
