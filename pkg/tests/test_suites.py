import os
import sys
import unittest

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from config import *
from dgtransfer import const
from dgtransfer.cli import JobConfig
from dgtransfer.perturbation import verify_perturbed_special
from dgtransfer.resolution import verify_resolution
from dgtransfer.suites import comparison_levels, run_suite
from dgtransfer.transfer import verify_dg_axioms


class TestNamedSuites(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.job = JobConfig(N, A, seed=SEED, samples=SAMPLES)

    def run_named(self, suite):
        report = run_suite(self.job, suite)
        self.assertTrue(report.passed, report.summary())
        self.assertTrue(report.checks)
        return report

    def test_rows(self):
        report = self.run_named(const.SUITE_ROWS)
        self.assertIn("kernel_in_ker_kappa", report.checks)

    def test_sdr(self):
        report = self.run_named(const.SUITE_SDR)
        self.assertLessEqual(report.notes["nilpotency_order"], A)

    def test_dg(self):
        report = self.run_named(const.SUITE_DG)
        self.assertEqual(report.checks["kappa_formula"]["items"], 36)

    def test_resolution(self):
        self.run_named(const.SUITE_RESOLUTION)

    def test_comparison(self):
        self.assertEqual(comparison_levels(self.job), (None, A + 1, A))
        report = self.run_named(const.SUITE_COMPARISON)
        self.assertTrue(any(check.startswith("f3,2.") for check in report.checks))

    def test_htt(self):
        report = self.run_named(const.SUITE_HTT)
        self.assertGreaterEqual(report.checks["pbt4_terms_vanish"]["items"], 200)
        self.assertEqual(report.notes["pbt4.mode"], const.MODE_EXHAUSTIVE)
        self.assertTrue(report.notes["all PBT3/PBT4 terms vanish"])

    def test_all_merges_every_suite(self):
        report = self.run_named(const.SUITE_ALL)
        prefixes = set(check.split(".")[0] for check in report.checks)
        self.assertEqual(prefixes, set(const.SUITES))

    def test_composition_of_comparisons(self):
        job = JobConfig(N, 1, b=2, c=3, seed=SEED, samples=SAMPLES)
        report = run_suite(job, const.SUITE_COMPARISON)
        self.assertTrue(report.passed, report.summary())
        self.assertTrue(any(check.startswith("f3,1.") for check in report.checks))


class TestThreeVariables(unittest.TestCase):

    def test_levels(self):
        for a in (1, 2, 3):
            job = JobConfig(3, a, seed=SEED, samples=SAMPLES)
            res = job.resolution(a)
            report = verify_resolution(res, job.max_internal_degree)
            self.assertTrue(report.passed, report.summary())
            report = verify_perturbed_special(res.perturbed)
            self.assertTrue(report.passed, report.summary())
            report = verify_dg_axioms(res.product, seed=SEED, samples=SAMPLES)
            self.assertTrue(report.passed, report.summary())

    def test_all_suites(self):
        report = run_suite(JobConfig(3, 2, seed=SEED, samples=SAMPLES))
        self.assertTrue(report.passed, report.summary())


class TestModP(unittest.TestCase):

    def test_all_suites(self):
        job = JobConfig(N, 3, characteristic=PRIME, seed=SEED, samples=SAMPLES)
        report = run_suite(job)
        self.assertTrue(report.passed, report.summary())
        self.assertIn("resolution.mod_p", set(check.rsplit(".", 1)[0] for check in report.checks))

    def test_repeat_is_identical(self):
        first = run_suite(JobConfig(N, 3, characteristic=PRIME, seed=SEED, samples=SAMPLES), const.SUITE_DG)
        second = run_suite(JobConfig(N, 3, characteristic=PRIME, seed=SEED, samples=SAMPLES), const.SUITE_DG)
        self.assertEqual(first.data, second.data)


if __name__ == "__main__":
    unittest.main(verbosity=2)
