import io
import os
import sys
import json
import tempfile
import unittest
from unittest import mock

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from config import *
from dgtransfer import const
from dgtransfer.cli import JobConfig, main
from dgtransfer.error import ConfigError, InadmissibleCharacteristic


def run(*argv):
    """ (exit code, stdout text) of one cli invocation. """
    with mock.patch("sys.stdout", new_callable=io.StringIO) as out, \
            mock.patch("sys.stderr", new_callable=io.StringIO):
        code = main([str(x) for x in argv])
        return code, out.getvalue()


class TestCommands(unittest.TestCase):

    def test_build(self):
        code, text = run("build", "--n", N, "--a", A)
        self.assertEqual(code, const.EXIT_OK)
        document = json.loads(text)
        self.assertEqual(document["ranks"], [1, 3, 2])
        self.assertTrue(document["verification"]["passed"])

    def test_build_inadmissible(self):
        code, text = run("build", "--n", N, "--a", A, "--char", SMALL_PRIME)
        self.assertEqual(code, const.EXIT_CONFIG)
        self.assertEqual(text, "")

    def test_multiply(self):
        code, text = run("multiply", "--n", N, "--a", A, "1*y^[2,0]", "1*y^[0,2]")
        self.assertEqual(code, const.EXIT_OK)
        self.assertEqual(json.loads(text)["product"], "-x2*b1 - x1*b2")

    def test_multiply_parse_error(self):
        code, _ = run("multiply", "--n", N, "--a", A, "b7", "1")
        self.assertEqual(code, const.EXIT_PARSE)

    def test_compare(self):
        code, text = run("compare", "--n", N, "--a", 1, "--b", 2)
        self.assertEqual(code, const.EXIT_OK)
        document = json.loads(text)
        self.assertIn("f2,1", document["maps"])
        self.assertTrue(document["verification"]["passed"])

    def test_compare_bad_levels(self):
        code, _ = run("compare", "--n", N, "--a", 2, "--b", 1)
        self.assertEqual(code, const.EXIT_CONFIG)

    def test_strands(self):
        code, text = run("strands", "--n", N, "--a", A, "--max-internal-degree", 3)
        self.assertEqual(code, const.EXIT_OK)
        strands = json.loads(text)["strands"]
        self.assertEqual(sorted(strands), ["0", "1", "2", "3"])
        self.assertEqual(strands["1"]["homology"][0], 2)

    def test_verify_is_deterministic(self):
        first = run("verify", "--n", N, "--a", A, "--suite", "sdr", "--seed", SEED)
        second = run("verify", "--n", N, "--a", A, "--suite", "sdr", "--seed", SEED)
        self.assertEqual(first[0], const.EXIT_OK)
        self.assertEqual(first, second)
        self.assertTrue(json.loads(first[1])["report"]["passed"])

    def test_verify_all_is_byte_identical(self):
        argv = ("verify", "--suite", "all", "--n", N, "--a", A, "--seed", SEED)
        first, second = run(*argv), run(*argv)
        self.assertEqual(first[0], const.EXIT_OK)
        self.assertEqual(first[1], second[1])
        report = json.loads(first[1])["report"]
        self.assertTrue(report["passed"])
        self.assertEqual(set(check.split(".")[0] for check in report["checks"]), set(const.SUITES))

    def test_out_and_config(self):
        with tempfile.TemporaryDirectory() as tmp:
            config_file = os.path.join(tmp, "config.json")
            with open(config_file, "w") as f:
                json.dump({"LOG": {"level": "WARNING"}, "DEFAULTS": {"characteristic": PRIME}}, f)
            out = os.path.join(tmp, "l2.json")
            code, text = run("build", "--n", N, "--a", A, "--config", config_file, "--out", out)
            self.assertEqual(code, const.EXIT_OK)
            self.assertEqual(text, "")
            with open(out) as f:
                self.assertEqual(json.load(f)["characteristic"], PRIME)

    def test_bad_config_file(self):
        code, _ = run("build", "--n", N, "--a", A, "--config", "/nonexistent/config.json")
        self.assertEqual(code, const.EXIT_CONFIG)


class TestJobConfig(unittest.TestCase):

    def test_levels(self):
        with self.assertRaises(ConfigError):
            JobConfig(N, 0)
        with self.assertRaises(ConfigError):
            JobConfig(N, 2, b=1)
        with self.assertRaises(ConfigError):
            JobConfig(N, 1, c=3)
        with self.assertRaises(ConfigError):
            JobConfig(N, 1, suite="everything")

    def test_characteristic_covers_all_levels(self):
        with self.assertRaises(InadmissibleCharacteristic):
            JobConfig(N, 1, b=2, c=5, characteristic=5)
        job = JobConfig(N, 1, b=2, c=3, characteristic=PRIME)
        self.assertEqual(job.top_level, 3)
        self.assertEqual(job.max_internal_degree, 1 + N + 2)

    def test_resolutions_are_cached(self):
        job = JobConfig(N, 1)
        self.assertIs(job.resolution(1), job.resolution(1))


if __name__ == "__main__":
    unittest.main(verbosity=2)
