# -*- coding:utf-8 -*-

"""
Command line tool: build, verify, multiply, compare, strands.

JSON documents go to stdout (or `--out`), a human readable summary and the log go to stderr.
Exit codes: 0 success, 2 config or characteristic, 3 verification failure, 4 parse error.

Author: dgtransfer developers
Date:   2024/03/12
"""

import sys
import argparse

from dgtransfer import const
from dgtransfer.algebra import FieldSpec
from dgtransfer.config import config
from dgtransfer.error import (ConfigError, DGTransferError, Error, InadmissibleCharacteristic, ParseError, ShapeError,
                              VerificationError)
from dgtransfer.report import Report
from dgtransfer.resolution import (build_La, comparison_map, multiply_La, strands_dict, to_dict, verify_comparison,
                                   verify_composition)
from dgtransfer.suites import run_suite
from dgtransfer.utils import logger
from dgtransfer.utils import tools


class JobConfig:
    """ Parameters of one command.

    Attributes:
        n: Number of variables, >= 1.
        a, b, c: Levels, a >= 1, b >= a, c >= b when given.
        characteristic: 0 or a prime p >= n + max(a, b, c).
        max_internal_degree: Strand bound, default a + n + 2.
        seed, samples, exhaustive_limit, max_failures: Sampling and reporting.
        suite: Suite name for `verify`.
        out: Output path, None for stdout.
    """

    def __init__(self, n, a, b=None, c=None, characteristic=const.DEFAULT_CHARACTERISTIC, max_internal_degree=None,
                 seed=const.DEFAULT_SEED, samples=const.DEFAULT_SAMPLES,
                 exhaustive_limit=const.DEFAULT_EXHAUSTIVE_LIMIT, max_failures=const.DEFAULT_MAX_FAILURES,
                 suite=const.SUITE_ALL, out=None):
        if n is None or n < 1:
            raise ConfigError("n must be a positive integer, got {}".format(n))
        if a is None or a < 1:
            raise ConfigError("a must be a positive integer, got {}".format(a))
        if b is not None and b < a:
            raise ConfigError("b must satisfy b >= a, got b={} a={}".format(b, a))
        if c is not None and (b is None or c < b):
            raise ConfigError("c needs b and must satisfy c >= b")
        if suite != const.SUITE_ALL and suite not in const.SUITES:
            raise ConfigError("unknown suite {!r}".format(suite))
        if samples < 1 or exhaustive_limit < 0 or max_failures < 0:
            raise ConfigError("samples must be positive, limits non-negative")
        self.n = n
        self.a = a
        self.b = b
        self.c = c
        self.characteristic = characteristic
        self.field = FieldSpec(characteristic)
        self.field.require_admissible(n + self.top_level, "n={} and level {}".format(n, self.top_level))
        self.max_internal_degree = a + n + 2 if max_internal_degree is None else max_internal_degree
        if self.max_internal_degree < 0:
            raise ConfigError("max internal degree must be non-negative")
        self.seed = seed
        self.samples = samples
        self.exhaustive_limit = exhaustive_limit
        self.max_failures = max_failures
        self.suite = suite
        self.out = out
        self._resolutions = {}

    @property
    def top_level(self):
        return max(x for x in (self.a, self.b, self.c) if x is not None)

    def resolution(self, level, verify=False):
        """ L_level, built once per job. """
        if level not in self._resolutions:
            self._resolutions[level] = build_La(self.n, level, self.field, verify=verify,
                                                max_failures=self.max_failures)
        return self._resolutions[level]

    def header(self):
        data = {"n": self.n, "a": self.a, "characteristic": self.characteristic}
        for key in ("b", "c"):
            if getattr(self, key) is not None:
                data[key] = getattr(self, key)
        return data

    @classmethod
    def from_args(cls, args, defaults):
        """ CLI flags overlaid on the DEFAULTS section of the config. """

        def pick(name, key=None):
            value = getattr(args, name, None)
            return defaults.get(key or name) if value is None else value

        return cls(
            n=args.n,
            a=args.a,
            b=getattr(args, "b", None),
            c=getattr(args, "c", None),
            characteristic=pick("char", "characteristic"),
            max_internal_degree=getattr(args, "max_internal_degree", None),
            seed=pick("seed"),
            samples=pick("samples"),
            exhaustive_limit=defaults.get("exhaustive_limit"),
            max_failures=defaults.get("max_failures"),
            suite=getattr(args, "suite", None) or const.SUITE_ALL,
            out=args.out
        )


def cmd_build(job):
    """ Build and verify L_a.

    Returns:
        document: Serialized L_a, otherwise it's None.
        error: Error information, otherwise it's None.
        report: Build report for the stderr summary, if any.
    """
    try:
        res = job.resolution(job.a, verify=True)
    except VerificationError as e:
        return None, Error(str(e), const.EXIT_VERIFICATION), e.report
    return to_dict(res), None, res.report


def cmd_verify(job):
    """ Run the named suite; the document holds the report. """
    report = run_suite(job, job.suite)
    document = job.header()
    document["suite"] = job.suite
    document["report"] = report.data
    if not report.passed:
        return document, Error("suite {} failed: {}".format(job.suite, ", ".join(report.failing_checks())),
                               const.EXIT_VERIFICATION), report
    return document, None, report


def cmd_multiply(job, alpha, beta):
    """ alpha * beta in L_a, both given in the element grammar. """
    res = job.resolution(job.a)
    try:
        x = res.parse(alpha)
        y = res.parse(beta)
    except ParseError as e:
        return None, Error(str(e), const.EXIT_PARSE), None
    try:
        product = multiply_La(res, x, y, cross_check=True)
    except VerificationError as e:
        return None, Error(str(e), const.EXIT_VERIFICATION), e.report
    document = job.header()
    document.update({"alpha": res.text(x), "beta": res.text(y), "product": res.text(product)})
    return document, None, None


def cmd_compare(job):
    """ f_{b,a} (and f_{c,b}, f_{c,a} when c is given) with their verification. """
    if job.b is None:
        return None, Error("compare needs --b", const.EXIT_CONFIG), None
    report = Report("compare", job.max_failures)
    sampling = dict(seed=job.seed, samples=job.samples, exhaustive_limit=job.exhaustive_limit)
    f_ba = comparison_map(job.n, job.b, job.a, job.field, job.resolution(job.b), job.resolution(job.a))
    maps = {"f{},{}".format(job.b, job.a): f_ba}
    if job.c is not None:
        f_cb = comparison_map(job.n, job.c, job.b, job.field, job.resolution(job.c), job.resolution(job.b))
        f_ca = comparison_map(job.n, job.c, job.a, job.field, job.resolution(job.c), job.resolution(job.a))
        maps["f{},{}".format(job.c, job.b)] = f_cb
        maps["f{},{}".format(job.c, job.a)] = f_ca
        verify_composition(f_cb, f_ba, f_ca, report)
    for name, f in maps.items():
        report.merge(verify_comparison(f, Report(name, job.max_failures), **sampling), name)
    document = job.header()
    document["maps"] = {name: f.to_dict() for name, f in maps.items()}
    document["verification"] = report.data
    if not report.passed:
        return document, Error("comparison failed: {}".format(", ".join(report.failing_checks())),
                               const.EXIT_VERIFICATION), report
    return document, None, report


def cmd_strands(job):
    """ Strand dimensions and homology of L_a for internal degrees 0..max_internal_degree. """
    res = job.resolution(job.a)
    document = job.header()
    document["max_internal_degree"] = job.max_internal_degree
    document["strands"] = strands_dict(res, job.max_internal_degree)
    return document, None, None


class Application:
    """ Command line application: settings, logger, then one command. """

    def initialize(self, config_file=None):
        """ Initialize.

        Args:
            config_file: config file path, normally it"s a json file.
        """
        self._load_settings(config_file)
        self._init_logger()
        self._get_version()

    def _get_version(self):
        logger.debug("version:", const.VERSION, caller=self)

    def _load_settings(self, config_file):
        config.loads(config_file)

    def _init_logger(self):
        """Initialize logger."""
        console = config.log.get("console", True)
        level = config.log.get("level", "INFO")
        path = config.log.get("path", "/tmp/logs/dgtransfer")
        name = config.log.get("name", "dgtransfer.log")
        clear = config.log.get("clear", False)
        backup_count = config.log.get("backup_count", 0)
        if console:
            logger.initLogger(level)
        else:
            logger.initLogger(level, path, name, clear, backup_count)

    def run(self, args):
        """ Run the parsed command; returns the exit code. """
        job = JobConfig.from_args(args, config.defaults)
        if args.command == "build":
            document, error, report = cmd_build(job)
        elif args.command == "verify":
            document, error, report = cmd_verify(job)
        elif args.command == "multiply":
            document, error, report = cmd_multiply(job, args.alpha, args.beta)
        elif args.command == "compare":
            document, error, report = cmd_compare(job)
        else:
            document, error, report = cmd_strands(job)

        if document is not None:
            self._write(document, job.out)
        if report is not None:
            sys.stderr.write(report.summary() + "\n")
        if error:
            sys.stderr.write("error: {}\n".format(error))
            return error.code
        return const.EXIT_OK

    def _write(self, document, out):
        text = tools.dumps(document)
        if out:
            with open(out, "w") as f:
                f.write(text)
        else:
            sys.stdout.write(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of variables")
    common.add_argument("--a", type=int, required=True, help="power of the maximal ideal")
    common.add_argument("--char", type=int, default=None, help="characteristic: 0 or a prime p >= n + a")
    common.add_argument("--seed", type=int, default=None, help="seed of sampled checks")
    common.add_argument("--samples", type=int, default=None, help="number of sampled tuples")
    common.add_argument("--max-internal-degree", type=int, default=None, dest="max_internal_degree")
    common.add_argument("--out", default=None, help="write the JSON document here instead of stdout")
    common.add_argument("--config", default=None, help="json config file")

    parser = argparse.ArgumentParser(prog="dgtransfer",
                                     description="DG algebra structures on minimal resolutions of powers of the "
                                                 "maximal ideal, by homological perturbation.")
    parser.add_argument("--version", action="version", version=const.VERSION)
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    sub.add_parser("build", parents=[common], help="build L_a and print its bases, differential and product")
    verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("--suite", default=const.SUITE_ALL, choices=(const.SUITE_ALL,) + const.SUITES)
    verify.add_argument("--b", type=int, default=None)
    verify.add_argument("--c", type=int, default=None)
    multiply = sub.add_parser("multiply", parents=[common], help="multiply two elements of L_a")
    multiply.add_argument("alpha")
    multiply.add_argument("beta")
    compare = sub.add_parser("compare", parents=[common], help="comparison maps L_b -> L_a")
    compare.add_argument("--b", type=int, required=True)
    compare.add_argument("--c", type=int, default=None)
    sub.add_parser("strands", parents=[common], help="strand homology of L_a")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    application = Application()
    try:
        application.initialize(args.config)
        return application.run(args)
    except (ConfigError, InadmissibleCharacteristic) as e:
        sys.stderr.write("error: {}\n".format(e))
        return const.EXIT_CONFIG
    except ParseError as e:
        sys.stderr.write("error: {}\n".format(e))
        return const.EXIT_PARSE
    except VerificationError as e:
        if e.report is not None:
            sys.stderr.write(e.report.summary() + "\n")
        sys.stderr.write("error: {}\n".format(e))
        return const.EXIT_VERIFICATION
    except ShapeError as e:
        sys.stderr.write("error: {}\n".format(e))
        return const.EXIT_CONFIG
    except DGTransferError as e:
        logger.exception("unexpected failure:", e)
        return const.EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
