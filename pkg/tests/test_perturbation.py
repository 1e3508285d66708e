import os
import sys
import unittest

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from config import *
from dgtransfer.algebra import FieldSpec, polynomial_ring
from dgtransfer.error import NotSmall, PerturbationError
from dgtransfer.homological import BasedModule, ChainComplex, GradedMap, GradedModule, ModuleMap
from dgtransfer.perturbation import (Perturbation, PerturbedSdr, check_identity_when_zero, check_series_truncation,
                                     nilpotency_order, perturb, verify_perturbed_special)
from dgtransfer.resolution import build_La


def constant_complex(names):
    """ One generator per homological degree, all of internal degree 0, zero differential. """
    ring = polynomial_ring(1, 0)
    components = {d: BasedModule([name], {name: 0}, ring) for d, name in enumerate(names)}
    return ring, ChainComplex(GradedModule(components, ring))


class TestPerturbationLemma(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.res = build_La(N, A, FieldSpec(0))

    def test_nilpotency(self):
        order = self.res.perturbed.nilpotency_order
        self.assertGreaterEqual(order, 1)
        self.assertLessEqual(order, A)
        sdr = self.res.sdr
        self.assertEqual(nilpotency_order(self.res.xa.vertical, sdr.h), order)

    def test_perturbed_retract_is_special(self):
        report = verify_perturbed_special(self.res.perturbed)
        self.assertTrue(report.passed, report.summary())

    def test_series_truncation(self):
        self.assertTrue(check_series_truncation(self.res.perturbed))

    def test_dropped_homotopy_entry_is_located(self):
        ps = self.res.perturbed
        X = ps.X_inf
        d, t, s, f = next(e for e in ps.h_inf.entries() if X.d(X.module.basis_vector(e[1])))
        dropped = GradedMap(X.module, X.module, 1, {d: ModuleMap(X.component(d), X.component(d + 1), {s: {t: f}})})
        broken = PerturbedSdr(ps.source, ps.perturbation, ps.A, ps.i_inf, ps.p_inf, ps.h_inf - dropped, X,
                              ps.Y_inf, ps.nilpotency_order)
        report = verify_perturbed_special(broken)
        self.assertFalse(report.passed)
        self.assertIn("ip-1=dh+hd", report.failing_checks())

    def test_zero_perturbation(self):
        self.assertTrue(check_identity_when_zero(self.res.sdr))

    def test_repeat_is_identical(self):
        again = perturb(self.res.sdr, self.res.xa.vertical)
        self.assertEqual(again.i_inf, self.res.i_inf)
        self.assertEqual(again.d_inf_Y, self.res.differential)


class TestBadPerturbations(unittest.TestCase):

    def test_wrong_shift(self):
        _, X = constant_complex(["c"])
        with self.assertRaises(PerturbationError):
            Perturbation(X, GradedMap.identity(X.module))

    def test_not_square_zero(self):
        ring, X = constant_complex(["c", "b", "a"])
        one = ring.one
        delta = GradedMap(X.module, X.module, -1, {
            2: ModuleMap(X.component(2), X.component(1), {"a": {"b": one}}),
            1: ModuleMap(X.component(1), X.component(0), {"b": {"c": one}}),
        })
        with self.assertRaises(PerturbationError):
            Perturbation(X, delta).verify()

    def test_not_small(self):
        ring, X = constant_complex(["u", "v"])
        one = ring.one
        h = GradedMap(X.module, X.module, 1, {0: ModuleMap(X.component(0), X.component(1), {"u": {"v": one}})})
        delta = GradedMap(X.module, X.module, -1, {1: ModuleMap(X.component(1), X.component(0), {"v": {"u": one}})})
        with self.assertRaises(NotSmall):
            nilpotency_order(delta, h)
        with self.assertRaises(NotSmall):
            nilpotency_order(delta, h, bound=0)


if __name__ == "__main__":
    unittest.main(verbosity=2)
