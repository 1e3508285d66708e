import os
import sys
import unittest

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from config import *
from dgtransfer.algebra import BiBasisVector, BiElement, FieldSpec, Vector, polynomial_ring
from dgtransfer.bicomplex import TautologicalBicomplex
from dgtransfer.error import ShapeError, VerificationError
from dgtransfer.homological import (BasedModule, ChainComplex, GradedMap, GradedModule, ModuleMap, SdrData,
                                    in_submodule, retract_from_truncation, verify_sdr)


def koszul_one_variable():
    """ 0 -> R e -> R 1 -> 0, e -> x1. """
    ring = polynomial_ring(1, 0)
    c0 = BasedModule(["1"], {"1": 0}, ring)
    c1 = BasedModule(["e"], {"e": 1}, ring)
    module = GradedModule({0: c0, 1: c1}, ring)
    d = GradedMap(module, module, -1, {1: ModuleMap(c1, c0, {"e": {"1": ring.gen(1)}})})
    return ChainComplex(module, d, name="koszul")


class TestModuleMap(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ring = polynomial_ring(2, 0)
        cls.source = BasedModule(["u", "v"], {"u": 1, "v": 1}, cls.ring)
        cls.target = BasedModule(["w"], {"w": 0}, cls.ring)

    def test_homogeneity_is_checked(self):
        with self.assertRaises(ShapeError):
            ModuleMap(self.source, self.target, {"u": {"w": self.ring.one}})
        with self.assertRaises(ShapeError):
            ModuleMap(self.source, self.target, {"z": {"w": self.ring.gen(1)}})

    def test_apply_and_compose(self):
        x1, x2 = self.ring.gen(1), self.ring.gen(2)
        f = ModuleMap(self.source, self.target, {"u": {"w": x1}, "v": {"w": x2}})
        v = Vector(self.ring, {"u": x2, "v": -x1})
        self.assertFalse(f.apply(v))
        g = ModuleMap(self.target, self.target, {"w": {"w": self.ring.const(2)}})
        self.assertEqual(g.compose(f).entry("w", "u"), x1 * 2)
        with self.assertRaises(ShapeError):
            f.compose(f)

    def test_arithmetic(self):
        x1 = self.ring.gen(1)
        f = ModuleMap(self.source, self.target, {"u": {"w": x1}})
        self.assertTrue((f - f).is_zero())
        self.assertEqual(f + f, f.scale(self.ring.field(2)))
        self.assertEqual(f.differences(ModuleMap.zero(self.source, self.target)), [("w", "u", x1)])


class TestChainComplex(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.C = koszul_one_variable()

    def test_square_zero_and_minimal(self):
        self.assertTrue(self.C.verify_square_zero().passed)
        self.assertEqual(self.C.minimality_failures(), [])
        self.assertEqual(self.C.module.ranks(), [1, 1])

    def test_strand_homology(self):
        self.assertEqual(self.C.strand_homology_dims(0), [1, 0])
        for t in range(1, 4):
            self.assertEqual(self.C.strand_homology_dims(t), [0, 0])
        self.assertTrue(self.C.strand(2).square_zero())

    def test_truncate(self):
        top = self.C.truncate(lo=1)
        self.assertEqual(top.degrees(), [1])
        self.assertTrue(top.differential.is_zero())

    def test_graded_map_shapes(self):
        d = self.C.differential
        with self.assertRaises(ShapeError):
            d + GradedMap.identity(self.C.module)
        self.assertTrue(d.compose(d).is_zero())
        self.assertEqual(GradedMap.identity(self.C.module).power(3), GradedMap.identity(self.C.module))

    def test_identity_sdr(self):
        self.assertTrue(verify_sdr(SdrData.identity(self.C)).passed)

    def test_broken_sdr_is_located(self):
        C = self.C
        zero = GradedMap.zero(C.module, C.module, 0)
        bad = SdrData(C, C, GradedMap.identity(C.module), zero, GradedMap.zero(C.module, C.module, 1))
        report = verify_sdr(bad)
        self.assertFalse(report.passed)
        self.assertIn("pi=1", report.failing_checks())
        failure = report.data["checks"]["pi=1"]["failures"][0]
        self.assertEqual(set(failure), {"degree", "row", "column", "value"})


class TestRetract(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.bicomplex = TautologicalBicomplex(2, 3, FieldSpec(0))

    def test_retract_onto_kernel(self):
        row = self.bicomplex.row(2)
        s = self.bicomplex.row_contraction(row, 2)
        sdr = retract_from_truncation(row, s, 1, name="row2")
        self.assertTrue(sdr.special)
        self.assertEqual(sdr.Y.module.ranks(), [0, 3])
        self.assertEqual([label for label, _, _ in sdr.stalk], ["v1", "v2", "v3"])
        self.assertTrue(verify_sdr(sdr).passed)

    def test_negated_homotopy_is_located(self):
        row = self.bicomplex.row(2)
        sdr = retract_from_truncation(row, self.bicomplex.row_contraction(row, 2), 1)
        bad = SdrData(sdr.X, sdr.Y, sdr.i, sdr.p, -sdr.h, special=True)
        report = verify_sdr(bad)
        self.assertEqual(report.failing_checks(), ["ip-1=dh+hd"])
        failure = report.data["checks"]["ip-1=dh+hd"]["failures"][0]
        self.assertEqual(set(failure), {"degree", "row", "column", "value"})

    def test_retract_in_the_middle(self):
        row = self.bicomplex.row(3)
        s = self.bicomplex.row_contraction(row, 3)
        sdr = retract_from_truncation(row, s, 2)
        self.assertEqual(sdr.Y.module.ranks(), [0, 0, 2])
        self.assertTrue(verify_sdr(sdr).passed)

    def test_not_a_contraction(self):
        row = self.bicomplex.row(2)
        with self.assertRaises(VerificationError) as cm:
            retract_from_truncation(row, GradedMap.zero(row.module, row.module, 1), 1)
        self.assertFalse(cm.exception.report.passed)


class TestSubmodule(unittest.TestCase):

    def test_in_submodule(self):
        ring = polynomial_ring(2, 0)
        x1, x2 = ring.gen(1), ring.gen(2)
        u = BiBasisVector((), (0, 0))
        g = BiElement(ring, {u: x1})
        self.assertTrue(in_submodule(BiElement(ring, {u: x1 * x2}), [g]))
        self.assertFalse(in_submodule(BiElement(ring, {u: x2 ** 2}), [g]))
        with self.assertRaises(ShapeError):
            in_submodule(BiElement(ring, {u: x1 + x1 * x2}), [g])


if __name__ == "__main__":
    unittest.main(verbosity=2)
