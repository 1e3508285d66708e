import os
import sys
import unittest

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from config import *
from dgtransfer.algebra import BiBasisVector, BiElement, FieldSpec
from dgtransfer.bicomplex import sigma
from dgtransfer.error import InadmissibleCharacteristic, ParseError, ShapeError
from dgtransfer.homological import ChainComplex, GradedMap, ModuleMap
from dgtransfer.resolution import (build_La, check_product_equivariance, compare_mod_p, comparison_map,
                                   expected_rank, hilbert_function, kernel_basis_Lia, multiply_La,
                                   p_infinity_piecewise, to_dict, verify_comparison, verify_composition,
                                   verify_resolution)
from dgtransfer.utils import tools


def bv(ext, sym):
    return BiBasisVector(tuple(ext), tuple(sym))


class TestRanks(unittest.TestCase):

    def test_expected_rank(self):
        self.assertEqual(expected_rank(2, 2, 0), 3)
        self.assertEqual(expected_rank(2, 2, 1), 2)
        self.assertEqual(expected_rank(3, 2, 0), 6)
        with self.assertRaises(ShapeError):
            expected_rank(2, 2, 2)

    def test_hilbert_function(self):
        self.assertEqual([hilbert_function(2, 2, t) for t in range(4)], [1, 2, 0, 0])
        self.assertEqual(hilbert_function(3, 3, 2), 6)

    def test_small_resolutions(self):
        F = FieldSpec(0)
        self.assertEqual(build_La(2, 1, F).ranks, [1, 2, 1])
        self.assertEqual(build_La(3, 2, F).ranks, [1, 6, 8, 3])

    def test_one_variable(self):
        res = build_La(1, 3, FieldSpec(0))
        self.assertEqual(res.ranks, [1, 1])
        x1 = res.ring.gen(1)
        label = bv([], [3])
        image = res.differential.apply(res.basis_vector(label)).coefficient("1")
        self.assertIn(image, (x1 ** 3, -x1 ** 3))

    def test_inadmissible(self):
        with self.assertRaises(InadmissibleCharacteristic):
            build_La(N, A, FieldSpec(SMALL_PRIME))


class TestL2(unittest.TestCase):
    """ n = 2, a = 2 over the rationals. """

    @classmethod
    def setUpClass(cls):
        cls.res = build_La(N, A, FieldSpec(0))
        cls.ring = cls.res.ring
        cls.x1, cls.x2 = cls.ring.gen(1), cls.ring.gen(2)

    def bi(self, terms):
        return BiElement(self.ring, {bv(*k): f for k, f in terms.items()})

    def test_build(self):
        res = self.res
        self.assertEqual(res.ranks, [1, 3, 2])
        self.assertEqual(res.expected_ranks(), [1, 3, 2])
        self.assertTrue(res.report.passed, res.report.summary())
        self.assertEqual(res.module.labels(), ["1", bv([], [2, 0]), bv([], [1, 1]), bv([], [0, 2]), "b1", "b2"])

    def test_kernel_basis(self):
        one = self.ring.one
        b1 = self.bi({((2,), (2, 0)): one, ((1,), (1, 1)): -one})
        b2 = self.bi({((2,), (1, 1)): one, ((1,), (0, 2)): -one})
        self.assertEqual(kernel_basis_Lia(N, A, 1, FieldSpec(0)), [b1, b2])
        self.assertEqual(self.res.embed(self.res.basis_vector("b1")), b1)
        self.assertEqual(self.res.embed(self.res.basis_vector("b2")), b2)
        self.assertEqual(sigma(b1), self.bi({((1, 2), (1, 0)): one}))
        self.assertEqual([free for _, _, free in self.res.bases[1]], [bv([2], [2, 0]), bv([2], [1, 1])])

    def test_differential(self):
        res, x1, x2 = self.res, self.x1, self.x2
        d = res.differential
        self.assertEqual(d.apply(res.basis_vector(bv([], [2, 0]))), res.module.element({"1": -x1 ** 2}))
        self.assertEqual(d.apply(res.basis_vector("b1")),
                         res.module.element({bv([], [1, 1]): x1, bv([], [2, 0]): -x2}))
        self.assertEqual(res.complex.minimality_failures(), [])

    def test_transfer_maps(self):
        res, x1 = self.res, self.x1
        one = self.ring.one
        y1 = BiElement.basis(self.ring, bv([], [1, 0]))
        self.assertEqual(res.p_inf.apply(y1), res.module.element({"1": -x1}))
        self.assertEqual(res.i_inf.apply(res.basis_vector(bv([], [2, 0]))),
                         self.bi({((1,), (1, 0)): one, ((1,), (0, 0)): -x1}))
        self.assertEqual(res.p_inf, p_infinity_piecewise(res))
        self.assertEqual(res.p_inf.apply(res.i_inf.apply(res.basis_vector("b2"))), res.basis_vector("b2"))

    def test_multiply(self):
        res, x1, x2 = self.res, self.x1, self.x2
        alpha = res.parse("1*y^[2,0]")
        beta = res.parse("1*y^[0,2]")
        product = multiply_La(res, alpha, beta)
        self.assertEqual(product, res.module.element({"b1": -x2, "b2": -x1}))
        self.assertEqual(res.text(product), "-x2*b1 - x1*b2")
        self.assertEqual(res.multiply(beta, alpha), -product)
        self.assertEqual(res.multiply(res.unit, alpha), alpha)
        self.assertFalse(res.multiply(res.basis_vector("b1"), alpha))

    def test_parse(self):
        res = self.res
        self.assertEqual(res.parse("x1*b1 - 2"), res.module.element({"b1": self.x1, "1": self.ring.const(-2)}))
        self.assertEqual(res.parse("e[2]*y^[2,0] - e[1]*y^[1,1]"), res.basis_vector("b1"))
        for text in ("b9", "e[1]*y^[1,0]", "e[2]*y^[2,0]", "x1*"):
            with self.assertRaises(ParseError, msg=text):
                res.parse(text)

    def test_to_basis(self):
        with self.assertRaises(ShapeError):
            self.res.to_basis(BiElement.basis(self.ring, bv([1], [0, 0])))

    def test_permute(self):
        res = self.res
        swap = (2, 1)
        self.assertEqual(res.permute(res.basis_vector(bv([], [2, 0])), swap), res.basis_vector(bv([], [0, 2])))
        self.assertEqual(res.permute(res.basis_vector("b1"), swap), -res.basis_vector("b2"))

    def test_certificate(self):
        report = verify_resolution(self.res, 6)
        self.assertTrue(report.passed, report.summary())
        self.assertEqual(report.notes["h0_dims"], [1, 2, 0, 0, 0, 0, 0])

    def test_missing_generator_is_detected(self):
        res = self.res
        d = res.differential
        blocks = dict(d.blocks)
        top = blocks[2]
        blocks[2] = ModuleMap(top.source, top.target, {s: c for s, c in top.columns.items() if s != "b1"})
        broken = ChainComplex(res.module, GradedMap(res.module, res.module, -1, blocks))
        self.assertEqual(broken.strand_homology_dims(3)[2], 1)
        self.assertEqual(res.complex.strand_homology_dims(3)[2], 0)

    def test_equivariance(self):
        report = check_product_equivariance(self.res)
        self.assertTrue(report.passed, report.summary())

    def test_deterministic_document(self):
        again = build_La(N, A, FieldSpec(0))
        self.assertEqual(tools.dumps(to_dict(again)), tools.dumps(to_dict(self.res)))
        document = to_dict(self.res)
        self.assertEqual(document["ranks"], [1, 3, 2])
        self.assertEqual([entry["label"] for entry in document["basis"]["2"]], ["b1", "b2"])


class TestComparison(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        F = FieldSpec(0)
        cls.L = {a: build_La(N, a, F) for a in (1, 2, 3)}
        cls.f = {(b, a): comparison_map(N, b, a, F, cls.L[b], cls.L[a]) for b, a in ((2, 1), (3, 2), (3, 1), (2, 2))}

    def test_oracle(self):
        L1, L2 = self.L[1], self.L[2]
        x1 = L2.ring.gen(1)
        image = self.f[(2, 1)].apply(L2.basis_vector(bv([], [2, 0])))
        self.assertEqual(image, L1.module.element({bv([], [1, 0]): -x1}))
        self.assertEqual(self.f[(2, 1)].apply(L2.unit), L1.unit)

    def test_identity(self):
        self.assertEqual(self.f[(2, 2)].maps, GradedMap.identity(self.L[2].module))

    def test_verify(self):
        for key in ((2, 1), (3, 2), (3, 1)):
            report = verify_comparison(self.f[key])
            self.assertTrue(report.passed, report.summary())

    def test_composition(self):
        report = verify_composition(self.f[(3, 2)], self.f[(2, 1)], self.f[(3, 1)])
        self.assertTrue(report.passed, report.summary())

    def test_bad_levels(self):
        with self.assertRaises(ShapeError):
            comparison_map(N, 1, 2, FieldSpec(0))
        with self.assertRaises(ShapeError):
            comparison_map(N, 2, 1, FieldSpec(0), self.L[3], self.L[1])


class TestModP(unittest.TestCase):

    def test_matches_rational(self):
        res = build_La(N, 3, FieldSpec(PRIME))
        self.assertTrue(res.report.passed)
        report = compare_mod_p(res)
        self.assertTrue(report.passed, report.summary())


if __name__ == "__main__":
    unittest.main(verbosity=2)
