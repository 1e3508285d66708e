import os
import sys
import unittest

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from config import *
from dgtransfer.error import ParseError
from dgtransfer.trees import PlanarTree, catalan, enumerate_pbt, enumerate_pt, little_schroeder


class TestEnumeration(unittest.TestCase):

    def test_binary_counts(self):
        self.assertEqual([len(enumerate_pbt(k)) for k in range(2, 6)], [1, 2, 5, 14])
        for k in range(1, 7):
            self.assertEqual(len(enumerate_pbt(k)), catalan(k - 1))

    def test_planar_counts(self):
        self.assertEqual([len(enumerate_pt(k)) for k in range(1, 5)], [1, 1, 3, 11])
        self.assertEqual(little_schroeder(5), 45)
        self.assertEqual(len(enumerate_pt(5)), 45)

    def test_trees_are_distinct(self):
        trees = enumerate_pt(4)
        self.assertEqual(len(set(trees)), len(trees))
        self.assertTrue(all(t.arity == 4 for t in trees))
        self.assertEqual(sum(1 for t in trees if t.is_binary()), 5)

    def test_bad_arity(self):
        with self.assertRaises(ValueError):
            enumerate_pbt(0)


class TestText(unittest.TestCase):

    def test_str(self):
        left, right = enumerate_pbt(3)
        self.assertEqual({str(left), str(right)}, {"((.,.),.)", "(.,(.,.))"})
        self.assertEqual(str(PlanarTree.leaf()), ".")

    def test_parse(self):
        for tree in enumerate_pt(4):
            self.assertEqual(PlanarTree.parse(str(tree)), tree)
        tree = PlanarTree.parse("( . , ( . , . , . ) )")
        self.assertEqual(tree.arity, 4)
        self.assertEqual(tree.internal_nodes(), 2)
        self.assertFalse(tree.is_binary())

    def test_parse_errors(self):
        for text in ("", "(.)", "(.,.", "(.,.).", "x", "(.;.)", "(.,)"):
            with self.assertRaises(ParseError, msg=text):
                PlanarTree.parse(text)

    def test_single_child(self):
        with self.assertRaises(ValueError):
            PlanarTree([PlanarTree.leaf()])


if __name__ == "__main__":
    unittest.main(verbosity=2)
