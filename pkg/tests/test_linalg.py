import os
import sys
import unittest

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from config import *
from dgtransfer import linalg
from dgtransfer.algebra import FieldSpec


class TestLinalg(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.K = FieldSpec(0).domain
        cls.Kp = FieldSpec(SMALL_PRIME).domain

    def matrix(self, rows, K=None):
        K = K or self.K
        return [[K(x) for x in row] for row in rows]

    def test_rref_pivots(self):
        rows = self.matrix([[1, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 0], [0, 0, 1, 0, 1, 0], [0, 0, 0, 0, 0, 1]])
        R, pivots = linalg.rref(rows, 6, self.K)
        self.assertEqual(pivots, (0, 1, 2, 5))
        self.assertEqual(len(R), 4)

    def test_kernel_basis_reads_free_columns(self):
        rows = self.matrix([[1, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 0], [0, 0, 1, 0, 1, 0], [0, 0, 0, 0, 0, 1]])
        vectors, free = linalg.kernel_basis(rows, 6, self.K)
        self.assertEqual(free, [3, 4])
        self.assertEqual(vectors[0], self.matrix([[0, -1, 0, 1, 0, 0]])[0])
        self.assertEqual(vectors[1], self.matrix([[0, 0, -1, 0, 1, 0]])[0])

    def test_kernel_of_empty_matrix(self):
        vectors, free = linalg.kernel_basis([], 3, self.K)
        self.assertEqual(free, [0, 1, 2])
        self.assertEqual(len(vectors), 3)

    def test_rank_depends_on_characteristic(self):
        rows = [[1, 1], [1, -2]]
        self.assertEqual(linalg.rank(self.matrix(rows), 2, self.K), 2)
        self.assertEqual(linalg.rank(self.matrix(rows, self.Kp), 2, self.Kp), 1)

    def test_in_span(self):
        columns = self.matrix([[1, 0, 1], [0, 1, 1]])
        self.assertTrue(linalg.in_span(columns, self.matrix([[2, 3, 5]])[0], self.K))
        self.assertFalse(linalg.in_span(columns, self.matrix([[1, 1, 0]])[0], self.K))
        self.assertTrue(linalg.in_span([], self.matrix([[0, 0, 0]])[0], self.K))

    def test_image_basis(self):
        rows = self.matrix([[1, 2, 0], [0, 0, 1]])
        self.assertEqual(len(linalg.image_basis(rows, 3, self.K)), 2)

    def test_matmul(self):
        A = self.matrix([[1, 2], [0, 1]])
        B = self.matrix([[1, 0], [3, 1]])
        self.assertEqual(linalg.matmul(A, B, 2, self.K), self.matrix([[7, 2], [3, 1]]))


if __name__ == "__main__":
    unittest.main(verbosity=2)
