import unittest
from math import comb
from importer import *


class TestEnumerate(unittest.TestCase):

    def test_counts(self):
        tiles = enumerate_full_domain_tiles(1, 2, INC)
        self.assertEqual([t.values for t in tiles], [(1, 1), (1, 2), (2, 2)])
        self.assertEqual(len(enumerate_full_domain_tiles(1, 1, DEC)), 1)
        self.assertEqual(len(enumerate_full_domain_tiles(4, 4, INC)), 56)
        for m in range(1, 6):
            for n in range(1, 6):
                for direction in (INC, DEC):
                    tiles = enumerate_full_domain_tiles(m, n, direction)
                    self.assertEqual(len(tiles), comb(m + n, n - 1))
                    self.assertEqual(len(set(tiles)), len(tiles))
                    self.assertTrue(all(t.is_full(m) and t.direction is direction for t in tiles))


class TestMinCover(unittest.TestCase):

    def check(self, m, n, direction=None):
        count, witness = min_cover_exact(m, n, direction)
        self.assertTrue(is_covering(witness))
        self.assertEqual(len(witness), count)
        self.assertEqual(witness.dims, RectDims(m, n))
        if direction is not None:
            self.assertTrue(all(t.direction is Direction(direction) for t in witness))
        return count

    def test_examples(self):
        self.assertEqual(self.check(4, 4), 3)
        self.assertEqual(self.check(7, 1), 1)
        self.assertEqual(self.check(4, 4, INC), 4)
        self.assertEqual(self.check(5, 5), 4)

    def test_formula(self):
        for m in range(1, 6):
            for n in range(1, 6):
                self.assertEqual(self.check(m, n), p_of(m, n), f'{m}x{n}')

    def test_increasing_only(self):
        for m in range(1, 6):
            for n in range(1, 6):
                self.assertEqual(self.check(m, n, 'inc'), increasing_only_min(m, n), f'{m}x{n}')

    def test_formula_6(self):
        for m in range(1, 7):
            self.assertEqual(self.check(m, 6), p_of(m, 6))
            self.assertEqual(self.check(6, m), p_of(6, m))

    def test_bad_board(self):
        with self.assertRaises(DomainError):
            min_cover_exact(0, 3)


class TestWidths(unittest.TestCase):

    def test_examples(self):
        c = exists_id_covering(5, 4, 2, 1)
        self.assertIsNotNone(c)
        self.assertTrue(is_covering(c))
        self.assertEqual((c.dims, c.i, c.d), (RectDims(5, 4), 2, 1))
        self.assertIsNone(exists_id_covering(6, 4, 2, 1))
        for w in (1, 4, 9):
            c = exists_id_covering(w, 3, 0, 3)
            self.assertTrue(is_covering(c))
        self.assertEqual(max_width_exact(4, 2, 1), 5)
        self.assertEqual(max_width_exact(3, 1, 1), 3)
        self.assertEqual(max_width_exact(4, 3, 1), UNBOUNDED)
        self.assertEqual(max_width_exact(3, 0, 0), 0)
        with self.assertRaises(DomainError):
            max_width_exact(3, 2, 2)
        with self.assertRaises(DomainError):
            exists_id_covering(2, 3, 2, 2)

    def test_witness_is_anchored(self):
        c = exists_id_covering(5, 4, 2, 1)
        self.assertTrue(is_anchored(c))
        self.assertEqual(crossing_violations(c), [])

    def test_formula(self):
        for n in range(1, 7):
            for i in range(n):
                for d in range(n - i):
                    self.assertEqual(max_width_exact(n, i, d), m_of_id(n, i, d), f'n={n}, i={i}, d={d}')

    def test_constructed_widths_are_tight(self):
        for n in range(2, 6):
            for i in range(n):
                for d in range(n - i):
                    w = int(m_of_id(n, i, d))
                    if w:
                        self.assertIsNotNone(exists_id_covering(w, n, i, d))
                    self.assertIsNone(exists_id_covering(w + 1, n, i, d))


if __name__ == '__main__':
    unittest.main()
