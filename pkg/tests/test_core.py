import random
import unittest
from fractions import Fraction
from importer import *


def line_cells(slope, intercept, x0, x1, dims):
    """Cells whose interior the segment meets, checked cell by cell."""
    cells = set()
    for k in range(x0 + 1, x1 + 1):
        a, b = slope * (k - 1) + intercept, slope * k + intercept
        lo, hi = min(a, b), max(a, b)
        for l in range(1, dims.n + 1):
            if lo < l and hi > l - 1:
                cells.add((k, l))
    return cells

def random_line(rng, dims):
    """A line y = (2a(x - x0) + c) / 2q with c odd, never an integer at an integer x."""
    while True:
        q, a = rng.randint(1, 4), rng.randint(-dims.n, dims.n)
        c = 2 * rng.randint(0, q * dims.n - 1) + 1
        x0 = rng.randint(0, dims.m - 1)
        x1 = rng.randint(x0 + 1, dims.m)
        slope, intercept = Fraction(a, q), Fraction(c - 2 * a * x0, 2 * q)
        if all(0 < slope * k + intercept < dims.n for k in range(x0, x1 + 1)):
            return slope, intercept, x0, x1


class TestTypes(unittest.TestCase):

    def test_rect(self):
        self.assertTrue(RectDims(0, 3).empty)
        self.assertFalse(RectDims(2, 3).empty)
        self.assertEqual(tuple(RectDims(2, 3)), (2, 3))
        for bad in [(-1, 2), (2, 1.5), (True, 2)]:
            with self.assertRaises(DimensionError):
                RectDims(*bad)

    def test_tile(self):
        t = Tile('inc', 0, [1, 2, 2])
        self.assertIs(t.direction, INC)
        self.assertEqual((t.start, t.end, t(1)), (0, 2, 2))
        with self.assertRaises(DimensionError):
            t(3)
        with self.assertRaises(PreconditionError):
            Tile(INC, 0, (2, 1))
        with self.assertRaises(PreconditionError):
            Tile(DEC, 0, ())
        with self.assertRaises(PreconditionError):
            Tile(INC, -1, (1,))
        # a constant tile is valid under both tags
        Tile(INC, 0, (3, 3)), Tile(DEC, 0, (3, 3))
        self.assertFalse(Tile(INC, 2, (1, 5)).fits(RectDims(3, 4)))
        self.assertFalse(Tile(INC, 2, (1, 2, 3)).fits(RectDims(3, 4)))

    def test_cellset(self):
        dims = RectDims(3, 2)
        s = CellSet.from_cells(dims, [(1, 1), (3, 2)])
        self.assertIn((3, 2), s)
        self.assertNotIn((2, 2), s)
        self.assertEqual(len(s), 2)
        self.assertEqual(sorted(s), [(1, 1), (3, 2)])
        self.assertEqual(s.column(3), [2])
        with self.assertRaises(DimensionError):
            (4, 1) in s
        with self.assertRaises(DimensionError):
            s.column(0)
        full = CellSet.full(dims)
        self.assertTrue(full.is_full)
        self.assertTrue(s <= full and full >= s)
        self.assertEqual(len(full - s), 4)
        self.assertTrue((full - s).isdisjoint(s))
        self.assertEqual((full - s) | s, full)
        with self.assertRaises(DimensionError):
            s | CellSet(RectDims(2, 3))

    def test_extnat(self):
        self.assertEqual(ExtNat(3), 3)
        self.assertLess(ExtNat(3), UNBOUNDED)
        self.assertGreater(UNBOUNDED, 10**30)
        self.assertEqual(str(UNBOUNDED), 'inf')
        self.assertEqual(int(ExtNat(7)), 7)
        with self.assertRaises(DomainError):
            int(UNBOUNDED)
        with self.assertRaises(DomainError):
            ExtNat(-1)
        self.assertEqual(len({ExtNat(2), ExtNat(2), UNBOUNDED}), 2)


class TestCells(unittest.TestCase):

    def test_sample(self):
        c = sample4x4()
        self.assertEqual((c.i, c.d), (2, 1))
        self.assertTrue(is_covering(c))
        self.assertEqual(overlap_counts(c).sum(), 17)
        self.assertEqual(overlap_counts(c)[2, 1], 2)  # S(3, 2)
        self.assertFalse(is_covering(Covering(c.dims, c.tiles[:2])))
        D = c.tiles[2]
        self.assertEqual(sorted(tile_cells(D, c.dims)), [(2, 3), (3, 1), (3, 2), (3, 3), (4, 1)])

    def test_size_and_connectedness(self):
        rng = random.Random(0)
        for _ in range(500):
            dims = RectDims(rng.randint(1, 8), rng.randint(1, 8))
            t = random_tile(rng, dims)
            cells = tile_cells(t, dims)
            self.assertEqual(tile_size(t), len(cells))
            prev = None
            for k in range(t.start + 1, t.end + 1):
                rows = cells.column(k)
                self.assertEqual(rows, list(range(rows[0], rows[-1] + 1)))
                if prev is not None:  # neighbouring columns share a boundary row
                    self.assertTrue(set(prev) & set(rows))
                prev = rows
            if t.end > t.start:
                self.assertEqual(tile_from_cells(t.direction, cells), t)

    def test_does_not_fit(self):
        with self.assertRaises(DimensionError):
            tile_cells(Tile(INC, 0, (1, 5)), RectDims(1, 4))
        with self.assertRaises(DimensionError):
            Covering(RectDims(2, 2), [Tile(INC, 0, (1, 2, 3))])


class TestLines(unittest.TestCase):

    def test_examples(self):
        dims = RectDims(4, 4)
        t = tile_from_line(Fraction(1, 2), Fraction(1, 3), 0, 4, dims)
        self.assertEqual(t, Tile(INC, 0, (1, 1, 2, 2, 3)))
        t = tile_from_line('-2/3', '7/2', 1, 4, dims)
        self.assertEqual(t.direction, DEC)
        self.assertEqual(t.values, (3, 3, 2, 1))
        with self.assertRaises(DegenerateLineError):
            tile_from_line(1, 0, 0, 2, dims)
        with self.assertRaises(DimensionError):
            tile_from_line(1, Fraction(1, 2), 0, 4, dims)
        with self.assertRaises(PreconditionError):
            tile_from_line(0, Fraction(1, 2), 2, 2, dims)

    def test_random_lines(self):
        rng = random.Random(1)
        for m in range(1, 9):
            for n in range(1, 9):
                dims = RectDims(m, n)
                for _ in range(200):
                    slope, intercept, x0, x1 = random_line(rng, dims)
                    t = tile_from_line(slope, intercept, x0, x1, dims)
                    self.assertTrue(is_monotone(t.values, t.direction))
                    self.assertEqual(set(tile_cells(t, dims)),
                                     line_cells(slope, intercept, x0, x1, dims))


class TestTransforms(unittest.TestCase):

    def test_extend_and_trim(self):
        rng = random.Random(2)
        for _ in range(300):
            dims = RectDims(rng.randint(1, 8), rng.randint(1, 8))
            t = random_tile(rng, dims)
            ext = extend_to_full_domain(t, dims.m)
            self.assertTrue(ext.is_full(dims.m))
            self.assertTrue(tile_cells(t, dims) <= tile_cells(ext, dims))
        c = construct_min_covering(7, 5)
        for w in range(8):
            self.assertTrue(is_covering(trim_covering(c, w)))
        with self.assertRaises(PreconditionError):
            trim_covering(c, 8)
        with self.assertRaises(PreconditionError):
            trim_covering(sample4x4(), 2)

    def test_mirror(self):
        c = sample4x4()
        mc = mirror_covering(c)
        self.assertEqual((mc.i, mc.d), (1, 2))
        self.assertTrue(is_covering(mc))
        self.assertEqual(covering_cells(mirror_covering(mc)), covering_cells(c))
        self.assertEqual(mirror_covering(Covering(RectDims(3, 4), [constant_tile(INC, 1, 3)])).tiles,
                         (constant_tile(DEC, 4, 3),))

    def test_reflect(self):
        c = sample4x4()
        rc = reflect_covering(c)
        self.assertEqual((rc.i, rc.d), (2, 1))
        self.assertTrue(is_covering(rc))
        self.assertEqual(covering_cells(reflect_covering(rc)), covering_cells(c))
        strips = Covering(RectDims(3, 2), [constant_tile(INC, 1, 3), constant_tile(INC, 2, 3)])
        rs = reflect_covering(strips)
        self.assertEqual(rs.dims, RectDims(2, 3))
        self.assertTrue(is_covering(rs))
        self.assertEqual(reflect_covering(rs).tiles, strips.tiles)
        rng = random.Random(3)
        for _ in range(200):
            dims = RectDims(rng.randint(1, 7), rng.randint(1, 7))
            t = extend_to_full_domain(random_tile(rng, dims), dims.m)
            r = reflect_covering(Covering(dims, [t])).tiles[0]
            self.assertEqual(r.direction, t.direction)
            self.assertEqual(tile_size(r), tile_size(t))
            cells = tile_cells(r, RectDims(dims.n, dims.m))
            self.assertEqual({(dims.n + 1 - l, dims.m + 1 - k) for k, l in tile_cells(t, dims)}, set(cells))
        e = reflect_covering(Covering(RectDims(0, 3)))
        self.assertEqual((e.dims, e.tiles), (RectDims(3, 0), ()))

    def test_reflect_twice(self):
        rng = random.Random(4)
        for _ in range(500):
            dims = RectDims(rng.randint(1, 8), rng.randint(1, 8))
            c = Covering(dims, [random_tile(rng, dims) for _ in range(rng.randint(0, 5))])
            back = reflect_covering(reflect_covering(c))
            self.assertEqual(back.dims, dims)
            self.assertEqual(covering_cells(back), covering_cells(c))
            solid = [t for t in c if len(t.values) > 1]
            self.assertEqual([tile_cells(t, dims) for t in back], [tile_cells(t, dims) for t in solid])
            self.assertEqual([t.direction for t in back], [t.direction for t in solid])


if __name__ == '__main__':
    unittest.main()
