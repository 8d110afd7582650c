import itertools
import json
import os
import random
import tempfile
import unittest

import numpy as np

import config
import finite_structures as fs
import matrix as mx
from exceptions import InputError, ResourceError, StructureValidationError
from star_context import LEFT, RIGHT


def naive_is_valid(tables):
    """Triple-loop axiom check, independent of the vectorized validator."""
    n = tables["size"]
    mul = [list(r) for r in np.asarray(tables["mul"]).tolist()]
    star = list(np.asarray(tables["star"]).tolist())
    one = tables["one"]
    r = range(n)
    for x, y, z in itertools.product(r, repeat=3):
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            return False
    for x in r:
        if mul[one][x] != x or mul[x][one] != x or star[star[x]] != x:
            return False
    for x, y in itertools.product(r, repeat=2):
        if star[mul[x][y]] != mul[star[y]][star[x]]:
            return False
    if star[one] != one:
        return False
    if "add" not in tables:
        return True
    add = [list(row) for row in np.asarray(tables["add"]).tolist()]
    neg = list(np.asarray(tables["neg"]).tolist())
    zero = tables["zero"]
    for x, y, z in itertools.product(r, repeat=3):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            return False
        if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
            return False
        if mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]:
            return False
    for x, y in itertools.product(r, repeat=2):
        if add[x][y] != add[y][x] or star[add[x][y]] != add[star[x]][star[y]]:
            return False
    for x in r:
        if add[zero][x] != x or add[x][neg[x]] != zero:
            return False
    return True


def ring_tables(structure):
    tables = {
        "size": structure.size,
        "one": structure.one,
        "mul": structure.mul_table.tolist(),
        "star": structure.star_table.tolist(),
    }
    if structure.tier == "ring":
        tables.update(add=structure.add_table.tolist(), neg=structure.neg_table.tolist(), zero=structure.zero)
    return tables


class TestMatrixStructure(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.m2z2 = fs.build_matrix_structure(2, 2)

    def test_size_and_labels(self):
        s = self.m2z2
        self.assertEqual(len(s.elements()), 16)
        self.assertEqual(s.describe(), "M2(Z2)")
        self.assertEqual(s.name(s.one), "[[1,0],[0,1]]")
        self.assertEqual(s.zero, 0)
        self.assertEqual(s.tier, "ring")

    def test_tables_match_matrix_arithmetic(self):
        s = self.m2z2
        for i in s.elements():
            m = s.matrix_of(i)
            self.assertEqual(s.index_of(m), i)
            self.assertEqual(s.matrix_of(s.star(i)), mx.transpose(m))
            for j in s.elements():
                self.assertEqual(s.matrix_of(s.mul(i, j)), mx.mat_mul(m, s.matrix_of(j)))
                self.assertEqual(s.matrix_of(s.add(i, j)), mx.mat_add(m, s.matrix_of(j)))

    def _divisibility_agrees(self, s):
        for u in s.elements():
            mu = s.matrix_of(u)
            for v in s.elements():
                mv = s.matrix_of(v)
                left = s.left_divides(u, v)
                right = s.right_divides(u, v)
                self.assertEqual(left is not None, mx.solve_left(mu, mv) is not None)
                self.assertEqual(right is not None, mx.solve_right(mu, mv) is not None)
                if left is not None:
                    self.assertEqual(s.mul(left, u), v)
                if right is not None:
                    self.assertEqual(s.mul(u, right), v)

    def test_divisibility_matches_linear_algebra(self):
        self._divisibility_agrees(self.m2z2)

    @unittest.skipUnless(config.SLOW_TESTS, "set GINV_SLOW_TESTS=1")
    def test_divisibility_matches_linear_algebra_m2z3(self):
        self._divisibility_agrees(fs.build_matrix_structure(2, 3))

    def test_witness_lists(self):
        s = self.m2z2
        for u in s.elements():
            for v in (s.one, 0, u):
                everything = s.left_witnesses(u, v)
                self.assertEqual(everything, [x for x in s.elements() if s.mul(x, u) == v])
                first = s.left_divides(u, v)
                self.assertEqual(first, everything[0] if everything else None)
                self.assertEqual(s.right_witnesses(u, v), [x for x in s.elements() if s.mul(u, x) == v])

    def test_inner_inverse(self):
        s = self.m2z2
        for x in s.elements():
            g = s.inner_inverse(x)
            self.assertIsNotNone(g)
            self.assertEqual(s.prod(x, g, x), x)

    def test_one_by_one_is_zp(self):
        self.assertEqual(len(fs.build_matrix_structure(1, 5).elements()), 5)

    def test_budget(self):
        with self.assertRaises(ResourceError):
            fs.build_matrix_structure(3, 2, budget=100)

    def test_composite_p_rejected(self):
        with self.assertRaises(InputError):
            fs.build_matrix_structure(2, 4)


class TestValidation(unittest.TestCase):
    def test_accepts_known_structures(self):
        for structure in (fs.zmod_structure(4), fs.zmod_structure(1), fs.trivial_monoid(),
                          fs.build_matrix_structure(2, 2)):
            with self.subTest(structure=structure.describe()):
                self.assertTrue(naive_is_valid(ring_tables(structure)))
                fs.validate(ring_tables(structure))

    def test_rejects_non_associative(self):
        tables = {"size": 3, "one": 0, "mul": [[0, 1, 2], [1, 2, 1], [2, 2, 1]], "star": [0, 1, 2]}
        with self.assertRaises(StructureValidationError) as caught:
            fs.validate(tables)
        self.assertEqual(caught.exception.axiom, "associativity")
        x, y, z = caught.exception.witness
        mul = tables["mul"]
        self.assertNotEqual(mul[mul[x][y]][z], mul[x][mul[y][z]])

    def test_rejects_star_that_does_not_reverse(self):
        s = fs.build_matrix_structure(2, 2)
        tables = ring_tables(s)
        tables["star"] = list(range(s.size))
        with self.assertRaises(StructureValidationError) as caught:
            fs.validate(tables)
        self.assertEqual(caught.exception.axiom, "star reverses products")

    def test_agrees_with_naive_checker_on_mutations(self):
        rng = random.Random(3)
        corpus = [fs.zmod_structure(n) for n in (2, 3, 4, 6)]
        corpus.append(fs.validate({"size": 2, "one": 0, "mul": [[0, 1], [1, 1]], "star": [0, 1]}))
        for structure in corpus:
            for _ in range(15):
                tables = ring_tables(structure)
                n = tables["size"]
                key = rng.choice(["mul", "star", "add"] if "add" in tables else ["mul", "star"])
                if key == "star":
                    tables["star"][rng.randrange(n)] = rng.randrange(n)
                else:
                    tables[key][rng.randrange(n)][rng.randrange(n)] = rng.randrange(n)
                expected = naive_is_valid(tables)
                with self.subTest(structure=structure.describe(), key=key):
                    if expected:
                        fs.validate(tables)
                    else:
                        with self.assertRaises(StructureValidationError):
                            fs.validate(tables)

    def test_malformed_tables(self):
        with self.assertRaises(InputError):
            fs.validate({"size": 2, "one": 0, "mul": [[0, 1]], "star": [0, 1]})
        with self.assertRaises(InputError):
            fs.validate({"size": 2, "one": 0, "mul": [[0, 1], [1, 5]], "star": [0, 1]})
        with self.assertRaises(InputError):
            fs.validate({"size": 2, "mul": [[0, 1], [1, 1]], "star": [0, 1]})

    def test_budget(self):
        tables = ring_tables(fs.zmod_structure(5))
        with self.assertRaises(ResourceError):
            fs.validate(tables, budget=4)

    def test_load_table(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "z3.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump(ring_tables(fs.zmod_structure(3)), f)
            structure = fs.load_table(path)
            self.assertEqual(structure.tier, "ring")
            self.assertEqual(structure.describe(), f"table:{path}")
            with self.assertRaises(InputError):
                fs.load_table(os.path.join(tmp, "missing.json"))


class TestScans(unittest.TestCase):
    def test_zmod_scan(self):
        z6 = fs.zmod_structure(6)
        self.assertIsNone(fs.divisibility_scan(z6, 2, 3, LEFT))
        self.assertEqual(fs.divisibility_scan(z6, 2, 4, LEFT), 2)
        self.assertEqual(fs.divisibility_scan(z6, 1, 5, RIGHT), 5)

    def test_zmod_rejects_zero(self):
        with self.assertRaises(InputError):
            fs.zmod_structure(0)


if __name__ == '__main__':
    unittest.main()
