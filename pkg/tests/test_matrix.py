import json
import os
import random
import tempfile
import unittest
from fractions import Fraction

import config
import matrix as mx
from exceptions import InputError, UnsupportedContextError
from scalars import QI, ZMOD, GaussianRational, ScalarField
from star_context import MatrixStarContext, check_mp

Z2 = ScalarField(ZMOD, 2)
Z3 = ScalarField(ZMOD, 3)
Z4 = ScalarField(ZMOD, 4)


def qi(rows):
    return mx.from_rows(rows, QI)


class TestConstruction(unittest.TestCase):
    def test_literals_round_trip_through_str(self):
        m = qi([["1", "i"], ["0", "3/4-5i"]])
        self.assertEqual(str(m), "[[1,i],[0,3/4-5i]]")

    def test_not_square(self):
        with self.assertRaises(InputError):
            qi([["1", "2"], ["3"]])
        with self.assertRaises(InputError):
            mx.Matrix(QI, [])

    def test_entry_outside_field(self):
        with self.assertRaises(InputError):
            mx.Matrix(Z3, [[GaussianRational(1)]])

    def test_json(self):
        m = mx.from_rows([[1, 2], [0, 1]], Z3)
        data = m.to_json()
        self.assertEqual(data, {"field": "zmod", "modulus": 3, "rows": [["1", "2"], ["0", "1"]]})
        self.assertEqual(mx.from_json(json.dumps(data)), m)
        with self.assertRaises(InputError):
            mx.from_json({"rows": [["1"]]})

    def test_json_modulus_must_be_an_integer(self):
        for modulus in ("5", 5.0):
            with self.subTest(modulus=modulus):
                with self.assertRaises(InputError):
                    mx.from_json({"field": "zmod", "modulus": modulus, "rows": [["2"]]})

    def test_load_matrix(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "a.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"field": "gaussian_rational", "rows": [["1", "i"], ["i", "-1"]]}, f)
            self.assertEqual(mx.load_matrix(path), qi([["1", "i"], ["i", "-1"]]))
            with self.assertRaises(InputError):
                mx.load_matrix(os.path.join(tmp, "missing.json"))


class TestArithmetic(unittest.TestCase):
    def test_mul_add(self):
        a = qi([[1, 2], [3, 4]])
        swap = qi([[0, 1], [1, 0]])
        self.assertEqual(a @ swap, qi([[2, 1], [4, 3]]))
        self.assertEqual(a + swap, qi([[1, 3], [4, 4]]))
        self.assertEqual(a - a, mx.zero(2, QI))
        self.assertEqual(a @ mx.identity(2, QI), a)

    def test_mismatch(self):
        with self.assertRaises(InputError):
            mx.mat_mul(qi([[1]]), mx.from_rows([[1]], Z3))
        with self.assertRaises(InputError):
            mx.mat_mul(qi([[1]]), qi([[1, 0], [0, 1]]))

    def test_power(self):
        n = qi([[0, 1], [0, 0]])
        self.assertEqual(mx.power(n, 1), n)
        self.assertTrue(mx.power(n, 2).is_zero())
        with self.assertRaises(InputError):
            mx.power(n, 0)

    def test_star(self):
        m = qi([["1", "i"], ["0", "2"]])
        self.assertEqual(mx.star(m, mx.InvolutionKind.CONJUGATE_TRANSPOSE), qi([["1", "0"], ["-i", "2"]]))
        self.assertEqual(mx.star(m, mx.InvolutionKind.TRANSPOSE), qi([["1", "0"], ["i", "2"]]))

    def test_involution_aliases(self):
        self.assertIs(mx.InvolutionKind.parse("H"), mx.InvolutionKind.CONJUGATE_TRANSPOSE)
        self.assertIs(mx.InvolutionKind.parse("t"), mx.InvolutionKind.TRANSPOSE)
        with self.assertRaises(InputError):
            mx.InvolutionKind.parse("adjoint")


class TestElimination(unittest.TestCase):
    def test_rank_and_determinant(self):
        a = qi([[1, 2], [3, 4]])
        self.assertEqual(mx.rank(a), 2)
        self.assertEqual(mx.determinant(a), GaussianRational(-2))
        self.assertEqual(mx.rank(qi([[1, 2], [2, 4]])), 1)
        self.assertEqual(mx.determinant(qi([[1, 2], [2, 4]])), GaussianRational(0))

    def test_inverse(self):
        a = qi([[1, 2], [3, 4]])
        expected = mx.from_rows([[-2, 1], [GaussianRational(Fraction(3, 2)), GaussianRational(Fraction(-1, 2))]], QI)
        self.assertEqual(mx.inverse(a), expected)
        self.assertIsNone(mx.inverse(qi([[1, 2], [2, 4]])))

    def test_solve_right_and_left(self):
        m = qi([[1, 0], [0, 0]])
        b = qi([[2, 3], [0, 0]])
        x = mx.solve_right(m, b)
        self.assertEqual(m @ x, b)
        self.assertIsNone(mx.solve_right(m, qi([[0, 0], [1, 0]])))
        y = mx.solve_left(m, qi([[5, 0], [7, 0]]))
        self.assertEqual(y @ m, qi([[5, 0], [7, 0]]))
        self.assertIsNone(mx.solve_left(m, qi([[0, 1], [0, 0]])))

    def test_solve_sandwich(self):
        u = qi([[1, 0], [0, 0]])
        w = mx.identity(2, QI)
        self.assertIsNone(mx.solve_sandwich(u, w, qi([[0, 0], [0, 1]])))
        v = qi([[1, 2], [0, 0]])
        s = mx.solve_sandwich(u, w, v)
        self.assertEqual(u @ s @ w, v)

    def test_inner_inverse_on_random_matrices(self):
        rng = random.Random(7)
        for field in (QI, Z3, ScalarField(ZMOD, 5)):
            for _ in range(25):
                m = mx.random_matrix(rng.choice([1, 2, 3]), field, rng, zero_row_probability=0.3)
                with self.subTest(field=field.describe(), m=str(m)):
                    g = mx.inner_inverse(m)
                    self.assertEqual(m @ g @ m, m)

    def test_nullspace(self):
        basis = mx.nullspace([[QI.one(), QI.one()]], 2, QI)
        self.assertEqual(len(basis), 1)
        v = basis[0]
        self.assertEqual(v[0] + v[1], QI.zero())
        self.assertEqual(len(mx.nullspace([], 3, QI)), 3)

    def test_composite_modulus_rejected(self):
        with self.assertRaises(UnsupportedContextError):
            mx.rank(mx.from_rows([[2, 0], [0, 1]], Z4))
        with self.assertRaises(UnsupportedContextError):
            mx.solve_right(mx.identity(2, Z4), mx.identity(2, Z4))


class TestMoorePenroseOracle(unittest.TestCase):
    def test_nilpotent_example(self):
        a = qi([["1", "i"], ["i", "-1"]])
        expected = mx.star(a, mx.InvolutionKind.CONJUGATE_TRANSPOSE).scale(GaussianRational(Fraction(1, 4)))
        self.assertEqual(mx.mp_oracle(a), expected)

    def test_penrose_equations_on_random_matrices(self):
        ctx = MatrixStarContext(3, QI, mx.InvolutionKind.CONJUGATE_TRANSPOSE)
        rng = random.Random(11)
        for _ in range(20):
            m = mx.random_matrix(3, QI, rng, bound=2, zero_row_probability=0.4)
            with self.subTest(m=str(m)):
                self.assertTrue(check_mp(ctx, m, mx.mp_oracle(m)))

    def test_zero_matrix(self):
        self.assertEqual(mx.mp_oracle(mx.zero(2, QI)), mx.zero(2, QI))

    def test_needs_gaussian_field(self):
        with self.assertRaises(UnsupportedContextError):
            mx.mp_oracle(mx.identity(2, Z3))


class TestEnumeration(unittest.TestCase):
    def test_all_matrices(self):
        everything = list(mx.all_matrices(2, Z2))
        self.assertEqual(len(everything), 16)
        self.assertEqual(everything[0], mx.zero(2, Z2))
        self.assertEqual(everything[-1], mx.from_rows([[1, 1], [1, 1]], Z2))
        self.assertEqual(len(set(everything)), 16)

    def test_gaussian_not_enumerable(self):
        with self.assertRaises(UnsupportedContextError):
            list(mx.all_matrices(1, QI))


class TestAlgebraicLaws(unittest.TestCase):
    def random_matrices(self, seed, count=30):
        rng = random.Random(seed)
        for _ in range(count):
            field = rng.choice([QI, Z3, ScalarField(ZMOD, 5)])
            yield mx.random_matrix(rng.choice([1, 2, 3]), field, rng, zero_row_probability=0.3)

    def test_rank_is_invariant_under_star(self):
        for m in self.random_matrices(21):
            for kind in mx.InvolutionKind:
                with self.subTest(m=str(m), kind=kind.name):
                    self.assertEqual(mx.rank(mx.star(m, kind)), mx.rank(m))

    def test_powers_add_exponents(self):
        for m in self.random_matrices(22, count=15):
            for j in range(1, 5):
                for k in range(1, 5):
                    with self.subTest(m=str(m), j=j, k=k):
                        self.assertEqual(mx.power(m, j + k), mx.power(m, j) @ mx.power(m, k))

    def test_inner_inverse_gives_idempotents(self):
        for m in self.random_matrices(23):
            g = mx.inner_inverse(m)
            with self.subTest(m=str(m)):
                self.assertEqual((m @ g) @ (m @ g), m @ g)
                self.assertEqual((g @ m) @ (g @ m), g @ m)

    def test_left_solve_absence_on_transpose_example(self):
        d = qi([["1", "0"], ["i", "0"]])
        dd = d @ mx.star(d, mx.InvolutionKind.TRANSPOSE)
        self.assertEqual(dd, qi([["1", "i"], ["i", "-1"]]))
        self.assertIsNone(mx.solve_left(dd, d))


class TestSolveAbsenceIsExact(unittest.TestCase):
    """Every None from solve_left/solve_right is confirmed by brute force."""

    def assertAbsenceExact(self, candidates, everything):
        for m in candidates:
            left = {x @ m for x in everything}
            right = {m @ x for x in everything}
            for b in everything:
                with self.subTest(m=str(m), b=str(b)):
                    self.assertEqual(mx.solve_left(m, b) is None, b not in left)
                    self.assertEqual(mx.solve_right(m, b) is None, b not in right)

    def test_small_fields(self):
        for field in (Z2, Z3):
            for n in (1, 2):
                everything = list(mx.all_matrices(n, field))
                self.assertAbsenceExact(everything, everything)

    def test_three_by_three_over_z2_sampled(self):
        everything = list(mx.all_matrices(3, Z2))
        rng = random.Random(31)
        self.assertAbsenceExact(rng.sample(everything, 12), everything)

    @unittest.skipUnless(config.SLOW_TESTS, "set GINV_SLOW_TESTS=1")
    def test_three_by_three_over_z2(self):
        everything = list(mx.all_matrices(3, Z2))
        self.assertAbsenceExact(everything, everything)


if __name__ == '__main__':
    unittest.main()
