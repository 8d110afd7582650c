import random
import unittest
from fractions import Fraction

from exceptions import InputError, ScalarDivisionError, UnsupportedContextError
from scalars import (
    GAUSSIAN,
    QI,
    ZMOD,
    GaussianRational,
    ModularInt,
    ScalarField,
    conjugate,
    format_scalar,
    is_prime,
    normalize,
    parse_scalar,
    scalar_op,
)


class TestRationals(unittest.TestCase):
    def test_normalize_reduces(self):
        self.assertEqual(normalize(2, 4), Fraction(1, 2))
        self.assertEqual(normalize(3, -6), Fraction(-1, 2))

    def test_normalize_zero_denominator(self):
        with self.assertRaises(InputError):
            normalize(1, 0)

    def test_normalize_rejects_non_integers(self):
        for num, den in ((2.5, 1), (1, 2.0), ("3", 1), (True, 1), (Fraction(1, 2), 1)):
            with self.subTest(num=num, den=den):
                with self.assertRaises(InputError):
                    normalize(num, den)

    def test_is_prime(self):
        self.assertEqual([n for n in range(20) if is_prime(n)], [2, 3, 5, 7, 11, 13, 17, 19])


class TestGaussianRational(unittest.TestCase):
    def test_arithmetic(self):
        x = GaussianRational(1, 2)
        y = GaussianRational(3, -1)
        self.assertEqual(x * y, GaussianRational(5, 5))
        self.assertEqual(x + y, GaussianRational(4, 1))
        self.assertEqual(x - y, GaussianRational(-2, 3))
        self.assertEqual(-x, GaussianRational(-1, -2))

    def test_inverse(self):
        self.assertEqual(GaussianRational(1, 1).inverse(), GaussianRational(Fraction(1, 2), Fraction(-1, 2)))
        x = GaussianRational(Fraction(3, 4), -5)
        self.assertEqual(x * x.inverse(), GaussianRational(1))

    def test_inverse_of_zero(self):
        with self.assertRaises(ScalarDivisionError):
            GaussianRational(0).inverse()
        # still a ZeroDivisionError for callers that only know the builtin
        with self.assertRaises(ZeroDivisionError):
            GaussianRational(0).inverse()

    def test_conjugate(self):
        self.assertEqual(GaussianRational(2, 3).conjugate(), GaussianRational(2, -3))

    def test_float_components_rejected(self):
        with self.assertRaises(InputError):
            GaussianRational(0.5)


class TestModularInt(unittest.TestCase):
    def test_reduction(self):
        self.assertEqual(ModularInt(5, 3).value, 2)
        self.assertEqual(ModularInt(-1, 5).value, 4)

    def test_inverse(self):
        self.assertEqual(ModularInt(2, 7).inverse(), ModularInt(4, 7))

    def test_inverse_needs_prime_modulus(self):
        with self.assertRaises(UnsupportedContextError):
            ModularInt(5, 6).inverse()

    def test_inverse_of_zero(self):
        with self.assertRaises(ScalarDivisionError):
            ModularInt(0, 5).inverse()

    def test_mixed_moduli(self):
        with self.assertRaises(InputError):
            ModularInt(1, 5) + ModularInt(1, 7)

    def test_conjugation_is_trivial(self):
        self.assertEqual(ModularInt(3, 5).conjugate(), ModularInt(3, 5))


class TestLiterals(unittest.TestCase):
    def test_format(self):
        self.assertEqual(format_scalar(GaussianRational(Fraction(3, 4), -5)), "3/4-5i")
        self.assertEqual(format_scalar(GaussianRational(0, 1)), "i")
        self.assertEqual(format_scalar(GaussianRational(0, -1)), "-i")
        self.assertEqual(format_scalar(GaussianRational(2, 1)), "2+i")
        self.assertEqual(format_scalar(GaussianRational(2)), "2")
        self.assertEqual(format_scalar(GaussianRational(0)), "0")
        self.assertEqual(format_scalar(ModularInt(4, 5)), "4")

    def test_parse_gaussian(self):
        cases = {
            "3/4-5i": GaussianRational(Fraction(3, 4), -5),
            "i": GaussianRational(0, 1),
            "-i": GaussianRational(0, -1),
            "2+i": GaussianRational(2, 1),
            "-3-2i": GaussianRational(-3, -2),
            "1/2i": GaussianRational(0, Fraction(1, 2)),
            "7": GaussianRational(7),
            " -2/6 ": GaussianRational(Fraction(-1, 3)),
        }
        for text, expected in cases.items():
            with self.subTest(text=text):
                self.assertEqual(parse_scalar(text, GAUSSIAN), expected)

    def test_parse_zmod(self):
        self.assertEqual(parse_scalar("-1", ZMOD, 5), ModularInt(4, 5))
        self.assertEqual(parse_scalar("12", ZMOD, 5), ModularInt(2, 5))

    def test_zero_denominator_reports_position(self):
        with self.assertRaises(InputError) as caught:
            parse_scalar("1/0", GAUSSIAN)
        self.assertEqual(caught.exception.position, 1)

    def test_malformed_literals(self):
        for text in ("", "a", "1/", "2+3", "1.5", "i2"):
            with self.subTest(text=text):
                with self.assertRaises(InputError):
                    parse_scalar(text, GAUSSIAN)
        with self.assertRaises(InputError):
            parse_scalar("i", ZMOD, 5)
        with self.assertRaises(InputError):
            parse_scalar("1", ZMOD)


class TestScalarOps(unittest.TestCase):
    def test_mixed_kinds_rejected(self):
        with self.assertRaises(InputError):
            scalar_op(ModularInt(1, 5), GaussianRational(1), "add")

    def test_inverse_op(self):
        self.assertEqual(scalar_op(Fraction(2, 3), None, "inv"), Fraction(3, 2))
        with self.assertRaises(ScalarDivisionError):
            scalar_op(Fraction(0), None, "inv")

    def test_unknown_op(self):
        with self.assertRaises(InputError):
            scalar_op(GaussianRational(1), GaussianRational(1), "pow")


class TestScalarField(unittest.TestCase):
    def test_construction(self):
        self.assertTrue(QI.is_field)
        self.assertTrue(ScalarField(ZMOD, 5).is_field)
        self.assertFalse(ScalarField(ZMOD, 6).is_field)
        with self.assertRaises(InputError):
            ScalarField(ZMOD, 1)
        with self.assertRaises(InputError):
            ScalarField(GAUSSIAN, 3)

    def test_modulus_must_be_an_integer(self):
        for modulus in ("5", 5.0, True, None):
            with self.subTest(modulus=modulus):
                with self.assertRaises(InputError):
                    ScalarField(ZMOD, modulus)
        with self.assertRaises(InputError):
            ModularInt(2, 5.0)
        with self.assertRaises(InputError):
            ModularInt(2.0, 5)

    def test_elements(self):
        self.assertEqual(ScalarField(ZMOD, 3).elements(), [ModularInt(v, 3) for v in range(3)])
        with self.assertRaises(UnsupportedContextError):
            QI.elements()

    def test_imaginary_unit(self):
        self.assertEqual(QI.imaginary_unit() * QI.imaginary_unit(), QI.from_int(-1))
        with self.assertRaises(UnsupportedContextError):
            ScalarField(ZMOD, 5).imaginary_unit()

    def test_describe(self):
        self.assertEqual(QI.describe(), "Q(i)")
        self.assertEqual(ScalarField(ZMOD, 7).describe(), "Z7")


def random_gaussian(rng):
    return GaussianRational(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                            Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


class TestFieldLaws(unittest.TestCase):
    """Seeded checks of the field and involution laws on random scalars."""

    def samplers(self):
        rng = random.Random(11)
        yield "Q(i)", lambda: random_gaussian(rng)
        for p in (2, 3, 7):
            field = ScalarField(ZMOD, p)
            yield field.describe(), lambda field=field: field.random(rng)

    def test_ring_axioms(self):
        for name, draw in self.samplers():
            for _ in range(200):
                x, y, z = draw(), draw(), draw()
                with self.subTest(field=name, x=format_scalar(x), y=format_scalar(y), z=format_scalar(z)):
                    self.assertEqual((x * y) * z, x * (y * z))
                    self.assertEqual((x + y) + z, x + (y + z))
                    self.assertEqual(x * (y + z), x * y + x * z)
                    self.assertEqual((y + z) * x, y * x + z * x)
                    self.assertEqual(x * y, y * x)
                    self.assertEqual(x + (-x), x - x)

    def test_multiplicative_inverse(self):
        for name, draw in self.samplers():
            for _ in range(200):
                x = draw()
                if not x:
                    continue
                with self.subTest(field=name, x=format_scalar(x)):
                    self.assertEqual(x * x.inverse(), x * 0 + 1)
                    self.assertEqual(scalar_op(x, None, "inv"), x.inverse())

    def test_conjugation_is_an_anti_automorphism(self):
        for name, draw in self.samplers():
            for _ in range(200):
                x, y = draw(), draw()
                with self.subTest(field=name, x=format_scalar(x), y=format_scalar(y)):
                    self.assertEqual(conjugate(x * y), conjugate(y) * conjugate(x))
                    self.assertEqual(conjugate(x + y), conjugate(x) + conjugate(y))
                    self.assertEqual(conjugate(conjugate(x)), x)

    def test_literal_round_trip(self):
        rng = random.Random(5)
        for _ in range(500):
            x = random_gaussian(rng)
            text = format_scalar(x)
            with self.subTest(text=text):
                self.assertEqual(parse_scalar(text, GAUSSIAN), x)
        z7 = ScalarField(ZMOD, 7)
        for x in z7.elements():
            self.assertEqual(parse_scalar(format_scalar(x), ZMOD, 7), x)


if __name__ == '__main__':
    unittest.main()
