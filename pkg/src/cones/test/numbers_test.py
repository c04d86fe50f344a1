import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf, sqrt

from src.cones.numbers import SQRT2, NumberQSqrt2

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=200)


def numeric(x: NumberQSqrt2):
    return mpf(x.a.numerator) / x.a.denominator + mpf(x.b.numerator) / x.b.denominator * sqrt(2)


class TestNumberQSqrt2(unittest.TestCase):
    def test_signs(self):
        self.assertEqual((SQRT2 - 1).sign(), 1)
        self.assertEqual((1 - SQRT2).sign(), -1)
        self.assertEqual(NumberQSqrt2(3, -2).sign(), 1)
        self.assertEqual(NumberQSqrt2(-3, 2).sign(), -1)
        self.assertEqual(NumberQSqrt2(0, 0).sign(), 0)

    def test_arithmetic(self):
        self.assertEqual(SQRT2 * SQRT2, 2)
        self.assertEqual((SQRT2 - 1) + (2 - SQRT2), 1)
        self.assertEqual(NumberQSqrt2(1, 1) * NumberQSqrt2(1, -1), -1)
        self.assertFalse((1 - SQRT2).isRational)
        self.assertTrue(NumberQSqrt2(Fraction(1, 3)).isRational)

    def test_order(self):
        alpha = SQRT2 - 1
        self.assertTrue(0 < alpha < Fraction(1, 2))
        self.assertTrue(Fraction(41, 100) < alpha < Fraction(5, 12))
        self.assertEqual(max(alpha, 1 - alpha), 1 - alpha)

    def test_format(self):
        self.assertEqual(str(SQRT2 - 1), "-1+sqrt2")
        self.assertEqual(str(2 - SQRT2), "2-sqrt2")
        self.assertEqual(str(NumberQSqrt2(Fraction(1, 2), 3)), "1/2+3*sqrt2")
        self.assertEqual(str(-SQRT2), "-sqrt2")
        self.assertEqual(str(NumberQSqrt2(Fraction(7, 4))), "7/4")

    @given(rationals, rationals, rationals, rationals)
    @settings(max_examples=1000, deadline=None)
    def test_order_matches_numeric(self, a, b, c, e):
        mp.dps = 60
        x, y = NumberQSqrt2(a, b), NumberQSqrt2(c, e)
        difference = numeric(x) - numeric(y)
        if x == y:
            self.assertEqual(difference, 0)
        else:
            self.assertEqual(x < y, difference < 0)


if __name__ == "__main__":
    unittest.main()
