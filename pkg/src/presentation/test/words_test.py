import unittest

from src.presentation.words import (
    Presentation,
    PresentationError,
    divides,
    overlap,
)


class TestWords(unittest.TestCase):
    def test_divides_and_overlap(self):
        self.assertTrue(divides((1, 0, 2), (1, 1, 2)))
        self.assertFalse(divides((2, 0), (1, 5)))
        self.assertEqual(overlap((2, 0, 1), (1, 3, 0)), (2, 3, 1))


class TestPresentation(unittest.TestCase):
    def setUp(self):
        self.P = Presentation(("u", "a"), [((2, 0), (0, 1))], name="half")

    def test_parse_word(self):
        self.assertEqual(self.P.parseWord("2*u + 1*a"), (2, 1))
        self.assertEqual(self.P.parseWord("u+a+u"), (2, 1))
        self.assertEqual(self.P.parseWord("0"), (0, 0))

    def test_parse_errors(self):
        self.assertRaises(PresentationError, self.P.parseWord, "2*v")
        self.assertRaises(PresentationError, self.P.parseWord, "x*u")
        self.assertRaises(PresentationError, self.P.parseWord, "")

    def test_format(self):
        self.assertEqual(self.P.formatWord((2, 1)), "2*u + 1*a")
        self.assertEqual(self.P.formatWord((0, 0)), "0")
        self.assertEqual(self.P.format(), ["generators u a", "relation 2*u = 1*a"])

    def test_orient(self):
        self.assertEqual(self.P.orient((0, 1), (2, 0)), ((2, 0), (0, 1)))
        self.assertIsNone(self.P.orient((1, 1), (1, 1)))
        # same degree: generator 0 is most significant
        self.assertEqual(self.P.orient((0, 2), (1, 1)), ((1, 1), (0, 2)))

    def test_elimination_beats_degree(self):
        P = self.P.eliminating(["u"])
        self.assertEqual(P.orient((0, 5), (1, 0)), ((1, 0), (0, 5)))

    def test_validation(self):
        self.assertRaises(PresentationError, Presentation, ("u", "u"))
        self.assertRaises(PresentationError, Presentation, ("a+b",))
        self.assertRaises(PresentationError, Presentation, ("0",))
        self.assertRaises(PresentationError, Presentation, ("u",), [((1, 0), (0,))])
        self.assertRaises(PresentationError, Presentation, ("u",), [((-1,), (0,))])

    def test_generator_and_word(self):
        self.assertEqual(self.P.generator("a"), (0, 1))
        self.assertEqual(self.P.word({"u": 3}), (3, 0))
        self.assertRaises(PresentationError, self.P.generator, "b")


if __name__ == "__main__":
    unittest.main()
