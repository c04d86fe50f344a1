import unittest
from fractions import Fraction

from src.cli.parser import (
    ConeDeclaration,
    MonoidFileError,
    parse,
    parseSystem,
)
from src.cones.rational import RationalCone, cone_membership
from src.core.equations import Equation
from src.finite.corpus import corpus_monoid
from src.finite.monoid import FiniteMonoid
from src.presentation.presented import PresentedMonoid

CANONICAL = """monoid threechain finite
elements 0 1 inf
add 0 0 0
add 0 1 1
add 0 inf inf
add 1 0 1
add 1 1 inf
add 1 inf inf
add inf 0 inf
add inf 1 inf
add inf inf inf
end

monoid idempotent2 presented
generators g
relation 2*g = 3*g
end

monoid twosevens qcone 1
generator 2
generator 7
end
"""


class TestParse(unittest.TestCase):
    def test_round_trip(self):
        monoids = parse(CANONICAL)
        self.assertEqual(monoids.names, ["threechain", "idempotent2", "twosevens"])
        self.assertEqual(monoids.format(), CANONICAL)

    def test_finite(self):
        M = parse(CANONICAL).monoid("threechain")
        self.assertIsInstance(M, FiniteMonoid)
        self.assertEqual(M.table, corpus_monoid("threechain").table)
        self.assertEqual(M.name, "threechain")

    def test_presented(self):
        monoids = parse(CANONICAL)
        P = monoids.declarations["idempotent2"].presentation
        self.assertEqual(P.relations, (((2,), (3,)),))
        M = monoids.monoid("idempotent2")
        self.assertIsInstance(M, PresentedMonoid)
        self.assertTrue(M.eq((2,), (5,)))
        self.assertIs(monoids.monoid("idempotent2"), M)

    def test_bare_names_print_with_coefficients(self):
        text = "monoid G presented\ngenerators g h\nrelation g + h = 0\nend\n"
        self.assertIn("relation 1*g + 1*h = 0", parse(text).format())

    def test_cone(self):
        monoids = parse(CANONICAL)
        C = monoids.monoid("twosevens")
        self.assertIsInstance(C, RationalCone)
        self.assertEqual(C.generators, ((Fraction(2),), (Fraction(7),)))
        self.assertTrue(cone_membership(C, 11).isTrue)

    def test_cone_rationals(self):
        monoids = parse("monoid Q qcone 2 # plane\ngenerator 1/2 3\ngenerator 0 1\nend\n")
        declaration = monoids.declarations["Q"]
        self.assertIsInstance(declaration, ConeDeclaration)
        self.assertEqual(declaration.generators[0], (Fraction(1, 2), Fraction(3)))
        self.assertEqual(declaration.format()[1], "generator 1/2 3")

    def check_error(self, text: str, line: int):
        with self.assertRaises(MonoidFileError) as context:
            parse(text)
        self.assertEqual(context.exception.line, line)
        self.assertTrue(str(context.exception).startswith(f"line {line}:"))

    def test_missing_sum(self):
        self.check_error(CANONICAL.replace("add inf inf inf\n", ""), 1)

    def test_not_commutative(self):
        self.check_error(CANONICAL.replace("add 1 0 1\n", "add 1 0 inf\n"), 1)

    def test_not_associative(self):
        text = (
            "monoid X finite\nelements 0 a b\n"
            "add 0 0 0\nadd 0 a a\nadd 0 b b\n"
            "add a 0 a\nadd a a b\nadd a b 0\n"
            "add b 0 b\nadd b a 0\nadd b b b\nend\n"
        )
        self.check_error(text, 1)

    def test_malformed_rational(self):
        self.check_error("monoid A qcone 1\ngenerator 2\ngenerator 7/0\nend\n", 3)
        self.check_error("monoid A qcone 1\ngenerator 2 3\nend\n", 2)
        self.check_error("monoid A qcone 1\ngenerator -2\nend\n", 2)

    def test_unknown_keywords(self):
        self.check_error("monoid A qcone 1\ngenerator 2\nweight 3\nend\n", 3)
        self.check_error("\n\nsemigroup A\n", 3)
        self.check_error("monoid A ring\nend\n", 1)
        self.check_error("monoid A qcone x\nend\n", 1)

    def test_structure_errors(self):
        self.check_error("monoid A qcone 1\ngenerator 2\n", 2)
        self.check_error(CANONICAL + "\nmonoid twosevens qcone 1\ngenerator 1\nend\n", 24)
        self.check_error("monoid G presented\ngenerators g\nrelation 2*h = g\nend\n", 3)
        self.check_error("monoid T finite\nelements 0 1\nadd 0 0 2\nend\n", 3)

    def test_unknown_monoid(self):
        self.assertRaises(MonoidFileError, parse(CANONICAL).monoid, "boolean")


class TestParseSystem(unittest.TestCase):
    def setUp(self):
        self.monoids = parse(CANONICAL)

    def test_finite_system(self):
        T = self.monoids.monoid("threechain")
        text = "unknowns x y\nequation x + y = inf\nequation 2*x + 1 = inf  # doubled\n"
        system = parseSystem(text, T)
        self.assertEqual(system.unknownNames, ("x", "y"))
        self.assertEqual(
            system.equations,
            (Equation((1, 1), 0, (0, 0), 2), Equation((2, 0), 1, (0, 0), 2)),
        )

    def test_cone_system(self):
        C = self.monoids.monoid("twosevens")
        system = parseSystem("unknowns z\nequation 2*z = 11 + 0\n", C)
        self.assertEqual(system.equations, (Equation((2,), (0,), (0,), (Fraction(11),)),))

    def test_presented_constants(self):
        G = self.monoids.monoid("idempotent2")
        system = parseSystem("unknowns u\nequation u + 2*g = 3*g\n", G)
        self.assertEqual(system.equations[0].const_left, (2,))

    def test_errors(self):
        T = self.monoids.monoid("threechain")
        cases = [
            ("equation x = 1\n", 1),
            ("unknowns x\nequation x = 5\n", 2),
            ("unknowns x\nequation x == 1\n", 2),
            ("unknowns x\nequation x + = 1\n", 2),
            ("unknowns x\nunknowns y\n", 2),
            ("unknowns x x\n", 1),
            ("unknowns x\nsolve x\n", 2),
            ("unknowns x\nequation y*x = 1\n", 2),
        ]
        for text, line in cases:
            with self.assertRaises(MonoidFileError) as context:
                parseSystem(text, T)
            self.assertEqual(context.exception.line, line, text)
        self.assertRaises(MonoidFileError, parseSystem, "# nothing\n", T)


if __name__ == "__main__":
    unittest.main()
