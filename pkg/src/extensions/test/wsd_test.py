import random
import unittest

from src.core.backends import FreeCommutativeMonoid, NaturalNumbers
from src.core.equations import PreconditionError
from src.core.predicates import check_axioms
from src.extensions.errors import DegenerateInstanceError, UndecidableBaseError
from src.extensions.wsd import (
    confluence_sweep,
    peak_decision,
    solve_wsd,
    wsd_extend,
)
from src.finite.corpus import corpus_monoid


class UndecidableNaturals(NaturalNumbers):
    isDecidable = False


SWEEP = [
    (lambda: NaturalNumbers(), (1, 1, 2, 0)),
    (lambda: corpus_monoid("threechain"), ("1", "1", "1", "inf")),
    (lambda: corpus_monoid("fourchain"), ("1", "1", "1", "2")),
    (lambda: corpus_monoid("semilattice2"), ("a", "b", "a", "b")),
    (lambda: corpus_monoid("boolean"), ("1", "1", "1", "1")),
    (lambda: FreeCommutativeMonoid(2), ((1, 0), (0, 1), (1, 1), (1, 1))),
]


class TestWsdExtension(unittest.TestCase):
    def test_naturals_collapse(self):
        N = wsd_extend(NaturalNumbers(), 1, 1, 2, 0)
        self.assertTrue(N.eq(N.x0, N.j(1)))
        self.assertTrue(N.eq(N.x1, N.j(1)))
        self.assertEqual(N.normalForm((3, (2, 1))), (6, (0, 0)))

    def test_threechain_rules(self):
        T = corpus_monoid("threechain")
        N = wsd_extend(T, "1", "1", "1", "inf")
        zero, one, inf = (T.element(x) for x in ("0", "1", "inf"))
        # below c the single counts stay
        self.assertEqual(N.normalForm((zero, (1, 0))), (zero, (1, 0)))
        self.assertEqual(N.normalForm((inf, (1, 0))), (inf, (0, 0)))
        self.assertTrue(N.eq(N.add(N.x0, N.x1), N.j(one)))
        self.assertFalse(N.eq(N.x0, N.x1))
        self.assertEqual(N.format(N.x0), "[0, 1*e0]")

    def test_steps(self):
        N = wsd_extend(NaturalNumbers(), 1, 1, 2, 0)
        self.assertEqual(N.steps((0, (1, 1))), [(2, (0, 0)), (1, (0, 1)), (1, (1, 0))])
        self.assertEqual(N.steps((4, (0, 0))), [])

    def test_peak_joins(self):
        N = wsd_extend(NaturalNumbers(), 1, 1, 2, 0)
        decision = peak_decision(N, (0, (1, 1)))
        self.assertTrue(decision.isTrue)
        self.assertEqual(decision.witness, 3)

    def test_order_on_copy(self):
        T = corpus_monoid("threechain")
        N = wsd_extend(T, "1", "1", "1", "inf")
        one, inf = T.element("1"), T.element("inf")
        self.assertEqual(N.exactLeq(N.j(one), N.j(inf))[0], True)
        self.assertEqual(N.exactLeq(N.j(inf), N.j(one)), (False, None))
        self.assertIsNone(N.exactLeq(N.x0, N.j(inf)))

    def test_errors(self):
        T = corpus_monoid("threechain")
        self.assertRaises(PreconditionError, wsd_extend, T, "1", "0", "0", "0")
        self.assertRaises(DegenerateInstanceError, wsd_extend, T, "0", "1", "1", "0")
        self.assertRaises(UndecidableBaseError, wsd_extend, UndecidableNaturals(), 1, 1, 2, 0)

    def test_sweep(self):
        for build, instance in SWEEP:
            M = build()
            solution = solve_wsd(M, *instance, bound=3)
            self.assertIsNotNone(solution.extension, M.name)
            for name, decision in solution.assertions.items():
                self.assertTrue(decision.isTrue, (M.name, name))
            N = solution.extension
            self.assertTrue(check_axioms(N, bound=2).isTrue, M.name)
            sweep = confluence_sweep(N, peaks=100, rng=random.Random(7))
            self.assertTrue(sweep.isTrue, M.name)
            found, draws = sweep.witness
            self.assertEqual(found, 100, M.name)
            self.assertGreaterEqual(draws, found)

    def test_sweep_runs_out_of_draws(self):
        N = wsd_extend(corpus_monoid("threechain"), "1", "1", "1", "inf")
        sweep = confluence_sweep(N, peaks=100, rng=random.Random(7), max_draws=50)
        self.assertTrue(sweep.isUnknown)
        self.assertEqual(sweep.bound, 50)

    def test_peak_counts_distinct_rewrites(self):
        N = wsd_extend(NaturalNumbers(), 1, 1, 2, 0)
        self.assertEqual(peak_decision(N, (0, (1, 1))).witness, 3)
        self.assertEqual(peak_decision(N, (0, (1, 0))).witness, 1)
        self.assertEqual(peak_decision(N, (0, (0, 0))).witness, 0)


class TestSolveWsd(unittest.TestCase):
    def test_degenerate(self):
        solution = solve_wsd(NaturalNumbers(), 0, 2, 2, 0)
        self.assertIsNone(solution.extension)
        self.assertEqual(solution.witnesses, (0, 2))
        self.assertEqual(solve_wsd(NaturalNumbers(), 2, 0, 2, 0).witnesses, (2, 0))

        T = corpus_monoid("threechain")
        solution = solve_wsd(T, "1", "1", "0", "inf")
        self.assertEqual(solution.witnesses, (0, 0))
        self.assertTrue(solution.holds)
        self.assertEqual(solution.summary(), ["witnesses (0, 0)", "assert solves True"])

    def test_unsolvable_zero(self):
        # g + g + g = g in <g | g = 3g> but g + g != g
        P = corpus_monoid("periodic2")
        self.assertRaises(DegenerateInstanceError, solve_wsd, P, "g", "g", "0", "g")

    def test_precondition(self):
        self.assertRaises(PreconditionError, solve_wsd, NaturalNumbers(), 1, 1, 3, 0)

    def test_summary_lists_extension(self):
        solution = solve_wsd(NaturalNumbers(), 1, 1, 2, 0, bound=2)
        lines = solution.summary()
        self.assertEqual(lines[0], "witnesses ([0, 1*e0], [0, 1*e1])")
        self.assertEqual(lines[1], "extension Z+[wsd]")
        self.assertIn("assert conical True", lines)

    def test_peak_reports_counterexample(self):
        N = wsd_extend(NaturalNumbers(), 1, 1, 2, 0)
        N.steps = lambda pair: [(0, (0, 0)), (1, (0, 0))] if pair[1] == (1, 1) else []
        decision = peak_decision(N, (0, (1, 1)))
        self.assertTrue(decision.isFalse)
        self.assertEqual(decision.witness, ((0, (1, 1)), (0, (0, 0)), (1, (0, 0))))


if __name__ == "__main__":
    unittest.main()
