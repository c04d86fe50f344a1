import unittest

from src.core.backend import DomainMismatchError
from src.core.predicates import check_axioms, is_conical, is_refinement
from src.finite.constructions import (
    chain_semilattice,
    cyclic_monoid,
    direct_product,
    free_semilattice,
    truncated_naturals,
    zero_adjoined_group,
)
from src.finite.corpus import CORPUS, corpus_monoid, corpus_monoids
from src.finite.monoid import FiniteMonoid, InvalidTableError


class TestFiniteMonoid(unittest.TestCase):
    def test_threechain_table(self):
        T = corpus_monoid("threechain")
        self.assertEqual(T.labels, ("0", "1", "inf"))
        self.assertEqual(T.table, ((0, 1, 2), (1, 2, 2), (2, 2, 2)))
        self.assertEqual(T.element("inf"), 2)
        self.assertEqual(T.format(1), "1")
        self.assertTrue(T.isComplete)

    def test_unknown_label(self):
        T = corpus_monoid("threechain")
        self.assertRaises(DomainMismatchError, T.element, "2")

    def test_not_commutative(self):
        self.assertRaises(
            InvalidTableError, FiniteMonoid, ["0", "a", "b"], [[0, 1, 2], [1, 1, 1], [2, 2, 2]]
        )

    def test_not_associative(self):
        # (a+a)+b = 0 but a+(a+b) = a
        table = [[0, 1, 2], [1, 2, 0], [2, 0, 0]]
        self.assertRaises(InvalidTableError, FiniteMonoid, ["0", "a", "b"], table)

    def test_zero_not_neutral(self):
        self.assertRaises(InvalidTableError, FiniteMonoid, ["0", "a"], [[1, 1], [1, 1]])

    def test_bad_shape(self):
        self.assertRaises(InvalidTableError, FiniteMonoid, ["0", "a"], [[0, 1]])
        self.assertRaises(InvalidTableError, FiniteMonoid, ["0", "0"], [[0, 1], [1, 1]])
        self.assertRaises(InvalidTableError, FiniteMonoid, [], [])

    def test_fromSums_missing_entry(self):
        self.assertRaises(
            InvalidTableError,
            FiniteMonoid.fromSums,
            ["0", "a"],
            {("0", "0"): "0", ("0", "a"): "a"},
        )

    def test_fromSums_conflict(self):
        self.assertRaises(
            InvalidTableError,
            FiniteMonoid.fromSums,
            ["0", "a"],
            {("0", "0"): "0", ("0", "a"): "a", ("a", "0"): "0", ("a", "a"): "a"},
        )

    def test_downSet_and_exactLeq(self):
        T = corpus_monoid("threechain")
        self.assertEqual(T.downSet(1), [0, 1])
        self.assertEqual(T.downSet(2), [0, 1, 2])
        self.assertEqual(T.exactLeq(1, 2), (True, 1))
        self.assertEqual(T.exactLeq(2, 1), (False, None))

    def test_submonoid(self):
        T = corpus_monoid("fourchain")
        sub, members = T.submonoid([2, 3])
        self.assertEqual(members, [0, 2, 3])
        self.assertEqual(sub.labels, ("0", "2", "inf"))
        self.assertRaises(InvalidTableError, T.submonoid, [1])

    def test_equality_and_hash(self):
        self.assertEqual(corpus_monoid("boolean"), chain_semilattice(2))
        self.assertEqual(len({corpus_monoid("z2"), cyclic_monoid(0, 2)}), 1)

    def test_formatTable(self):
        lines = corpus_monoid("boolean").formatTable().splitlines()
        self.assertEqual(lines[0], "  | 0 1")
        self.assertEqual(lines[2], "0 | 0 1")
        self.assertEqual(lines[3], "1 | 1 1")


class TestConstructions(unittest.TestCase):
    def test_every_corpus_member_is_a_monoid(self):
        for name in CORPUS:
            M = corpus_monoid(name)
            self.assertEqual(M.name, name)
            self.assertTrue(check_axioms(M).isTrue, name)

    def test_unknown_corpus_name(self):
        self.assertRaises(KeyError, corpus_monoid, "nope")

    def test_cyclic(self):
        G = cyclic_monoid(2, 1)
        self.assertEqual(G.labels, ("0", "g", "2g"))
        self.assertEqual(G.add(1, 2), 2)
        Z3 = cyclic_monoid(0, 3)
        self.assertEqual(Z3.add(1, 2), 0)
        self.assertRaises(ValueError, cyclic_monoid, 0, 0)

    def test_truncated(self):
        F = truncated_naturals(3)
        self.assertEqual(F.labels, ("0", "1", "2", "inf"))
        self.assertEqual(F.add(1, 2), 3)
        self.assertRaises(ValueError, truncated_naturals, 0)

    def test_product(self):
        P = direct_product(corpus_monoid("boolean"), corpus_monoid("threechain"))
        self.assertEqual(P.size, 6)
        self.assertEqual(P.labels[:3], ("0.0", "0.1", "0.inf"))
        self.assertEqual(P.format(P.add(P.element("1.1"), P.element("0.1"))), "1.inf")

    def test_semilattices_are_refinement_cones(self):
        for M in (free_semilattice(2), chain_semilattice(3), zero_adjoined_group(2)):
            self.assertTrue(is_conical(M).isTrue, M.name)
            self.assertTrue(is_refinement(M).isTrue, M.name)

    def test_corpus_size_filter(self):
        self.assertTrue(all(M.size <= 4 for M in corpus_monoids(max_size=4)))


if __name__ == "__main__":
    unittest.main()
