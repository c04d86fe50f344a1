import unittest

from src.core.predicates import (
    is_antisymmetric,
    is_cancellative,
    is_conical,
    is_p_torsion_free,
    is_separative,
    is_stably_finite,
)
from src.core.pset import PSet
from src.finite.congruence import (
    Congruence,
    CongruenceError,
    all_congruences,
    antisymmetric_quotient,
    cancellative_quotient,
    congruence_closure,
    p_torsion_quotient,
    projection,
    quotient,
    separative_quotient,
)
from src.finite.constructions import direct_product
from src.finite.corpus import corpus_monoid, corpus_monoids


class TestCongruence(unittest.TestCase):
    def setUp(self):
        self.T = corpus_monoid("threechain")
        self.G = corpus_monoid("idempotent2")

    def test_identity(self):
        identity = congruence_closure(self.T, [])
        self.assertTrue(identity.isIdentity)
        self.assertEqual(identity, Congruence.identity(self.T))

    def test_collapse_everything(self):
        congruence = congruence_closure(self.T, [("1", "0")])
        self.assertEqual(congruence.size, 1)

    def test_closure_two_classes(self):
        congruence = congruence_closure(self.G, [(1, 2)])
        self.assertEqual(congruence.blocks, [[0], [1, 2]])
        self.assertEqual(congruence.format(), "{0} {g,2g}")

    def test_incompatible_partition(self):
        self.assertRaises(CongruenceError, Congruence, self.T, [0, 0, 1])
        self.assertRaises(CongruenceError, Congruence, self.T, [0, 0])

    def test_ordering(self):
        identity = Congruence.identity(self.T)
        top = congruence_closure(self.T, [(0, 1)])
        self.assertTrue(identity <= top)
        self.assertFalse(top <= identity)

    def test_quotient_and_projection(self):
        congruence = congruence_closure(self.G, [(1, 2)])
        Q = quotient(self.G, congruence)
        self.assertEqual(Q.labels, ("0", "g"))
        self.assertEqual(Q.table, ((0, 1), (1, 1)))
        project = projection(congruence)
        for x in self.G.enumerate():
            for y in self.G.enumerate():
                self.assertEqual(project(self.G.add(x, y)), Q.add(project(x), project(y)))

    def test_all_congruences_threechain(self):
        congruences = all_congruences(self.T)
        self.assertEqual(
            sorted(c.classes for c in congruences),
            [(0, 0, 0), (0, 1, 1), (0, 1, 2)],
        )

    def test_all_congruences_limit(self):
        big = direct_product(corpus_monoid("threechain"), corpus_monoid("idempotent2"))
        self.assertRaises(ValueError, all_congruences, big)


class TestLeastQuotients(unittest.TestCase):
    def setUp(self):
        self.T = corpus_monoid("threechain")
        self.G = corpus_monoid("idempotent2")

    def test_cancellative_threechain(self):
        Q, congruence = cancellative_quotient(self.T)
        self.assertEqual(Q.size, 1)

    def test_cancellative_group_is_identity(self):
        Q, congruence = cancellative_quotient(corpus_monoid("z3"))
        self.assertTrue(congruence.isIdentity)

    def test_cancellative_idempotent(self):
        Q, congruence = cancellative_quotient(self.G)
        self.assertEqual(Q.size, 1)
        self.assertTrue(is_cancellative(Q).isTrue)

    def test_separative_threechain(self):
        Q, congruence = separative_quotient(self.T)
        self.assertEqual(congruence.blocks, [[0], [1, 2]])
        self.assertEqual(Q.table, ((0, 1), (1, 1)))

    def test_separative_of_separative_is_identity(self):
        Q, congruence = separative_quotient(corpus_monoid("semilattice2"))
        self.assertTrue(congruence.isIdentity)

    def test_separative_product_is_componentwise(self):
        P = direct_product(self.T, self.G, "product")
        Q, congruence = separative_quotient(P)
        _, left = separative_quotient(self.T)
        _, right = separative_quotient(self.G)
        for i, (x0, y0) in enumerate((x, y) for x in range(3) for y in range(3)):
            for j, (x1, y1) in enumerate((x, y) for x in range(3) for y in range(3)):
                self.assertEqual(
                    congruence.related(i, j),
                    left.related(x0, x1) and right.related(y0, y1),
                )

    def test_torsion(self):
        Q, congruence = p_torsion_quotient(self.G, PSet([2]))
        self.assertEqual(Q.size, 2)
        self.assertTrue(congruence.related(1, 2))
        _, identity = p_torsion_quotient(corpus_monoid("boolean"), PSet([2]))
        self.assertTrue(identity.isIdentity)

    def test_antisymmetric(self):
        _, identity = antisymmetric_quotient(self.T)
        self.assertTrue(identity.isIdentity)
        Q, congruence = antisymmetric_quotient(corpus_monoid("zeroZ2"))
        self.assertEqual(congruence.blocks, [[0], [1, 2]])
        self.assertTrue(is_antisymmetric(Q).isTrue)


class TestMinimality(unittest.TestCase):
    """Least quotients against every congruence of the small corpus monoids."""

    def check_least(self, build, holds):
        for M in corpus_monoids(max_size=6):
            Q, least = build(M)
            self.assertTrue(holds(Q), M.name)
            for congruence in all_congruences(M):
                if holds(quotient(M, congruence)):
                    self.assertTrue(least <= congruence, M.name)

    def test_cancellative(self):
        self.check_least(cancellative_quotient, lambda Q: is_cancellative(Q).isTrue)

    def test_separative(self):
        self.check_least(separative_quotient, lambda Q: is_separative(Q).isTrue)

    def test_torsion(self):
        P = PSet([2])
        self.check_least(
            lambda M: p_torsion_quotient(M, P),
            lambda Q: is_p_torsion_free(Q, P).isTrue,
        )

    def test_antisymmetric(self):
        self.check_least(antisymmetric_quotient, lambda Q: is_antisymmetric(Q).isTrue)

    def test_quotients_of_cones_are_cones(self):
        for M in corpus_monoids(max_size=6):
            if not is_conical(M).isTrue:
                continue
            builds = [
                separative_quotient,
                lambda N: p_torsion_quotient(N, PSet([2, 3])),
            ]
            # x + z = z must force x = 0 for the class of 0 to stay trivial
            if is_stably_finite(M).isTrue:
                builds.append(cancellative_quotient)
            for build in builds:
                Q, _ = build(M)
                self.assertTrue(is_conical(Q).isTrue, M.name)

    def test_cancellative_quotient_of_a_cone_can_be_a_group(self):
        Q, _ = cancellative_quotient(corpus_monoid("periodic2"))
        self.assertEqual(Q.size, 2)
        self.assertTrue(is_conical(Q).isFalse)


if __name__ == "__main__":
    unittest.main()
