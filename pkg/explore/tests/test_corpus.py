from django.test import SimpleTestCase, override_settings

from core.concepts import ConceptClass, product
from core.exceptions import DomainError
from core.measures import rtd, vc_dimension
from explore.catalogue import chain_class, singletons_class, warmuth_class
from explore.corpus import is_intersection_closed, is_maximal_class, quadratic_rtd_bound, verify_corpus
from explore.experiments import sample_class
from explore.rng import SeededRNG


def cube_subclasses(n):
    points = range(1 << n)
    for mask in range(1, 1 << (1 << n)):
        yield ConceptClass(n, tuple(c for c in points if mask >> c & 1))


class PredicateTests(SimpleTestCase):
    def test_maximal(self):
        self.assertTrue(is_maximal_class(ConceptClass.full_cube(3)))
        self.assertTrue(is_maximal_class(ConceptClass.from_strings(["000", "100", "010", "001"])))
        self.assertFalse(is_maximal_class(ConceptClass.from_strings(["00", "11"])))

    def test_intersection_closed(self):
        self.assertTrue(is_intersection_closed(chain_class(3)))
        self.assertFalse(is_intersection_closed(ConceptClass.from_strings(["01", "10"])))
        self.assertTrue(is_intersection_closed(ConceptClass.full_cube(3)))
        with self.assertRaises(DomainError):
            is_intersection_closed(ConceptClass.empty(2))

    def test_quadratic_bound(self):
        self.assertEqual(quadratic_rtd_bound(0), 0.0)
        self.assertAlmostEqual(quadratic_rtd_bound(1), 35.7422, delta=1e-6)


class CatalogueTests(SimpleTestCase):
    def test_chain(self):
        self.assertEqual(chain_class(3).to_strings(), ["000", "001", "011", "111"])

    def test_singletons(self):
        self.assertEqual(singletons_class(3).to_strings(), ["000", "001", "010", "100"])
        self.assertTrue(is_maximal_class(singletons_class(4)))

    def test_warmuth_shape(self):
        concept_class = warmuth_class()
        self.assertEqual((concept_class.n, len(concept_class)), (5, 10))
        self.assertIn(0b11010, concept_class)
        self.assertFalse(is_maximal_class(concept_class))


class VerifyCorpusTests(SimpleTestCase):
    def test_every_subclass_of_the_3_cube(self):
        report = verify_corpus(list(cube_subclasses(3)))
        self.assertEqual(len(report.classes), 255)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.notices, [])

    def test_chain_product(self):
        report = verify_corpus([("chain", chain_class(3))], pairs=True)
        pair = report.pairs[0]
        self.assertEqual((pair.left, pair.right), ("chain", "chain"))
        self.assertEqual(pair.vcd, 2)
        self.assertLessEqual(pair.rtd, 2)
        self.assertTrue(report.passed)

    def test_full_cubes_reach_equality(self):
        report = verify_corpus([("cube2", ConceptClass.full_cube(2)), ("cube3", ConceptClass.full_cube(3))])
        self.assertTrue(report.passed)
        for check in report.classes:
            self.assertTrue(check.checks["maximal"])
            self.assertEqual(check.rtd, check.vcd)

    def test_unnamed_classes_get_names(self):
        report = verify_corpus([chain_class(2), warmuth_class()], pairs=True)
        self.assertEqual([c.name for c in report.classes], ["class-0", "class-1"])
        self.assertEqual(len(report.pairs), 3)
        self.assertIsNone(report.classes[1].checks["maximal"])

    @override_settings(TEACHDIM_EXPERIMENT_MAX_SIZE=4)
    def test_infeasible_entries_are_skipped(self):
        report = verify_corpus([("chain", chain_class(3)), ("big", warmuth_class())], pairs=True)
        self.assertIsNotNone(report.classes[1].skipped)
        self.assertTrue(report.passed)
        self.assertTrue(any(notice.startswith("big") for notice in report.notices))
        self.assertTrue(all(pair.skipped for pair in report.pairs))


class ProductLawTests(SimpleTestCase):
    def random_factor(self, rng):
        n = 1 + rng.randbelow(5)
        return sample_class(n, 1 + rng.randbelow(min(8, 1 << n)), rng)

    def test_seeded_pairs(self):
        rng = SeededRNG(11)
        for _ in range(50):
            first, second = self.random_factor(rng), self.random_factor(rng)
            combined = product(first, second)
            self.assertEqual(vc_dimension(combined), vc_dimension(first) + vc_dimension(second))
            self.assertLessEqual(rtd(combined), rtd(first) + rtd(second))


class ParallelVerifyTests(SimpleTestCase):
    def test_threads_give_the_same_report(self):
        classes = [
            ("chain", chain_class(3)),
            ("singletons", singletons_class(4)),
            ("warmuth", warmuth_class()),
            ("cube", ConceptClass.full_cube(3)),
        ]
        sequential = verify_corpus(classes, pairs=True)
        parallel = verify_corpus(classes, pairs=True, threads=3)
        self.assertEqual(parallel.classes, sequential.classes)
        self.assertEqual(parallel.pairs, sequential.pairs)
        self.assertTrue(parallel.passed)
