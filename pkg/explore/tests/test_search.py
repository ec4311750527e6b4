import time

from django.test import SimpleTestCase, tag

from core.concepts import ConceptClass
from core.exceptions import ParameterError
from core.measures import rtd, vc_dimension
from explore.experiments import random_class
from explore.search import default_patience, extremal_search


class ExtremalSearchTests(SimpleTestCase):
    def test_zero_budget_returns_seed_class(self):
        result = extremal_search(5, 10, 2, 0, seed=4)
        self.assertEqual(result.best_class, random_class(5, 10, 4))
        self.assertEqual(result.evaluations, 1)
        self.assertEqual(result.rtd, rtd(result.best_class))
        self.assertEqual(result.vcd, vc_dimension(result.best_class))

    def test_impossible_caps(self):
        with self.assertRaises(ParameterError):
            extremal_search(3, 8, 1, 1, seed=0)
        with self.assertRaises(ParameterError):
            extremal_search(3, 4, 0, 1, seed=0)
        with self.assertRaises(ParameterError):
            extremal_search(3, 9, 3, 1, seed=0)

    def test_cap_at_n_gives_cube(self):
        result = extremal_search(3, 8, 3, 5, seed=0)
        self.assertEqual(result.best_class, ConceptClass.full_cube(3))
        self.assertEqual((result.rtd, result.vcd, result.ratio), (3, 3, 1.0))

    def test_singleton_ratio(self):
        result = extremal_search(3, 1, 1, 0, seed=0)
        self.assertEqual((result.vcd, result.ratio), (0, 0.0))

    def test_evaluation_cap_is_reproducible(self):
        first = extremal_search(4, 6, 2, 300, seed=2, max_evaluations=40)
        second = extremal_search(4, 6, 2, 300, seed=2, max_evaluations=40)
        self.assertEqual(first, second)
        self.assertEqual(first.evaluations, 40)
        self.assertEqual(first.rtd, rtd(first.best_class))
        self.assertLessEqual(first.vcd, 2)

    def test_eight_cube_keeps_its_budget(self):
        started = time.monotonic()
        result = extremal_search(8, 12, 2, 3, seed=1)
        self.assertLess(time.monotonic() - started, 5)
        self.assertGreater(result.evaluations, 20)

    def test_default_patience_bounds(self):
        self.assertEqual(default_patience(3, 4), 50)
        self.assertEqual(default_patience(10, 300), 2000)

    @tag("slow")
    def test_ensemble_finds_ratio_three_halves(self):
        found = []
        for seed in range(32):
            result = extremal_search(5, 10, 2, 8, seed=seed, max_evaluations=3000)
            if result.rtd == 3 and result.vcd == 2:
                found.append(result)
        self.assertTrue(found)
        for result in found:
            self.assertEqual(rtd(result.best_class), 3)
            self.assertEqual(vc_dimension(result.best_class), 2)
