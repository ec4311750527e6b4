import itertools

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from core.concepts import (
    ConceptClass,
    InstanceSet,
    Pattern,
    canonical_form,
    concept_from_string,
    concept_to_string,
    deposit,
    difference_set,
    extract,
    product,
    project,
    restrict,
)
from core.exceptions import CapacityError, InputError
from explore.experiments import sample_class
from explore.rng import SeededRNG

from .oracles import concept_classes, seeded_classes

CHAIN = ConceptClass.from_strings(["000", "001", "011", "111"])
CUBE2 = ConceptClass.full_cube(2)


class ConceptLayoutTests(SimpleTestCase):
    def test_strings_and_ints_share_layout(self):
        self.assertEqual(concept_from_string("0110"), 0b0110)
        self.assertEqual(concept_to_string(0b0110, 4), "0110")

    def test_rejects_non_binary_strings(self):
        with self.assertRaises(InputError):
            concept_from_string("01a")

    def test_extract_and_deposit_follow_coordinate_order(self):
        mask = InstanceSet.from_coordinates(4, [1, 3]).mask
        self.assertEqual(mask, 0b1010)
        self.assertEqual(extract(0b1000, mask), 0b10)
        self.assertEqual(deposit(0b01, mask), 0b0010)

    def test_instance_set_coordinates(self):
        instances = InstanceSet.from_coordinates(4, [3, 1])
        self.assertEqual(instances.coordinates(), (1, 3))
        self.assertEqual(str(instances), "{1,3}")
        self.assertIn(3, instances)
        self.assertNotIn(2, instances)
        self.assertEqual(len(instances), 2)

    def test_coordinate_out_of_range(self):
        with self.assertRaises(InputError):
            InstanceSet.from_coordinates(3, [4])


class ConceptClassTests(SimpleTestCase):
    def test_concepts_are_sorted(self):
        concept_class = ConceptClass.from_strings(["11", "00", "10"])
        self.assertEqual(concept_class.concepts, (0b00, 0b10, 0b11))
        self.assertEqual(concept_class.to_strings(), ["00", "10", "11"])

    def test_duplicates_rejected(self):
        with self.assertRaises(InputError):
            ConceptClass.from_strings(["01", "01"])

    def test_length_mismatch_rejected(self):
        with self.assertRaises(InputError):
            ConceptClass.from_strings(["01", "011"])

    def test_unsorted_tuple_rejected(self):
        with self.assertRaises(InputError):
            ConceptClass(2, (3, 1))

    @override_settings(TEACHDIM_MAX_N=4)
    def test_representation_ceiling(self):
        with self.assertRaises(CapacityError):
            ConceptClass(5, ())

    def test_membership(self):
        self.assertIn(0b011, CHAIN)
        self.assertNotIn(0b010, CHAIN)


class ProjectionTests(SimpleTestCase):
    def test_project_single_coordinate(self):
        patterns = project(CHAIN, InstanceSet.from_coordinates(3, [3]))
        self.assertEqual(patterns, {Pattern(1, 0), Pattern(1, 1)})

    def test_project_on_empty_set(self):
        self.assertEqual(project(CHAIN, InstanceSet(3)), {Pattern(0)})

    def test_project_full_cube(self):
        self.assertEqual(len(project(CUBE2, InstanceSet.full(2))), 4)

    def test_project_mixed_spaces(self):
        with self.assertRaises(InputError):
            project(CHAIN, InstanceSet.full(2))

    def test_restrict(self):
        restricted = restrict(CHAIN, InstanceSet.from_coordinates(3, [1]), Pattern.from_string("0"))
        self.assertEqual(restricted.to_strings(), ["000", "001", "011"])

    def test_restrict_to_nothing(self):
        small = ConceptClass.from_strings(["000", "001"])
        restricted = restrict(small, InstanceSet.from_coordinates(3, [1]), Pattern.from_string("1"))
        self.assertEqual(len(restricted), 0)

    def test_restrict_identity(self):
        self.assertEqual(restrict(CHAIN, InstanceSet(3), Pattern(0)), CHAIN)

    def test_restrict_length_mismatch(self):
        with self.assertRaises(InputError):
            restrict(CHAIN, InstanceSet.from_coordinates(3, [1, 2]), Pattern.from_string("1"))


class ProductTests(SimpleTestCase):
    def test_bits_multiply_to_cube(self):
        bit = ConceptClass.from_strings(["0", "1"])
        self.assertEqual(product(bit, bit), CUBE2)

    def test_singleton_factor_prefixes(self):
        single = ConceptClass.from_strings(["10"])
        combined = product(single, CHAIN)
        self.assertEqual(combined.to_strings(), ["10" + s for s in CHAIN.to_strings()])

    def test_chain_squared_size(self):
        self.assertEqual(len(product(CHAIN, CHAIN)), 16)

    @override_settings(TEACHDIM_MAX_N=5)
    def test_product_over_ceiling(self):
        with self.assertRaises(CapacityError):
            product(CHAIN, CHAIN)


class DifferenceSetTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(difference_set(0b000, 0b111, 3).coordinates(), (1, 2, 3))
        self.assertEqual(difference_set(0b101, 0b101, 3).coordinates(), ())
        self.assertEqual(difference_set(0b0110, 0b0101, 4).coordinates(), (3, 4))

    def test_length_mismatch(self):
        with self.assertRaises(InputError):
            difference_set(0b1000, 0b1, 3)


class CanonicalFormTests(SimpleTestCase):
    def test_permutation_invariance(self):
        first = ConceptClass.from_strings(["001", "010", "111"])
        swapped = ConceptClass.from_strings(["001", "100", "111"])
        self.assertEqual(canonical_form(first), canonical_form(swapped))

    def test_flip_invariance(self):
        first = ConceptClass.from_strings(["000", "011", "101"])
        flipped = ConceptClass.from_strings(["100", "111", "001"])
        self.assertEqual(canonical_form(first), canonical_form(flipped))

    def test_distinguishes_non_isomorphic(self):
        near = ConceptClass.from_strings(["000", "001"])
        far = ConceptClass.from_strings(["000", "011"])
        self.assertNotEqual(canonical_form(near), canonical_form(far))

    @given(concept_classes(max_n=4, max_size=8), st.data())
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_invariant_under_flips_and_idempotent(self, concept_class, data):
        flip = data.draw(st.integers(min_value=0, max_value=concept_class.universe))
        flipped = ConceptClass.from_concepts(concept_class.n, [c ^ flip for c in concept_class])
        form = canonical_form(concept_class)
        self.assertEqual(form, canonical_form(flipped))
        self.assertEqual(canonical_form(form), form)
        self.assertEqual(form.concepts[0], 0)


def _relabel(concept_class, order, flip):
    """Apply a label flip, then send bit ``order[j]`` to bit ``j``."""
    out = []
    for c in concept_class.concepts:
        c ^= flip
        out.append(sum((c >> source & 1) << j for j, source in enumerate(order)))
    return ConceptClass.from_concepts(concept_class.n, out)


class ProjectionPropertyTests(SimpleTestCase):
    @given(concept_classes(max_n=5, max_size=12), st.data())
    @hypothesis_settings(max_examples=80, deadline=None)
    def test_projection_is_monotone(self, concept_class, data):
        larger = data.draw(st.integers(min_value=0, max_value=concept_class.universe))
        smaller = larger & data.draw(st.integers(min_value=0, max_value=concept_class.universe))
        n = concept_class.n
        self.assertLessEqual(
            len(project(concept_class, InstanceSet(n, smaller))),
            len(project(concept_class, InstanceSet(n, larger))),
        )

    @given(concept_classes(max_n=5, max_size=12), st.data())
    @hypothesis_settings(max_examples=80, deadline=None)
    def test_restrictions_partition_the_class(self, concept_class, data):
        instances = InstanceSet(
            concept_class.n, data.draw(st.integers(min_value=0, max_value=concept_class.universe))
        )
        parts = [restrict(concept_class, instances, b) for b in project(concept_class, instances)]
        self.assertTrue(all(len(part) > 0 for part in parts))
        self.assertEqual(sum(len(part) for part in parts), len(concept_class))
        members = set()
        for part in parts:
            self.assertFalse(members & set(part.concepts))
            members |= set(part.concepts)
        self.assertEqual(members, set(concept_class.concepts))


class CanonicalFormSymmetryTests(SimpleTestCase):
    def test_every_symmetry_for_small_cubes(self):
        for concept_class in seeded_classes(SeededRNG(40), 25, max_n=4, max_size=8):
            n = concept_class.n
            form = canonical_form(concept_class)
            self.assertEqual(canonical_form(form), form)
            for order in itertools.permutations(range(n)):
                for flip in range(1 << n):
                    self.assertEqual(canonical_form(_relabel(concept_class, order, flip)), form)

    def test_square_has_five_orbits(self):
        forms = {
            canonical_form(ConceptClass(2, tuple(c for c in range(4) if mask >> c & 1)))
            for mask in range(1, 16)
        }
        self.assertEqual(len(forms), 5)

    def test_three_cube_has_twenty_one_orbits(self):
        forms = {
            canonical_form(ConceptClass(3, tuple(c for c in range(8) if mask >> c & 1)))
            for mask in range(1, 256)
        }
        self.assertEqual(len(forms), 21)

    def test_diagonal_and_edge_differ(self):
        diagonal = ConceptClass.from_strings(["00", "11"])
        edge = ConceptClass.from_strings(["00", "01"])
        self.assertNotEqual(canonical_form(diagonal), canonical_form(edge))

    @override_settings(TEACHDIM_EXACT_CANONICAL_MAX_N=8)
    def test_eight_cube_search_sized_class(self):
        concept_class = sample_class(8, 12, SeededRNG(3))
        form = canonical_form(concept_class)
        self.assertEqual(canonical_form(_relabel(concept_class, (7, 6, 5, 4, 3, 2, 1, 0), 0b10110001)), form)
