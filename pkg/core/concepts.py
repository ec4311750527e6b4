# core/concepts.py
"""Concept-class kernel.

A concept over the instance space [n] = {1, ..., n} is stored as a single int whose
bit ``n - i`` carries the label of coordinate ``i``. With that layout the string
``"0110"`` and the int ``0b0110`` are the same concept, and sorting the ints sorts
the bitvectors lexicographically, which is the iteration order every class keeps.

Instance sets are masks in the same layout, so the projection of ``c`` on ``A`` is
determined by ``c & A``. Counting distinct masked values is the hot path of every
measure built on top of this module.
"""
import itertools
import logging
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache

from django.conf import settings

from .exceptions import CapacityError, InputError

logger = logging.getLogger(__name__)

# Concepts are plain ints; the alias documents intent in signatures.
Concept = int


def max_instance_space():
    return settings.TEACHDIM_MAX_N


def concept_from_string(text):
    if not text or set(text) - {"0", "1"}:
        raise InputError(f"'{text}' is not a nonempty string over {{0,1}}")
    return int(text, 2)


def concept_to_string(concept, n):
    return format(concept, f"0{n}b") if n else ""


@lru_cache(maxsize=8192)
def bit_positions(mask):
    """Bit positions of ``mask`` in increasing coordinate order (decreasing bit index)."""
    return tuple(p for p in range(mask.bit_length() - 1, -1, -1) if mask >> p & 1)


def extract(concept, mask):
    """Pack the bits of ``concept`` selected by ``mask`` into a compact pattern index."""
    out = 0
    for p in bit_positions(mask):
        out = out << 1 | (concept >> p & 1)
    return out


def deposit(bits, mask):
    """Inverse of :func:`extract`: spread a compact pattern over the positions of ``mask``."""
    positions = bit_positions(mask)
    width = len(positions)
    out = 0
    for j, p in enumerate(positions):
        if bits >> (width - 1 - j) & 1:
            out |= 1 << p
    return out


def pattern_count(concepts, mask):
    return len({c & mask for c in concepts})


@dataclass(frozen=True, slots=True)
class InstanceSet:
    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise InputError(f"instance set {self.mask:#b} is not a subset of [{self.n}]")

    @classmethod
    def from_coordinates(cls, n, coordinates):
        mask = 0
        for i in coordinates:
            if not 1 <= i <= n:
                raise InputError(f"coordinate {i} is outside [1, {n}]")
            mask |= 1 << (n - i)
        return cls(n, mask)

    @classmethod
    def full(cls, n):
        return cls(n, (1 << n) - 1)

    def coordinates(self):
        return tuple(self.n - p for p in bit_positions(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.coordinates())

    def __contains__(self, i):
        return 1 <= i <= self.n and bool(self.mask >> (self.n - i) & 1)

    def __str__(self):
        return "{" + ",".join(str(i) for i in self.coordinates()) + "}"


@dataclass(frozen=True, slots=True, order=True)
class Pattern:
    """Labels on a projection set, listed in increasing coordinate order."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0 or self.bits < 0 or self.bits >> self.length:
            raise InputError(f"pattern {self.bits:#b} does not fit in {self.length} labels")

    @classmethod
    def from_string(cls, text):
        if set(text) - {"0", "1"}:
            raise InputError(f"'{text}' is not a string over {{0,1}}")
        return cls(len(text), int(text, 2) if text else 0)

    def __len__(self):
        return self.length

    def __str__(self):
        return concept_to_string(self.bits, self.length)


@dataclass(frozen=True, slots=True)
class ConceptClass:
    """An immutable set of distinct concepts over [n], kept in sorted order."""

    n: int
    concepts: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"instance space size must be positive, got {self.n}")
        if self.n > max_instance_space():
            raise CapacityError(
                f"n={self.n} exceeds the representation ceiling {max_instance_space()} "
                f"(raise TEACHDIM_MAX_N to opt in)"
            )
        limit = 1 << self.n
        previous = -1
        for c in self.concepts:
            if c <= previous:
                raise InputError("concepts must be pairwise distinct and sorted")
            if c >= limit:
                raise InputError(f"concept {c:#b} has more than {self.n} labels")
            previous = c

    @classmethod
    def from_concepts(cls, n, concepts, allow_empty=False):
        ordered = sorted(concepts)
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise InputError(f"duplicate concept {concept_to_string(a, n)}")
        if not ordered and not allow_empty:
            raise InputError("a concept class needs at least one concept")
        return cls(n, tuple(ordered))

    @classmethod
    def from_strings(cls, strings):
        strings = list(strings)
        if not strings:
            raise InputError("a concept class needs at least one concept")
        n = len(strings[0])
        for text in strings:
            if len(text) != n:
                raise InputError(f"concept '{text}' has length {len(text)}, expected {n}")
        return cls.from_concepts(n, (concept_from_string(s) for s in strings))

    @classmethod
    def empty(cls, n):
        return cls(n, ())

    @classmethod
    def full_cube(cls, n):
        return cls(n, tuple(range(1 << n)))

    @property
    def universe(self):
        return (1 << self.n) - 1

    def __len__(self):
        return len(self.concepts)

    def __iter__(self):
        return iter(self.concepts)

    def __contains__(self, concept):
        i = bisect_left(self.concepts, concept)
        return i < len(self.concepts) and self.concepts[i] == concept

    def without(self, removed):
        removed = set(removed)
        return ConceptClass(self.n, tuple(c for c in self.concepts if c not in removed))

    def label(self, concept):
        return concept_to_string(concept, self.n)

    def to_strings(self):
        return [self.label(c) for c in self.concepts]

    def __str__(self):
        return "{" + ",".join(self.to_strings()) + "}"


def _check_instances(concept_class, instances):
    if instances.n != concept_class.n:
        raise InputError(
            f"instance set over [{instances.n}] used with a class over [{concept_class.n}]"
        )


def project(concept_class, instances):
    """The deduplicated projections ``{c|_A : c in C}`` as a frozenset of patterns."""
    _check_instances(concept_class, instances)
    width = len(instances)
    return frozenset(
        Pattern(width, extract(c, instances.mask)) for c in concept_class.concepts
    )


def restrict(concept_class, instances, pattern):
    """``C^{Y,b}``: the concepts labelling ``instances`` exactly as ``pattern`` does."""
    _check_instances(concept_class, instances)
    if len(pattern) != len(instances):
        raise InputError(
            f"pattern of length {len(pattern)} given for {len(instances)} instances"
        )
    mask = instances.mask
    target = deposit(pattern.bits, mask)
    return ConceptClass(concept_class.n, tuple(c for c in concept_class.concepts if c & mask == target))


def product(first, second):
    """Cartesian product: every concatenation ``c1 . c2`` over [n1 + n2]."""
    if not first.concepts or not second.concepts:
        raise InputError("the product needs two nonempty classes")
    n = first.n + second.n
    if n > max_instance_space():
        raise CapacityError(
            f"product over [{n}] exceeds the representation ceiling {max_instance_space()}"
        )
    shift = second.n
    return ConceptClass(n, tuple(a << shift | b for a in first.concepts for b in second.concepts))


def difference_set(concept, other, n):
    """Coordinates on which two concepts over [n] disagree."""
    limit = 1 << n
    for c in (concept, other):
        if not 0 <= c < limit:
            raise InputError(f"concept {c:#b} does not have length {n}")
    return InstanceSet(n, concept ^ other)


def _column_keys(concepts, n):
    # Per-coordinate invariants: ones count, then the sorted co-occurrence counts.
    keys = []
    for p in range(n):
        column = [c for c in concepts if c >> p & 1]
        pairs = sorted(sum(c >> q & 1 for c in column) for q in range(n) if q != p)
        keys.append((len(column), tuple(pairs)))
    return keys


def _orderings(keys):
    blocks = {}
    for p, key in enumerate(keys):
        blocks.setdefault(key, []).append(p)
    ordered = [blocks[key] for key in sorted(blocks)]
    for parts in itertools.product(*(itertools.permutations(block) for block in ordered)):
        yield [p for part in parts for p in part]


def _relabel(concepts, order):
    out = []
    for c in concepts:
        value = 0
        for j, source in enumerate(order):
            value |= (c >> source & 1) << j
        out.append(value)
    out.sort()
    return out


def _exact_canonical(concepts, n):
    # The minimum starts with 0, so only flips by a member concept can reach it.
    # Coordinates are only permuted within blocks of equal invariants; the blocks
    # move with the class, so the minimum is still an isomorphism invariant.
    best = None
    for flip in concepts:
        flipped = [c ^ flip for c in concepts]
        for order in _orderings(_column_keys(flipped, n)):
            candidate = _relabel(flipped, order)
            if best is None or candidate < best:
                best = candidate
    return tuple(best)


def _refined_canonical(concepts, n):
    # Not canonical: equal outputs imply isomorphic inputs, not the converse.
    size = len(concepts)
    flip = 0
    for p in range(n):
        if 2 * sum(c >> p & 1 for c in concepts) > size:
            flip |= 1 << p
    flipped = [c ^ flip for c in concepts]
    weight = {p: sum(c >> p & 1 for c in flipped) for p in range(n)}
    order = sorted(range(n), key=lambda p: (weight[p], p))
    return tuple(_relabel(flipped, order))


def canonical_form(concept_class):
    """Representative of the class under coordinate permutations and label flips.

    Exact up to ``TEACHDIM_EXACT_CANONICAL_MAX_N``; above it a greedy refinement is
    used which is only good enough to prune duplicates.
    """
    n = concept_class.n
    if not concept_class.concepts:
        return concept_class
    if n <= settings.TEACHDIM_EXACT_CANONICAL_MAX_N:
        concepts = _exact_canonical(concept_class.concepts, n)
    else:
        logger.debug(f"Using refined (non-canonical) form for n={n}")
        concepts = _refined_canonical(concept_class.concepts, n)
    return ConceptClass(n, concepts)
