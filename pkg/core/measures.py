# core/measures.py
"""Shattering, VC dimension, teaching dimension and recursive teaching plans."""
import itertools
import logging
from dataclasses import dataclass

from .concepts import InstanceSet, Pattern, extract, pattern_count
from .exceptions import DomainError, InputError
from .hitting import min_hitting_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class TeachingSet:
    instances: InstanceSet
    labels: Pattern

    def __len__(self):
        return len(self.instances)

    def distinguishes(self, concept, concept_class):
        return is_teaching_set(concept, concept_class, self.instances)


@dataclass(frozen=True, slots=True)
class PlanLevel:
    removed: tuple
    td: int


@dataclass(frozen=True, slots=True)
class TeachingPlan:
    n: int
    levels: tuple

    @property
    def rtd(self):
        return max(level.td for level in self.levels)

    def level_of(self, concept):
        for index, level in enumerate(self.levels):
            if concept in level.removed:
                return index
        raise InputError(f"concept {concept:#b} does not appear in the plan")


@dataclass(frozen=True, slots=True)
class PatternProfile:
    """Maximum number of projection patterns for each projection size."""

    n: int
    size: int
    max_patterns: dict

    def patterns_at(self, x):
        if x < 1:
            raise InputError(f"projection size must be positive, got {x}")
        x = min(x, self.n)
        if x not in self.max_patterns:
            raise InputError(f"profile does not cover projection size {x}")
        return self.max_patterns[x]

    def is_xy_class(self, x, y):
        return self.patterns_at(x) <= y


def _require_nonempty(concept_class):
    if not concept_class.concepts:
        raise DomainError("measures are undefined on the empty class")


def _check_instances(concept_class, instances):
    if instances.n != concept_class.n:
        raise InputError(
            f"instance set over [{instances.n}] used with a class over [{concept_class.n}]"
        )


def is_shattered(concept_class, instances):
    _check_instances(concept_class, instances)
    if not concept_class.concepts:
        return False
    return pattern_count(concept_class.concepts, instances.mask) == 1 << len(instances)


def _shattered_levels(concepts, n):
    """Yield the shattered masks of each size, stopping at the first empty level.

    Sets are grown by coordinates after their last one, which is sound because every
    subset of a shattered set is shattered.
    """
    level = [0]
    size = 0
    while level:
        yield size, level
        size += 1
        if 1 << size > len(concepts):
            return
        grown = []
        for mask in level:
            start = (mask & -mask).bit_length() - 1 if mask else n
            for p in range(start):
                candidate = mask | 1 << p
                if pattern_count(concepts, candidate) == 1 << size:
                    grown.append(candidate)
        level = grown


def shattered_witness(concept_class):
    """A largest shattered set (the first one found at the top level)."""
    _require_nonempty(concept_class)
    witness = 0
    for _, level in _shattered_levels(concept_class.concepts, concept_class.n):
        witness = level[0]
    return InstanceSet(concept_class.n, witness)


def vc_dimension(concept_class):
    _require_nonempty(concept_class)
    dimension = 0
    for size, _ in _shattered_levels(concept_class.concepts, concept_class.n):
        dimension = size
    return dimension


def max_patterns(concepts, n, x):
    """Largest number of patterns on any set of exactly ``min(x, n)`` coordinates."""
    x = min(x, n)
    ceiling = min(len(concepts), 1 << x)
    best = 0
    for positions in itertools.combinations(range(n), x):
        mask = 0
        for p in positions:
            mask |= 1 << p
        best = max(best, pattern_count(concepts, mask))
        if best == ceiling:
            break
    return best


def pattern_profile(concept_class, x_max):
    if x_max < 1:
        raise InputError(f"x_max must be at least 1, got {x_max}")
    concepts, n = concept_class.concepts, concept_class.n
    profile = {x: max_patterns(concepts, n, x) for x in range(1, min(x_max, n) + 1)}
    return PatternProfile(n=n, size=len(concepts), max_patterns=profile)


def is_xy_class(concept_class, x, y):
    """Definition of an (x,y)-class; sets of size ``min(x, n)`` suffice by monotonicity."""
    if x < 1 or y < 1:
        raise InputError(f"(x,y) must be positive, got ({x},{y})")
    concepts, n = concept_class.concepts, concept_class.n
    if len(concepts) <= y:
        return True
    for positions in itertools.combinations(range(n), min(x, n)):
        mask = 0
        for p in positions:
            mask |= 1 << p
        if pattern_count(concepts, mask) > y:
            return False
    return True


def is_teaching_set(concept, concept_class, instances):
    _check_instances(concept_class, instances)
    mask = instances.mask
    return all((concept ^ other) & mask for other in concept_class.concepts if other != concept)


def _teaching_mask(concept, concepts, limit=None):
    return min_hitting_set([concept ^ other for other in concepts if other != concept], limit)


def teaching_dimension(concept, concept_class):
    """A minimum teaching set for ``concept`` within ``concept_class``."""
    if concept not in concept_class:
        raise InputError(f"concept {concept_class.label(concept)} is not in the class")
    mask = _teaching_mask(concept, concept_class.concepts)
    return TeachingSet(
        instances=InstanceSet(concept_class.n, mask),
        labels=Pattern(mask.bit_count(), extract(concept, mask)),
    )


def teaching_dimensions(concept_class):
    """Teaching dimension of every concept, in class order."""
    _require_nonempty(concept_class)
    concepts = concept_class.concepts
    return [_teaching_mask(c, concepts).bit_count() for c in concepts]


def td_min(concept_class):
    _require_nonempty(concept_class)
    _, best = _easiest_concepts(concept_class.concepts)
    return best


def td_max(concept_class):
    return max(teaching_dimensions(concept_class))


def _easiest_concepts(concepts):
    """Concepts attaining the smallest teaching dimension, and that dimension.

    Each candidate is solved with the running minimum as a cutoff, so harder
    concepts are abandoned as soon as they cannot tie.
    """
    best = None
    easiest = []
    for concept in concepts:
        mask = _teaching_mask(concept, concepts, limit=best)
        if mask is None:
            continue
        size = mask.bit_count()
        if best is None or size < best:
            best, easiest = size, [concept]
        else:
            easiest.append(concept)
    return easiest, best


def recursive_teaching_plan(concept_class):
    """Repeatedly remove every concept whose teaching dimension is the current minimum."""
    _require_nonempty(concept_class)
    remaining = concept_class.concepts
    levels = []
    while remaining:
        easiest, best = _easiest_concepts(remaining)
        levels.append(PlanLevel(removed=tuple(easiest), td=best))
        removed = set(easiest)
        remaining = tuple(c for c in remaining if c not in removed)
        logger.debug(f"Plan level {len(levels) - 1}: removed {len(easiest)} concepts at TD {best}")
    return TeachingPlan(n=concept_class.n, levels=tuple(levels))


def rtd(concept_class):
    return recursive_teaching_plan(concept_class).rtd
