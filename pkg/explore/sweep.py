# explore/sweep.py
"""Exhaustive checks of small-case claims over every nonempty subclass of {0,1}^n.

Each claim is an implication "class in some family => bound on a measure". The
family tests are cheap pattern counts and run first; the exact measures (RTD,
TD_min) are computed only for classes the filter admits, and at most once per class.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from tqdm import tqdm

from core.bounds import sauer_bound
from core.concepts import ConceptClass, canonical_form
from core.exceptions import InfeasibleError, ParameterError
from core.measures import max_patterns, rtd, td_min, vc_dimension

from .corpus import is_intersection_closed, quadratic_rtd_bound

logger = logging.getLogger(__name__)

SWEEP_MAX_N = 4
MONOTONE_MAX_N = 3
EXAMPLES_KEPT = 3


class _Measured:
    """Lazily computed measures of the subclass encoded by ``mask`` (bit c set iff c in C)."""

    def __init__(self, n, mask, rtd_cache):
        self.n = n
        self.mask = mask
        self.concepts = tuple(c for c in range(1 << n) if mask >> c & 1)
        self._rtd_cache = rtd_cache
        self._patterns = {}

    @cached_property
    def concept_class(self):
        return ConceptClass(self.n, self.concepts)

    def patterns(self, x):
        x = min(x, self.n)
        if x not in self._patterns:
            self._patterns[x] = max_patterns(self.concepts, self.n, x)
        return self._patterns[x]

    def is_xy(self, x, y):
        return len(self.concepts) <= y or self.patterns(x) <= y

    @cached_property
    def vcd(self):
        return vc_dimension(self.concept_class)

    @cached_property
    def rtd(self):
        return subclass_rtd(self.n, self.mask, self._rtd_cache)

    @cached_property
    def td_min(self):
        return td_min(self.concept_class)

    @cached_property
    def maximal(self):
        return len(self.concepts) == sauer_bound(self.n, self.vcd)

    @cached_property
    def intersection_closed(self):
        return is_intersection_closed(self.concept_class)


def subclass_rtd(n, mask, cache):
    if mask not in cache:
        concepts = tuple(c for c in range(1 << n) if mask >> c & 1)
        cache[mask] = rtd(ConceptClass(n, concepts))
    return cache[mask]


def _monotone(m):
    """RTD never grows when one concept is dropped; transitivity covers every subclass."""
    if len(m.concepts) < 2:
        return True
    return all(subclass_rtd(m.n, m.mask & ~(1 << c), m._rtd_cache) <= m.rtd for c in m.concepts)


@dataclass(frozen=True)
class Claim:
    name: str
    description: str
    applies: object
    holds: object
    # Claims with an ``attains`` predicate also require at least one applicable class to satisfy it.
    attains: object = None
    max_n: int = SWEEP_MAX_N


CLAIMS = {
    claim.name: claim
    for claim in (
        Claim("f23", "every (2,3)-class has TD_min <= 1",
              lambda m: m.is_xy(2, 3), lambda m: m.td_min <= 1),
        Claim("f36", "every (3,6)-class has TD_min <= 3",
              lambda m: m.is_xy(3, 6), lambda m: m.td_min <= 3),
        Claim("rtd35", "every (3,5)-class has RTD <= 2, and some has RTD = 2",
              lambda m: m.is_xy(3, 5), lambda m: m.rtd <= 2, attains=lambda m: m.rtd == 2),
        Claim("rtd34", "every (3,4)-class has RTD <= 2",
              lambda m: m.is_xy(3, 4), lambda m: m.rtd <= 2),
        Claim("vcd2", "every class of VC dimension 2 has RTD <= 6",
              lambda m: m.vcd == 2, lambda m: m.rtd <= 6),
        Claim("sauer", "pattern counts respect Sauer's lemma",
              lambda m: True,
              lambda m: all(m.patterns(x) <= sauer_bound(x, m.vcd) for x in range(1, m.n + 1))),
        Claim("maximal", "maximal classes have RTD = VCD",
              lambda m: m.maximal, lambda m: m.rtd == m.vcd),
        Claim("intersection_closed", "intersection-closed classes have RTD <= VCD",
              lambda m: m.intersection_closed, lambda m: m.rtd <= m.vcd),
        Claim("quadratic_bound", "RTD <= 39.3752 d^2 - 3.6330 d",
              lambda m: True, lambda m: m.rtd <= quadratic_rtd_bound(m.vcd)),
        Claim("subclass_monotone", "RTD(C') <= RTD(C) for every subclass C'",
              lambda m: True, _monotone, max_n=MONOTONE_MAX_N),
    )
}

HEAVY_N_CLAIMS = ("f36", "rtd35", "rtd34", "vcd2")


def default_claims(n):
    if n <= MONOTONE_MAX_N:
        return list(CLAIMS)
    return list(HEAVY_N_CLAIMS)


@dataclass
class ClaimTally:
    name: str
    description: str
    considered: int = 0
    violations: int = 0
    attained: int | None = None
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self):
        return self.violations == 0 and (self.attained is None or self.attained > 0)


@dataclass
class SweepReport:
    n: int
    dedup: bool
    enumerated: int = 0
    checked: int = 0
    tallies: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(tally.passed for tally in self.tallies.values())


def _resolve_claims(n, claims):
    names = default_claims(n) if not claims else list(claims)
    unknown = [name for name in names if name not in CLAIMS]
    if unknown:
        raise ParameterError(f"unknown claims {unknown}; choose from {sorted(CLAIMS)}")
    too_large = [f"{name} (n <= {CLAIMS[name].max_n})" for name in names if n > CLAIMS[name].max_n]
    if too_large:
        raise InfeasibleError(f"claims are only checked on small cubes: {', '.join(too_large)}")
    return [CLAIMS[name] for name in names]


def sweep_cube(n, claims=None, dedup=False, progress=False):
    """Tally every requested claim over all nonempty subclasses of the n-cube.

    With ``dedup`` only one class per isomorphism type (coordinate permutations and
    label flips) is checked; all the claims are invariant under both.
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if n > SWEEP_MAX_N:
        raise InfeasibleError(f"exhaustive sweeps enumerate 2^(2^n) classes; n <= {SWEEP_MAX_N} only")
    selected = _resolve_claims(n, claims)
    report = SweepReport(n=n, dedup=dedup)
    for claim in selected:
        report.tallies[claim.name] = ClaimTally(
            claim.name, claim.description, attained=0 if claim.attains else None
        )

    rtd_cache = {}
    seen = set()
    total = (1 << (1 << n)) - 1
    logger.info(f"Sweeping {total} subclasses of the {n}-cube for {[c.name for c in selected]}")
    for mask in tqdm(range(1, total + 1), disable=not progress, desc=f"n={n}"):
        report.enumerated += 1
        measured = _Measured(n, mask, rtd_cache)
        if dedup:
            key = canonical_form(measured.concept_class).concepts
            if key in seen:
                continue
            seen.add(key)
        report.checked += 1
        for claim in selected:
            if not claim.applies(measured):
                continue
            tally = report.tallies[claim.name]
            tally.considered += 1
            if not claim.holds(measured):
                tally.violations += 1
                if len(tally.counterexamples) < EXAMPLES_KEPT:
                    tally.counterexamples.append(measured.concept_class)
            if claim.attains and claim.attains(measured):
                tally.attained += 1

    logger.info(
        f"Sweep of n={n} checked {report.checked} of {report.enumerated} classes: "
        f"{'pass' if report.passed else 'FAIL'}"
    )
    return report
