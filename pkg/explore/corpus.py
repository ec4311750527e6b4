# explore/corpus.py
"""Structural predicates and bound verification over collections of classes."""
import logging
from dataclasses import dataclass, field

from django.conf import settings

from core.bounds import LINEAR_COEFFICIENT, QUADRATIC_COEFFICIENT, sauer_bound
from core.concepts import product
from core.exceptions import CapacityError, DomainError
from core.measures import max_patterns, rtd, vc_dimension

logger = logging.getLogger(__name__)


def is_maximal_class(concept_class):
    """The class is as large as Sauer's lemma allows for its VC dimension."""
    return len(concept_class) == sauer_bound(concept_class.n, vc_dimension(concept_class))


def is_intersection_closed(concept_class):
    concepts = concept_class.concepts
    if not concepts:
        raise DomainError("intersection closure is undefined on the empty class")
    return all(
        a & b in concept_class
        for i, a in enumerate(concepts)
        for b in concepts[i + 1:]
    )


def quadratic_rtd_bound(d):
    return QUADRATIC_COEFFICIENT * d * d + LINEAR_COEFFICIENT * d if d else 0.0


def satisfies_sauer(concept_class, vcd=None):
    vcd = vc_dimension(concept_class) if vcd is None else vcd
    concepts, n = concept_class.concepts, concept_class.n
    return all(max_patterns(concepts, n, x) <= sauer_bound(x, vcd) for x in range(1, n + 1))


@dataclass
class ClassCheck:
    name: str
    n: int
    size: int
    vcd: int | None = None
    rtd: int | None = None
    # None marks a check that does not apply to the class.
    checks: dict = field(default_factory=dict)
    skipped: str | None = None

    @property
    def passed(self):
        return all(result is not False for result in self.checks.values())


@dataclass
class PairCheck:
    left: str
    right: str
    rtd: int | None = None
    vcd: int | None = None
    rtd_subadditive: bool | None = None
    vcd_additive: bool | None = None
    skipped: str | None = None

    @property
    def passed(self):
        return self.rtd_subadditive is not False and self.vcd_additive is not False


@dataclass
class CorpusReport:
    classes: list = field(default_factory=list)
    pairs: list = field(default_factory=list)
    notices: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.classes) and all(p.passed for p in self.pairs)

    @property
    def failures(self):
        failed = [c.name for c in self.classes if not c.passed]
        failed += [f"{p.left} x {p.right}" for p in self.pairs if not p.passed]
        return failed


def _infeasible(concept_class):
    max_n = settings.TEACHDIM_EXPERIMENT_MAX_N
    max_size = settings.TEACHDIM_EXPERIMENT_MAX_SIZE
    if concept_class.n > max_n or len(concept_class) > max_size:
        return (
            f"n={concept_class.n}, size={len(concept_class)} is beyond exact-measure "
            f"feasibility (n <= {max_n}, size <= {max_size})"
        )
    return None


def check_class(name, concept_class):
    check = ClassCheck(name=name, n=concept_class.n, size=len(concept_class))
    reason = _infeasible(concept_class)
    if reason:
        check.skipped = reason
        return check
    vcd = vc_dimension(concept_class)
    value = rtd(concept_class)
    check.vcd, check.rtd = vcd, value
    maximal = len(concept_class) == sauer_bound(concept_class.n, vcd)
    check.checks = {
        "quadratic_bound": value <= quadratic_rtd_bound(vcd),
        "maximal": value == vcd if maximal else None,
        "intersection_closed": value <= vcd if is_intersection_closed(concept_class) else None,
        "sauer": satisfies_sauer(concept_class, vcd),
    }
    return check


def check_pair(left, right, measured):
    (left_name, first), (right_name, second) = left, right
    pair = PairCheck(left=left_name, right=right_name)
    if measured[left_name].skipped or measured[right_name].skipped:
        pair.skipped = "a factor was skipped"
        return pair
    try:
        combined = product(first, second)
    except CapacityError as e:
        pair.skipped = str(e)
        return pair
    reason = _infeasible(combined)
    if reason:
        pair.skipped = reason
        return pair
    pair.vcd = vc_dimension(combined)
    pair.rtd = rtd(combined)
    pair.vcd_additive = pair.vcd == measured[left_name].vcd + measured[right_name].vcd
    pair.rtd_subadditive = pair.rtd <= measured[left_name].rtd + measured[right_name].rtd
    return pair


def _check_classes(named, threads):
    if threads <= 1 or len(named) < 2:
        return [check_class(name, concept_class) for name, concept_class in named]
    from celery import group

    from .experiments import split_chunks
    from .tasks import check_class_chunk

    entries = [[name, c.n, list(c.concepts)] for name, c in named]
    job = group(check_class_chunk.s(chunk) for chunk in split_chunks(entries, threads))
    rows = [row for part in job.apply_async().get() for row in part]
    by_name = {row["name"]: ClassCheck(**row) for row in rows}
    return [by_name[name] for name, _ in named]


def verify_corpus(classes, pairs=False, threads=1):
    """Check the known bounds and structural facts on every class and, with ``pairs``, every product.

    ``classes`` holds concept classes or ``(name, class)`` tuples. Classes beyond
    the exact-measure feasibility settings are skipped and listed in the notices.
    """
    named = []
    for index, entry in enumerate(classes):
        if isinstance(entry, tuple):
            named.append(entry)
        else:
            named.append((f"class-{index}", entry))

    report = CorpusReport()
    measured = {}
    for check in _check_classes(named, threads):
        name = check.name
        measured[name] = check
        report.classes.append(check)
        if check.skipped:
            report.notices.append(f"{name}: skipped, {check.skipped}")
        elif not check.passed:
            logger.warning(f"{name} fails {[k for k, v in check.checks.items() if v is False]}")

    if pairs:
        for i, left in enumerate(named):
            for right in named[i:]:
                pair = check_pair(left, right, measured)
                report.pairs.append(pair)
                if pair.skipped:
                    report.notices.append(f"{pair.left} x {pair.right}: skipped, {pair.skipped}")

    logger.info(
        f"Verified {len(report.classes)} classes and {len(report.pairs)} products: "
        f"{'pass' if report.passed else 'FAIL'}"
    )
    return report
