# explore/search.py
"""Seeded hill climbing for classes whose RTD is large relative to their VCD."""
import logging
import time
from dataclasses import dataclass

from core.bounds import sauer_bound
from core.concepts import ConceptClass, canonical_form
from core.exceptions import InvariantError, ParameterError
from core.measures import rtd, teaching_dimensions, vc_dimension

from .experiments import check_feasible, sample_class
from .rng import SeededRNG

logger = logging.getLogger(__name__)

PATIENCE_FLOOR = 50
PATIENCE_CEILING = 2000


@dataclass
class SearchResult:
    best_class: ConceptClass
    rtd: int
    vcd: int
    ratio: float
    evaluations: int
    seed: int
    restarts: int = 0
    within_cap: bool = True


@dataclass(frozen=True)
class _Scored:
    concept_class: ConceptClass
    vcd: int
    rtd: int
    score: tuple


def _evaluate(concept_class, vcd_cap):
    vcd = vc_dimension(concept_class)
    value = rtd(concept_class)
    td_sum = sum(teaching_dimensions(concept_class))
    # Classes over the cap rank below every feasible one, closest to the cap first.
    if vcd <= vcd_cap:
        score = (1, value, -len(concept_class), td_sum)
    else:
        score = (0, -vcd, value, td_sum)
    return _Scored(concept_class, vcd, value, score)


def default_patience(n, size):
    return min(PATIENCE_CEILING, max(PATIENCE_FLOOR, size * ((1 << n) - size) // 4))


def _neighbour(concept_class, rng):
    """Swap one member for one concept outside the class."""
    n = concept_class.n
    members = set(concept_class.concepts)
    out = rng.choice(concept_class.concepts)
    while True:
        incoming = rng.randbelow(1 << n)
        if incoming not in members:
            break
    members.discard(out)
    members.add(incoming)
    return ConceptClass(n, tuple(sorted(members)))


def _certify(scored, seed, evaluations, restarts, vcd_cap):
    best = scored.concept_class
    vcd, value = vc_dimension(best), rtd(best)
    if (vcd, value) != (scored.vcd, scored.rtd):
        raise InvariantError(
            f"search reported RTD {scored.rtd}, VCD {scored.vcd} but recomputation gives {value}, {vcd}"
        )
    return SearchResult(
        best_class=best,
        rtd=value,
        vcd=vcd,
        ratio=value / vcd if vcd else 0.0,
        evaluations=evaluations,
        seed=seed,
        restarts=restarts,
        within_cap=vcd <= vcd_cap,
    )


def extremal_search(n, size, vcd_cap, budget, seed, max_evaluations=None, patience=None):
    """Maximize RTD over classes of ``size`` concepts on [n] with VCD at most ``vcd_cap``.

    Moves swap one concept for one outside concept; equal-scoring moves are taken
    with probability 1/2. Neighbours isomorphic to an already evaluated class are
    skipped. After ``patience`` proposals without improving the best class the
    climb restarts from a fresh random class. The search stops when ``budget``
    seconds have elapsed or ``max_evaluations`` classes have been scored, and
    always returns the best class seen, with its measures recomputed.
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if not 1 <= size <= 1 << n:
        raise ParameterError(f"size={size} must lie in [1, 2^{n}]")
    if vcd_cap < 1:
        raise ParameterError(f"vcd_cap must be at least 1, got {vcd_cap}")
    if size > sauer_bound(n, vcd_cap):
        raise ParameterError(
            f"no class of {size} concepts on [{n}] has VCD <= {vcd_cap} "
            f"(Sauer bound {sauer_bound(n, vcd_cap)})"
        )
    if budget < 0:
        raise ParameterError(f"budget must be nonnegative, got {budget}")
    check_feasible(n, size)
    patience = default_patience(n, size) if patience is None else patience

    rng = SeededRNG(seed)
    current = _evaluate(sample_class(n, size, rng), vcd_cap)
    best = current
    evaluations = 1
    restarts = 0
    if budget == 0 or max_evaluations == 1 or size == 1 << n:
        return _certify(best, seed, evaluations, restarts, vcd_cap)

    seen = {canonical_form(current.concept_class).concepts}
    deadline = time.monotonic() + budget
    stale = 0
    logger.info(f"Searching n={n}, size={size}, vcd_cap={vcd_cap} for {budget}s from seed {seed}")
    while time.monotonic() < deadline:
        if max_evaluations is not None and evaluations >= max_evaluations:
            break
        if stale >= patience:
            restarts += 1
            stale = 0
            current = _evaluate(sample_class(n, size, rng.fork()), vcd_cap)
            evaluations += 1
            seen.add(canonical_form(current.concept_class).concepts)
            logger.debug(f"Restart {restarts}: best RTD {best.rtd}, VCD {best.vcd}")
            if current.score > best.score:
                best = current
            continue

        candidate = _neighbour(current.concept_class, rng)
        key = canonical_form(candidate).concepts
        stale += 1
        if key in seen:
            continue
        if time.monotonic() >= deadline:
            break
        seen.add(key)
        scored = _evaluate(candidate, vcd_cap)
        evaluations += 1
        if scored.score > current.score or (scored.score == current.score and rng.random() < 0.5):
            current = scored
        if scored.score > best.score:
            best = scored
            stale = 0

    result = _certify(best, seed, evaluations, restarts, vcd_cap)
    logger.info(
        f"Search seed {seed} done: RTD {result.rtd}, VCD {result.vcd} "
        f"after {evaluations} evaluations and {restarts} restarts"
    )
    return result
