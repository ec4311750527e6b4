# explore/experiments.py
"""Random concept classes and the RTD-versus-VCD experiment."""
import logging
from collections import Counter
from dataclasses import dataclass

from django.conf import settings

from core.concepts import ConceptClass
from core.exceptions import InfeasibleError, ParameterError
from core.measures import rtd, vc_dimension

from .rng import SeededRNG

logger = logging.getLogger(__name__)


@dataclass
class ExperimentStats:
    n: int
    size: int
    trials: int
    seed: int
    frac_rtd_lt_vcd: float
    frac_rtd_eq_vcd: float
    frac_rtd_gt_vcd: float
    rtd_histogram: dict
    vcd_histogram: dict


def check_feasible(n, size):
    max_n = settings.TEACHDIM_EXPERIMENT_MAX_N
    max_size = settings.TEACHDIM_EXPERIMENT_MAX_SIZE
    if n > max_n or size > max_size:
        raise InfeasibleError(
            f"n={n}, N={size} is beyond exact-measure feasibility "
            f"(keep n <= {max_n} and N <= {max_size}, or raise "
            f"TEACHDIM_EXPERIMENT_MAX_N / TEACHDIM_EXPERIMENT_MAX_SIZE)"
        )


def sample_class(n, size, rng):
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if not 1 <= size <= 1 << n:
        raise ParameterError(f"N={size} must lie in [1, 2^{n}]")
    return ConceptClass(n, tuple(rng.sample_distinct(size, 1 << n)))


def random_class(n, size, seed):
    """``size`` distinct concepts drawn uniformly without replacement from {0,1}^n."""
    return sample_class(n, size, SeededRNG(seed))


def trial_measures(n, size, seed, index):
    concept_class = sample_class(n, size, SeededRNG.stream(seed, index))
    return index, rtd(concept_class), vc_dimension(concept_class)


def split_chunks(indices, parts):
    indices = list(indices)
    parts = max(1, min(parts, len(indices)))
    return [indices[i::parts] for i in range(parts)]


def rtd_vcd_experiment(n, size, trials, seed, threads=1):
    """Exact RTD and VCD of ``trials`` random classes, summarized.

    With ``threads > 1`` the trials are split into that many chunks and dispatched as
    a Celery group. Trial streams depend only on (seed, index) and rows are reduced
    in index order, so the stats are identical for any chunking.
    """
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}")
    if not 1 <= size <= 1 << n:
        raise ParameterError(f"N={size} must lie in [1, 2^{n}]")
    check_feasible(n, size)
    logger.info(f"Running {trials} trials of n={n}, N={size}, seed={seed} on {threads} workers")

    if threads <= 1 or trials == 1:
        rows = [trial_measures(n, size, seed, index) for index in range(trials)]
    else:
        from celery import group

        from .tasks import run_trial_chunk

        chunks = split_chunks(range(trials), threads)
        job = group(run_trial_chunk.s(n, size, seed, chunk) for chunk in chunks)
        rows = [tuple(row) for part in job.apply_async().get() for row in part]
    rows.sort()

    lt = sum(1 for _, r, v in rows if r < v)
    eq = sum(1 for _, r, v in rows if r == v)
    gt = trials - lt - eq
    stats = ExperimentStats(
        n=n,
        size=size,
        trials=trials,
        seed=seed,
        frac_rtd_lt_vcd=lt / trials,
        frac_rtd_eq_vcd=eq / trials,
        frac_rtd_gt_vcd=gt / trials,
        rtd_histogram=dict(sorted(Counter(r for _, r, _ in rows).items())),
        vcd_histogram=dict(sorted(Counter(v for _, _, v in rows).items())),
    )
    logger.info(
        f"Experiment done: RTD<VCD {stats.frac_rtd_lt_vcd:.3f}, "
        f"RTD=VCD {stats.frac_rtd_eq_vcd:.3f}, RTD>VCD {stats.frac_rtd_gt_vcd:.3f}"
    )
    return stats
