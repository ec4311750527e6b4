import logging

from celery import shared_task

logger = logging.getLogger(__name__)


@shared_task
def run_trial_chunk(n, size, seed, indices):
    """Exact (index, rtd, vcd) rows for a chunk of experiment trials."""
    from .experiments import trial_measures

    logger.debug(f"Running trials {indices[:3]}... ({len(indices)} total) for n={n}, N={size}")
    return [list(trial_measures(n, size, seed, index)) for index in indices]


@shared_task(bind=True, max_retries=3)
def record_experiment(self, n, size, trials, seed):
    """Run the random-class experiment in the background and store it as a run."""
    from .experiments import rtd_vcd_experiment
    from .models import ExperimentRun
    from .serializers import ExperimentStatsSerializer

    try:
        stats = rtd_vcd_experiment(n, size, trials, seed)
    except Exception as e:
        logger.error(f"Experiment n={n}, N={size}, seed={seed} failed: {str(e)}")
        raise self.retry(exc=e, countdown=2 ** self.request.retries)
    run = ExperimentRun.record(
        ExperimentRun.Kind.RANDOM,
        {"n": n, "size": size, "trials": trials},
        ExperimentStatsSerializer(stats).data,
        seed=seed,
    )
    return run.id


@shared_task
def check_class_chunk(entries):
    """Corpus checks for ``[name, n, concepts]`` entries, as plain dicts."""
    from dataclasses import asdict

    from core.concepts import ConceptClass

    from .corpus import check_class

    return [asdict(check_class(name, ConceptClass(n, tuple(concepts)))) for name, n, concepts in entries]
