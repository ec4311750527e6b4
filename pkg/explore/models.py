# explore/models.py
from django.db import models
import logging

logger = logging.getLogger(__name__)


class ExperimentRun(models.Model):
    class Kind(models.TextChoices):
        RANDOM = 'random', 'Random-class experiment'
        SEARCH = 'search', 'Extremal search'
        SWEEP = 'sweep', 'Exhaustive sweep'

    kind = models.CharField(max_length=10, choices=Kind.choices)
    seed = models.BigIntegerField(null=True, blank=True)
    parameters = models.JSONField(default=dict)
    result = models.JSONField(default=dict)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at', '-id']

    def __str__(self):
        return f"{self.get_kind_display()} #{self.pk} (seed {self.seed})"

    @classmethod
    def record(cls, kind, parameters, result, seed=None):
        # Seeds are unbounded ints; only those fitting the column are indexed.
        if seed is not None and not -2 ** 63 <= seed < 2 ** 63:
            seed = None
        run = cls.objects.create(kind=kind, seed=seed, parameters=parameters, result=result)
        logger.info(f"Recorded {kind} run {run.pk}")
        return run
