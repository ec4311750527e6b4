# explore/api_views.py
from rest_framework import viewsets
from .models import ExperimentRun
from .serializers import ExperimentRunSerializer
import logging

logger = logging.getLogger(__name__)


class ExperimentRunViewSet(viewsets.ReadOnlyModelViewSet):
    queryset = ExperimentRun.objects.all()
    serializer_class = ExperimentRunSerializer

    def get_queryset(self):
        queryset = super().get_queryset()
        kind = self.request.query_params.get('kind')
        if kind:
            logger.debug(f"Filtering runs by kind={kind}")
            queryset = queryset.filter(kind=kind)
        return queryset
