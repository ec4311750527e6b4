# core/api_views.py
from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView
from .bounds import bound_chain
from .exceptions import CapacityError, ConvergenceError, TeachingError
from .formats import parse_concept_class
from .reports import analyze_class
from .serializers import (
    AnalysisReportSerializer,
    AnalyzeRequestSerializer,
    BoundReportSerializer,
    BoundsQuerySerializer,
)
import logging

logger = logging.getLogger(__name__)


def error_status(exc):
    if isinstance(exc, (CapacityError, ConvergenceError)):
        return status.HTTP_422_UNPROCESSABLE_ENTITY
    return status.HTTP_400_BAD_REQUEST


class AnalyzeView(APIView):
    def post(self, request):
        request_serializer = AnalyzeRequestSerializer(data=request.data)
        request_serializer.is_valid(raise_exception=True)
        data = request_serializer.validated_data
        try:
            concept_class = parse_concept_class(data['text'], source='request')
            report = analyze_class(concept_class, data.get('profile_max'))
        except TeachingError as e:
            logger.warning(f"Rejected analysis request: {str(e)}")
            return Response({'error': str(e)}, status=error_status(e))
        return Response(AnalysisReportSerializer(report).data)


class BoundsView(APIView):
    def get(self, request):
        query = BoundsQuerySerializer(data=request.query_params)
        query.is_valid(raise_exception=True)
        data = query.validated_data
        try:
            report = bound_chain(data['d'], data.get('alpha'))
        except TeachingError as e:
            logger.warning(f"Rejected bounds request d={data['d']}: {str(e)}")
            return Response({'error': str(e)}, status=error_status(e))
        return Response(BoundReportSerializer(report).data)
