from django.urls import path
from .api_views import ExperimentRunViewSet

urlpatterns = [
    path('runs/', ExperimentRunViewSet.as_view({'get': 'list'}), name='runs'),
    path('runs/<int:pk>/', ExperimentRunViewSet.as_view({'get': 'retrieve'}), name='run-detail'),
]
