from django.urls import path
from . import views
from .api_views import AnalyzeView, BoundsView

urlpatterns = [
    path('health/', views.health_check, name='health_check'),
    path('analyze/', AnalyzeView.as_view(), name='analyze'),
    path('bounds/', BoundsView.as_view(), name='bounds'),
]
