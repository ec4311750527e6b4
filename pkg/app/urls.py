# app/urls.py
from django.contrib import admin
from django.urls import path, include

urlpatterns = [
    path('admin/', admin.site.urls),
    path('api/', include('core.urls')),  # Analysis and bounds endpoints
    path('api/', include('explore.urls')),  # Recorded experiment runs
]
