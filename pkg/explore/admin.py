# explore/admin.py
from django.contrib import admin
from .models import ExperimentRun


@admin.register(ExperimentRun)
class ExperimentRunAdmin(admin.ModelAdmin):
    list_display = ('id', 'kind', 'seed', 'created_at')
    list_filter = ('kind',)
    search_fields = ('seed',)
    readonly_fields = ('kind', 'seed', 'parameters', 'result', 'created_at')
