# core/management/base.py
"""Shared plumbing for the teachdim management commands."""
import json
import logging

import psutil
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import (
    CapacityError,
    ConvergenceError,
    DomainError,
    InfeasibleError,
    InputError,
    ParameterError,
    TeachingError,
)

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def exit_code(exc):
    if isinstance(exc, (InfeasibleError, CapacityError, ConvergenceError)):
        return EXIT_INFEASIBLE
    if isinstance(exc, (InputError, DomainError, ParameterError)):
        return EXIT_USAGE
    return EXIT_FAILED


def default_threads():
    return psutil.cpu_count() or 1


class TeachingCommand(BaseCommand):
    """Base command: library errors become ``CommandError`` with the matching exit code."""

    requires_system_checks = []
    requires_migrations_checks = False

    def add_json_argument(self, parser):
        parser.add_argument('--json', action='store_true', help='Print a single JSON object instead of a table')

    def add_threads_argument(self, parser):
        parser.add_argument(
            '--threads', type=int, default=default_threads(),
            help='Maximum number of worker chunks (default: available CPUs)',
        )

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except TeachingError as e:
            logger.debug(f"{type(e).__name__}: {str(e)}")
            raise CommandError(str(e), returncode=exit_code(e)) from e

    def emit(self, options, data, render):
        if options.get('json'):
            self.stdout.write(json.dumps(data, indent=2))
        else:
            self.stdout.write(render())

    def fail_checks(self, message):
        raise CommandError(message, returncode=EXIT_FAILED)
