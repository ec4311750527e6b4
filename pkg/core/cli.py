# core/cli.py
"""In-process entry point: ``run(argv)`` behaves like ``manage.py <argv>`` and returns the exit code."""
import os
import sys


def run(argv):
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    from django.core.management import execute_from_command_line

    try:
        execute_from_command_line(['teachdim', *argv])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        if isinstance(exc.code, int):
            return exc.code
        print(exc.code, file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
